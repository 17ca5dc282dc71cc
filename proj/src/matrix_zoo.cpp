#include "netlap/matrix_zoo.hpp"

#include <algorithm>
#include <sstream>

namespace netlap {

Orientation Orientation::canonical(std::size_t edge_count) {
  return Orientation(std::vector<Source>(edge_count, Source::Smaller));
}

Orientation Orientation::parse(std::string_view text) {
  std::vector<Source> sources;
  sources.reserve(text.size());
  for (char ch : text) {
    if (ch == '<') {
      sources.push_back(Source::Smaller);
    } else if (ch == '>') {
      sources.push_back(Source::Larger);
    } else {
      throw std::invalid_argument(std::string("orientation character '") + ch + "' is not '<' or '>'");
    }
  }
  return Orientation(std::move(sources));
}

Orientation Orientation::random(std::size_t edge_count, std::mt19937_64& rng) {
  std::vector<Source> sources(edge_count);
  for (auto& s : sources) s = (rng() & 1U) != 0 ? Source::Larger : Source::Smaller;
  return Orientation(std::move(sources));
}

std::string Orientation::str() const {
  std::string out;
  for (Source s : sources_) out.push_back(s == Source::Smaller ? '<' : '>');
  return out;
}

// ---------------------------------------------------------------------------

GMatrix adjacency_matrix(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  GMatrix a(n, n);
  for (const Edge& e : g.edges()) {
    const long s = static_cast<long>(e.sign);
    a(e.u, e.v) = s;
    a(e.v, e.u) = s;
  }
  return a;
}

GMatrix degree_matrix(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  GMatrix d(n, n);
  for (const Edge& e : g.edges()) {
    d(e.u, e.u) += 1;
    d(e.v, e.v) += 1;
  }
  return d;
}

GMatrix net_degree_matrix(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  GMatrix d(n, n);
  for (const Edge& e : g.edges()) {
    const long s = static_cast<long>(e.sign);
    d(e.u, e.u) += s;
    d(e.v, e.v) += s;
  }
  return d;
}

GMatrix net_incidence_matrix(const SignedGraph& g) {
  GMatrix m(static_cast<std::size_t>(g.vertex_count()), g.edge_count());
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edge(idx);
    const GaussianInt entry = e.negative() ? GaussianInt::i() : GaussianInt(1);
    m(e.u, idx) = entry;
    m(e.v, idx) = entry;
  }
  return m;
}

GMatrix oriented_net_incidence_matrix(const SignedGraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw std::invalid_argument("orientation has " + std::to_string(o.size()) + " entries for " +
                                std::to_string(g.edge_count()) + " edges");
  }
  GMatrix m = net_incidence_matrix(g);
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const auto target = static_cast<std::size_t>(o.target_vertex(g.edge(idx), idx));
    m(target, idx) = -m(target, idx);
  }
  return m;
}

GMatrix laplacian(const SignedGraph& g) { return degree_matrix(g) - adjacency_matrix(g); }
GMatrix signless_laplacian(const SignedGraph& g) { return degree_matrix(g) + adjacency_matrix(g); }
GMatrix net_laplacian(const SignedGraph& g) { return net_degree_matrix(g) - adjacency_matrix(g); }
GMatrix signless_net_laplacian(const SignedGraph& g) { return net_degree_matrix(g) + adjacency_matrix(g); }

MatrixBundle build_bundle(const SignedGraph& g, const Orientation& o) {
  MatrixBundle b;
  b.adjacency = adjacency_matrix(g);
  b.degree = degree_matrix(g);
  b.net_degree = net_degree_matrix(g);
  b.laplacian = b.degree - b.adjacency;
  b.signless_laplacian = b.degree + b.adjacency;
  b.net_laplacian = b.net_degree - b.adjacency;
  b.signless_net_laplacian = b.net_degree + b.adjacency;
  b.net_incidence = net_incidence_matrix(g);
  b.oriented_net_incidence = oriented_net_incidence_matrix(g, o);
  return b;
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

std::string first_mismatch(const GMatrix& lhs, const GMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    return "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
           std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  }
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (!(lhs(r, c) == rhs(r, c))) {
        return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " +
               lhs(r, c).str() + " vs " + rhs(r, c).str();
      }
    }
  }
  return {};
}

void add_equality(Report& report, std::string name, const GMatrix& lhs, const GMatrix& rhs) {
  std::string witness = first_mismatch(lhs, rhs);
  const bool pass = witness.empty();
  report.add(std::move(name), pass, std::move(witness));
}

GMatrix absolute(const GMatrix& a) {
  GMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = mpz_class(abs(a(r, c).re()));
  return out;
}

mpq_class squared(const mpq_class& v) { return v * v; }

std::string rank_pair(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

Report verify_factorizations(const MatrixBundle& b) {
  Report report;
  const GMatrix& m = b.net_incidence;
  const GMatrix& nn = b.oriented_net_incidence;
  const GMatrix abs_adj = absolute(b.adjacency);
  add_equality(report, "factorization Q± = M±(M±)^T", b.signless_net_laplacian, m * m.transpose());
  add_equality(report, "factorization L± = N±(N±)^T", b.net_laplacian, nn * nn.transpose());
  add_equality(report, "factorization Q_|G| = M±(M±)*", b.degree + abs_adj, m * m.conj_transpose());
  add_equality(report, "factorization L_|G| = N±(N±)*", b.degree - abs_adj, nn * nn.conj_transpose());
  return report;
}

namespace {

QuadraticForm quadratic_form(const SignedGraph& g, const RationalVector& x, bool signless) {
  if (x.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw DimensionError("vector length " + std::to_string(x.size()) + " for " +
                         std::to_string(g.vertex_count()) + " vertices");
  }
  const GMatrix mat = signless ? signless_net_laplacian(g) : net_laplacian(g);
  const RationalVector mx = mat.apply(x);
  QuadraticForm form;
  for (std::size_t k = 0; k < x.size(); ++k) form.matrix_value += x[k] * mx[k];
  for (const Edge& e : g.edges()) {
    const mpq_class term = signless ? squared(x[e.u] + x[e.v]) : squared(x[e.u] - x[e.v]);
    if (e.negative()) {
      form.edge_sum -= term;
    } else {
      form.edge_sum += term;
    }
  }
  return form;
}

// Positive-edge and negative-edge squared sums, separately.
std::pair<mpq_class, mpq_class> split_sums(const SignedGraph& g, const RationalVector& x, bool signless) {
  mpq_class pos;
  mpq_class neg;
  for (const Edge& e : g.edges()) {
    const mpq_class term = signless ? squared(x[e.u] + x[e.v]) : squared(x[e.u] - x[e.v]);
    (e.negative() ? neg : pos) += term;
  }
  return {pos, neg};
}

std::string vector_str(const RationalVector& x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.size(); ++k) out += (k ? "," : "") + x[k].get_str();
  return out + ")";
}

}  // namespace

QuadraticForm quadratic_form_L(const SignedGraph& g, const RationalVector& x) {
  return quadratic_form(g, x, false);
}

QuadraticForm quadratic_form_Q(const SignedGraph& g, const RationalVector& x) {
  return quadratic_form(g, x, true);
}

Report kernel_balance_check(const SignedGraph& g) {
  Report report;
  for (bool signless : {false, true}) {
    const GMatrix mat = signless ? signless_net_laplacian(g) : net_laplacian(g);
    const std::string label = signless ? "Q±" : "L±";
    const auto basis = kernel_basis(mat);
    if (basis.empty()) {
      report.add("kernel balance " + label + " (kernel trivial)", true);
      continue;
    }
    bool pass = true;
    std::string witness;
    for (const RationalVector& x : basis) {
      const RationalVector image = mat.apply(x);
      const bool in_kernel =
          std::all_of(image.begin(), image.end(), [](const mpq_class& v) { return sgn(v) == 0; });
      auto [pos, neg] = split_sums(g, x, signless);
      if (!in_kernel || pos != neg) {
        pass = false;
        witness = "x=" + vector_str(x) + ": " + pos.get_str() + " vs " + neg.get_str();
        break;
      }
    }
    report.add("kernel balance " + label + " (dim " + std::to_string(basis.size()) + ")", pass,
               std::move(witness));
  }
  return report;
}

Report verify_negation_relations(const SignedGraph& g) {
  const SignedGraph neg = negate(g);
  Report report;
  add_equality(report, "negation L_{-G} = Q_G", laplacian(neg), signless_laplacian(g));
  add_equality(report, "negation Q_{-G} = L_G", signless_laplacian(neg), laplacian(g));
  add_equality(report, "negation L±_{-G} = -L±_G", net_laplacian(neg), -net_laplacian(g));
  add_equality(report, "negation Q±_{-G} = -Q±_G", signless_net_laplacian(neg), -signless_net_laplacian(g));
  return report;
}

Report verify_rank_relations(const SignedGraph& g, const Orientation& o) {
  const SignedGraph plain = underlying(g);
  const std::size_t r_m = rank(net_incidence_matrix(g));
  const std::size_t r_n = rank(oriented_net_incidence_matrix(g, o));
  const std::size_t r_m_plain = rank(net_incidence_matrix(plain));
  const std::size_t r_n_plain = rank(oriented_net_incidence_matrix(plain, o));
  const std::size_t r_q_plain = rank(signless_laplacian(plain));
  const std::size_t r_q = rank(signless_net_laplacian(g));
  const std::size_t r_l = rank(net_laplacian(g));

  Report report;
  report.add("rank M± = rank M_|G|", r_m == r_m_plain, rank_pair(r_m, r_m_plain));
  report.add("rank N± = rank N_|G|", r_n == r_n_plain, rank_pair(r_n, r_n_plain));
  report.add("rank M± = rank Q_|G|", r_m == r_q_plain, rank_pair(r_m, r_q_plain));
  report.add("rank M± >= rank Q±", r_m >= r_q, rank_pair(r_m, r_q));
  report.add("rank N± >= rank L±", r_n >= r_l, rank_pair(r_n, r_l));
  return report;
}

std::string emit_oriented_dot(const SignedGraph& g, const Orientation& o) {
  const GMatrix nmat = oriented_net_incidence_matrix(g, o);
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edge(idx);
    // project both nonzero entries onto the axis they live on
    const GaussianInt& zu = nmat(e.u, idx);
    const GaussianInt& zv = nmat(e.v, idx);
    const mpz_class pu = e.negative() ? zu.im() : zu.re();
    const mpz_class pv = e.negative() ? zv.im() : zv.re();
    const int tail = pu > pv ? e.u : e.v;
    const int head = tail == e.u ? e.v : e.u;
    out << "  " << tail + 1 << " -> " << head + 1;
    if (e.negative()) {
      out << " [label=\"-\", style=dashed];\n";
    } else {
      out << " [label=\"+\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace netlap
