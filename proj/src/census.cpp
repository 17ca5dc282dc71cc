#include "netlap/census.hpp"

#include <numeric>

namespace netlap {

namespace {

void require_budget(std::size_t m, std::size_t k, std::uint64_t budget) {
  if (k > m) return;
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), m, k);
  if (count > mpz_class(std::to_string(budget))) {
    throw CensusError(CensusError::Kind::BudgetExceeded,
                      "C(" + std::to_string(m) + "," + std::to_string(k) + ") = " + count.get_str() +
                          " subsets exceeds the enumeration budget of " + std::to_string(budget));
  }
}

void require_connected(const SignedGraph& g, const char* what) {
  if (!g.is_connected()) {
    throw CensusError(CensusError::Kind::Disconnected, std::string(what) + " requires a connected graph");
  }
}

void require_vertex(const SignedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw CensusError(CensusError::Kind::InvalidArgument, "vertex " + std::to_string(v + 1) + " out of range");
  }
}

mpz_class real_part_or_throw(const GaussianInt& z, const char* what) {
  if (!z.is_real()) throw std::logic_error(std::string(what) + " has nonzero imaginary part: " + z.str());
  return z.re();
}

// Union-find with bipartite parity and a per-component cycle flag, undone by
// rollback so a depth-first subset search can extend and retract edges.
class CycleTracker {
 public:
  enum class Mode { Forest, OddUnicyclic };

  CycleTracker(int n, Mode mode) : mode_(mode), parent_(n), parity_(n, 0), size_(n, 1), cyclic_(n, false) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int v) const {
    int p = 0;
    while (parent_[v] != v) {
      p ^= parity_[v];
      v = parent_[v];
    }
    return {v, p};
  }

  bool cyclic(int v) const { return cyclic_[find(v).first]; }

  /// Adds edge {u,v} unless it would create a component that can never become
  /// a tree (Forest) or odd-unicyclic graph (OddUnicyclic).
  bool add(int u, int v) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      if (mode_ == Mode::Forest || cyclic_[ru] || pu != pv) return false;
      cyclic_[ru] = true;
      undo_.push_back({Undo::Kind::Cycle, ru, ru, false});
      return true;
    }
    if (cyclic_[ru] && cyclic_[rv]) return false;
    if (size_[ru] < size_[rv]) std::swap(ru, rv);
    parent_[rv] = ru;
    parity_[rv] = pu ^ pv ^ 1;
    size_[ru] += size_[rv];
    undo_.push_back({Undo::Kind::Merge, rv, ru, cyclic_[ru]});
    cyclic_[ru] = cyclic_[ru] || cyclic_[rv];
    return true;
  }

  void rollback() {
    const Undo u = undo_.back();
    undo_.pop_back();
    if (u.kind == Undo::Kind::Cycle) {
      cyclic_[u.root] = false;
      return;
    }
    cyclic_[u.root] = u.root_cyclic;
    size_[u.root] -= size_[u.child];
    parent_[u.child] = u.child;
    parity_[u.child] = 0;
  }

 private:
  struct Undo {
    enum class Kind { Cycle, Merge } kind;
    int child;
    int root;
    bool root_cyclic;
  };

  Mode mode_;
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> size_;
  std::vector<bool> cyclic_;
  std::vector<Undo> undo_;
};

// Depth-first search over k-edge subsets in lexicographic order, pruned by
// CycleTracker. `acyclic_anchor` additionally rejects any edge that would
// put a cycle into the anchor's component.
template <typename Visit>
void search_subsets(const SignedGraph& g, std::size_t k, CycleTracker::Mode mode, std::optional<int> acyclic_anchor,
                    Visit&& visit) {
  const std::size_t m = g.edge_count();
  CycleTracker tracker(g.vertex_count(), mode);
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    const std::size_t need = k - chosen.size();
    for (std::size_t idx = start; idx + need <= m; ++idx) {
      const Edge& e = g.edge(idx);
      if (!tracker.add(e.u, e.v)) continue;
      if (acyclic_anchor && tracker.cyclic(*acyclic_anchor)) {
        tracker.rollback();
        continue;
      }
      chosen.push_back(idx);
      self(self, idx + 1);
      chosen.pop_back();
      tracker.rollback();
    }
  };
  recurse(recurse, 0);
}

mpz_class four_pow(std::size_t c) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 4, c);
  return out;
}

}  // namespace

void for_each_subset(std::size_t m, std::size_t k, std::uint64_t budget,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > m) return;
  require_budget(m, k, budget);
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  while (true) {
    visit(s);
    // advance to the next combination
    std::size_t pos = k;
    while (pos > 0 && s[pos - 1] == m - k + pos - 1) --pos;
    if (pos == 0) return;
    ++s[pos - 1];
    for (std::size_t j = pos; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// Spanning trees

TreeCounts enumerate_spanning_trees(const SignedGraph& g, std::uint64_t budget) {
  require_connected(g, "spanning-tree enumeration");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const std::size_t k = n == 0 ? 0 : n - 1;
  require_budget(g.edge_count(), k, budget);
  TreeCounts counts;
  // n-1 acyclic edges on n vertices always form a spanning tree
  search_subsets(g, k, CycleTracker::Mode::Forest, std::nullopt, [&](const std::vector<std::size_t>& s) {
    std::size_t neg = 0;
    for (std::size_t idx : s) neg += g.edge(idx).negative() ? 1 : 0;
    (neg % 2 == 0 ? counts.t_plus : counts.t_minus) += 1;
  });
  return counts;
}

bool TreeMinors::anchor_independent() const {
  for (std::size_t i = 1; i < net.size(); ++i) {
    if (net[i] != net[0] || plain[i] != plain[0]) return false;
  }
  return true;
}

TreeMinors tree_balance_via_minor(const SignedGraph& g) {
  if (g.vertex_count() < 2) {
    throw CensusError(CensusError::Kind::InvalidArgument, "tree minors need at least 2 vertices");
  }
  const GMatrix lnet = net_laplacian(g);
  const GMatrix lplain = laplacian(underlying(g));
  TreeMinors minors;
  minors.applicable = g.is_connected();
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.vertex_count()); ++i) {
    minors.net.push_back(real_part_or_throw(det(delete_rows_cols(lnet, {i}, {i})), "det L±(i)"));
    minors.plain.push_back(real_part_or_throw(det(delete_rows_cols(lplain, {i}, {i})), "det L_|G|(i)"));
  }
  return minors;
}

TreeCounts tree_counts_via_corollary(const SignedGraph& g) {
  require_connected(g, "tree counting via minors");
  const TreeMinors minors = tree_balance_via_minor(g);
  if (!minors.anchor_independent()) throw std::logic_error("tree minors depend on the anchor vertex");
  const mpz_class sum = minors.plain[0] + minors.net[0];
  const mpz_class diff = minors.plain[0] - minors.net[0];
  if (mpz_even_p(sum.get_mpz_t()) == 0 || sgn(sum) < 0 || sgn(diff) < 0) {
    throw std::logic_error("tree minors " + minors.plain[0].get_str() + ", " + minors.net[0].get_str() +
                           " do not yield nonnegative integral counts");
  }
  const mpz_class plus = sum / 2;
  const mpz_class minus = diff / 2;
  if (!plus.fits_ulong_p() || !minus.fits_ulong_p()) throw std::overflow_error("tree count exceeds 64 bits");
  return {plus.get_ui(), minus.get_ui()};
}

// ---------------------------------------------------------------------------
// TU-subgraphs

mpz_class TuRecord::weight() const { return four_pow(c); }

TUCensus enumerate_rooted_tu(const SignedGraph& g, int anchor, std::uint64_t budget) {
  require_vertex(g, anchor);
  require_connected(g, "rooted TU enumeration");
  const auto k = static_cast<std::size_t>(g.vertex_count() - 1);
  require_budget(g.edge_count(), k, budget);

  TUCensus census;
  census.anchor = anchor;
  search_subsets(g, k, CycleTracker::Mode::OddUnicyclic, anchor, [&](const std::vector<std::size_t>& s) {
    const ComponentReport rep = classify_spanning_subgraph(g, SubgraphMask{s});
    if (!rep.rooted_tu_at(anchor)) {
      throw std::logic_error("pruned search accepted a mask that is not rooted TU");
    }
    TuRecord rec{s, rep.odd_unicyclic_count, rep.b_minus};
    (rec.even() ? census.sum_even : census.sum_odd) += rec.weight();
    census.records.push_back(std::move(rec));
  });
  return census;
}

GaussianInt rooted_tu_via_minor(const SignedGraph& g, int anchor) {
  require_vertex(g, anchor);
  const auto i = static_cast<std::size_t>(anchor);
  GaussianInt d = det(delete_rows_cols(signless_net_laplacian(g), {i}, {i}));
  real_part_or_throw(d, "det Q±(i)");
  return d;
}

FullTUCensus enumerate_full_tu(const SignedGraph& g, std::uint64_t budget) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  FullTUCensus census;
  if (g.edge_count() < n) return census;
  require_budget(g.edge_count(), n, budget);
  search_subsets(g, n, CycleTracker::Mode::OddUnicyclic, std::nullopt, [&](const std::vector<std::size_t>& s) {
    const ComponentReport rep = classify_spanning_subgraph(g, SubgraphMask{s});
    if (!rep.all_odd_unicyclic()) {
      throw std::logic_error("pruned search accepted a mask that is not all odd-unicyclic");
    }
    TuRecord rec{s, rep.odd_unicyclic_count, rep.b_minus};
    (rec.even() ? census.sum_even : census.sum_odd) += rec.weight();
    census.records.push_back(std::move(rec));
  });
  return census;
}

GaussianInt det_q_via_matrix(const SignedGraph& g) {
  GaussianInt d = det(signless_net_laplacian(g));
  real_part_or_throw(d, "det Q±");
  return d;
}

// ---------------------------------------------------------------------------
// Incidence minors

MinorCheck incidence_minor_oracle(const SignedGraph& g, std::optional<int> anchor,
                                  const std::vector<std::size_t>& edges, const Orientation* orientation) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (anchor) require_vertex(g, *anchor);
  const std::size_t expected = anchor ? n - 1 : n;
  if (edges.size() != expected) {
    throw CensusError(CensusError::Kind::InvalidArgument,
                      "incidence minor needs " + std::to_string(expected) + " edges, got " +
                          std::to_string(edges.size()));
  }
  const GMatrix inc = orientation ? oriented_net_incidence_matrix(g, *orientation) : net_incidence_matrix(g);
  IndexSet drop;
  if (anchor) drop.insert(static_cast<std::size_t>(*anchor));

  MinorCheck check;
  check.det = det(select_columns(inc, edges, drop));
  check.structure = classify_spanning_subgraph(g, SubgraphMask{edges});
  const ComponentReport& rep = check.structure;
  const GaussianInt sign_b = rep.b_minus % 2 == 0 ? GaussianInt(1) : GaussianInt(-1);

  if (orientation) {
    // any cycle kills an oriented minor; only spanning trees survive
    const bool spanning_tree = anchor && rep.components.size() == 1;
    check.predicted_square = spanning_tree ? sign_b : GaussianInt(0);
  } else if (anchor) {
    check.predicted_square = rep.rooted_tu_at(*anchor) ? GaussianInt(four_pow(rep.odd_unicyclic_count)) * sign_b
                                                       : GaussianInt(0);
  } else {
    check.predicted_square =
        rep.all_odd_unicyclic() ? GaussianInt(four_pow(rep.odd_unicyclic_count)) * sign_b : GaussianInt(0);
  }
  return check;
}

bool TreeMinorCheck::consistent() const {
  const GaussianInt target = positive ? GaussianInt(1) : GaussianInt(-1);
  return oriented_det * oriented_det == target && plain_det * plain_det == target;
}

TreeMinorCheck tree_minor_oracle(const SignedGraph& tree, int vertex, const Orientation& orientation) {
  require_vertex(tree, vertex);
  if (tree.edge_count() == 0 || tree.edge_count() + 1 != static_cast<std::size_t>(tree.vertex_count()) ||
      !tree.is_connected()) {
    throw CensusError(CensusError::Kind::InvalidArgument, "input is not a tree with at least one edge");
  }
  const IndexSet drop{static_cast<std::size_t>(vertex)};
  TreeMinorCheck check;
  check.oriented_det = det(delete_rows_cols(oriented_net_incidence_matrix(tree, orientation), drop, {}));
  check.plain_det = det(delete_rows_cols(net_incidence_matrix(tree), drop, {}));
  check.positive = tree.negative_edge_count() % 2 == 0;
  return check;
}

CauchyBinetExpansion cauchy_binet_expansion(const SignedGraph& g, int anchor, const Orientation& orientation,
                                            std::uint64_t budget) {
  require_vertex(g, anchor);
  const auto i = static_cast<std::size_t>(anchor);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const GMatrix nmat = oriented_net_incidence_matrix(g, orientation);

  CauchyBinetExpansion cb;
  cb.minor = det(delete_rows_cols(net_laplacian(g), {i}, {i}));
  for_each_subset(g.edge_count(), n - 1, budget, [&](const std::vector<std::size_t>& s) {
    const GaussianInt d = det(select_columns(nmat, s, {i}));
    const ComponentReport rep = classify_spanning_subgraph(g, SubgraphMask{s});
    const bool spanning_tree = rep.components.size() == 1;
    if (d.is_zero() == spanning_tree) cb.support_is_spanning_trees = false;
    if (!d.is_zero()) {
      cb.term_sum += d * d;
      cb.nonzero_subsets.push_back(s);
    }
  });
  return cb;
}

}  // namespace netlap
