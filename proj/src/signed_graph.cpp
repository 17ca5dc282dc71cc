#include "netlap/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace netlap {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
    Edge& e = edges_[idx];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw GraphError("edge " + std::to_string(idx + 1) + ": vertex out of range");
    }
    if (e.u == e.v) throw GraphError("edge " + std::to_string(idx + 1) + ": loop");
    if (e.sign != Sign::Positive && e.sign != Sign::Negative) {
      throw GraphError("edge " + std::to_string(idx + 1) + ": invalid sign");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw GraphError("edge " + std::to_string(idx + 1) + ": duplicate edge {" +
                       std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}");
    }
  }
}

std::size_t SignedGraph::negative_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.negative(); }));
}

std::vector<std::vector<std::pair<int, std::size_t>>> SignedGraph::adjacency_lists() const {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(n_));
  for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
    adj[edges_[idx].u].emplace_back(edges_[idx].v, idx);
    adj[edges_[idx].v].emplace_back(edges_[idx].u, idx);
  }
  return adj;
}

bool SignedGraph::is_connected() const {
  if (n_ <= 1) return true;
  auto adj = adjacency_lists();
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, idx] : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw GraphError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

Sign parse_sign(std::string_view tok, std::size_t line_no) {
  if (tok == "+" || tok == "1" || tok == "+1") return Sign::Positive;
  if (tok == "-" || tok == "-1") return Sign::Negative;
  throw GraphError("line " + std::to_string(line_no) + ": bad sign '" + std::string(tok) + "'");
}

}  // namespace

SignedGraph parse_edge_list(std::string_view text) {
  long n = -1;
  long m = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto tok = split_ws(line);
    if (n < 0) {
      if (tok.size() != 2) throw GraphError("line " + std::to_string(line_no) + ": expected 'n m'");
      n = parse_int(tok[0], line_no);
      m = parse_int(tok[1], line_no);
      if (n < 0 || m < 0) throw GraphError("line " + std::to_string(line_no) + ": negative size");
      continue;
    }
    if (tok.size() != 3) throw GraphError("line " + std::to_string(line_no) + ": expected 'u v s'");
    if (static_cast<long>(edges.size()) == m) {
      throw GraphError("line " + std::to_string(line_no) + ": more than " + std::to_string(m) +
                       " edges");
    }
    long u = parse_int(tok[0], line_no);
    long v = parse_int(tok[1], line_no);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), parse_sign(tok[2], line_no)});
  }
  if (n < 0) throw GraphError("missing header line 'n m'");
  if (static_cast<long>(edges.size()) != m) {
    throw GraphError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return SignedGraph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << (e.negative() ? '-' : '+') << '\n';
  }
  return out.str();
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = flip(e.sign);
  return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph underlying(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = Sign::Positive;
  return SignedGraph(g.vertex_count(), std::move(edges));
}

std::string emit_dot(const SignedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u + 1 << " -- " << e.v + 1;
    if (e.negative()) {
      out << " [label=\"-\", style=dashed];\n";
    } else {
      out << " [label=\"+\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Subgraph classification

SubgraphMask SubgraphMask::all(const SignedGraph& g) {
  SubgraphMask mask;
  mask.edges.resize(g.edge_count());
  std::iota(mask.edges.begin(), mask.edges.end(), std::size_t{0});
  return mask;
}

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Tree: return "tree";
    case ComponentKind::OddUnicyclic: return "odd-unicyclic";
    case ComponentKind::EvenUnicyclic: return "even-unicyclic";
    case ComponentKind::Other: return "other";
  }
  return "?";
}

bool ComponentReport::rooted_tu_at(int vertex) const {
  return tu && tree_count == 1 &&
         components[component_of.at(static_cast<std::size_t>(vertex))].kind == ComponentKind::Tree;
}

bool ComponentReport::all_odd_unicyclic() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Component& c) { return c.kind == ComponentKind::OddUnicyclic; });
}

ComponentReport classify_spanning_subgraph(const SignedGraph& g, const SubgraphMask& mask) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
  for (std::size_t idx : mask.edges) {
    if (idx >= g.edge_count()) throw GraphError("mask edge index out of range");
    if (used[idx]) throw GraphError("mask repeats edge index");
    used[idx] = true;
    const Edge& e = g.edge(idx);
    adj[e.u].emplace_back(e.v, idx);
    adj[e.v].emplace_back(e.u, idx);
  }

  ComponentReport report;
  constexpr auto unset = static_cast<std::size_t>(-1);
  report.component_of.assign(n, unset);
  // BFS 2-colouring per component: an edge joining equal colours closes an odd cycle.
  std::vector<int> colour(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (report.component_of[start] != unset) continue;
    const std::size_t id = report.components.size();
    Component comp;
    bool bipartite = true;
    std::vector<int> queue{static_cast<int>(start)};
    report.component_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      comp.vertices.push_back(v);
      for (auto [w, idx] : adj[v]) {
        if (report.component_of[w] == unset) {
          report.component_of[w] = id;
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          bipartite = false;
        }
        if (v < w) comp.edges.push_back(idx);
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    for (std::size_t idx : comp.edges) comp.negative_edges += g.edge(idx).negative() ? 1 : 0;

    const std::size_t nv = comp.vertices.size();
    const std::size_t ne = comp.edges.size();
    if (ne + 1 == nv) {
      comp.kind = ComponentKind::Tree;
    } else if (ne == nv) {
      comp.kind = bipartite ? ComponentKind::EvenUnicyclic : ComponentKind::OddUnicyclic;
    } else {
      comp.kind = ComponentKind::Other;
    }
    report.components.push_back(std::move(comp));
  }

  report.tu = true;
  for (const Component& c : report.components) {
    if (c.negative()) ++report.b_minus;
    switch (c.kind) {
      case ComponentKind::Tree: ++report.tree_count; break;
      case ComponentKind::OddUnicyclic: ++report.odd_unicyclic_count; break;
      default: report.tu = false; break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generators

Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "paw") return Family::Paw;
  if (name == "extended_paw" || name == "extended-paw") return Family::ExtendedPaw;
  if (name == "random") return Family::Random;
  throw GraphError("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Paw: return "paw";
    case Family::ExtendedPaw: return "extended_paw";
    case Family::Random: return "random";
  }
  return "?";
}

namespace {

std::vector<Edge> apply_signs(std::vector<Edge> edges, const std::string& signs) {
  if (signs.empty()) return edges;
  if (signs.size() != edges.size()) {
    throw GraphError("sign pattern has " + std::to_string(signs.size()) + " entries, need " +
                     std::to_string(edges.size()));
  }
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    if (signs[idx] == '+') {
      edges[idx].sign = Sign::Positive;
    } else if (signs[idx] == '-') {
      edges[idx].sign = Sign::Negative;
    } else {
      throw GraphError("sign pattern may only contain '+' and '-'");
    }
  }
  return edges;
}

// Uniform double in [0,1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

SignedGraph generate(Family family, const GeneratorParams& params) {
  const int n = params.n;
  std::vector<Edge> edges;
  switch (family) {
    case Family::Paw:
      return SignedGraph(4, {{0, 1, Sign::Positive},
                             {1, 2, Sign::Negative},
                             {2, 3, Sign::Negative},
                             {1, 3, Sign::Positive}});
    case Family::ExtendedPaw:
      return SignedGraph(5, {{0, 1, Sign::Positive},
                             {1, 2, Sign::Negative},
                             {2, 3, Sign::Positive},
                             {3, 4, Sign::Negative},
                             {2, 4, Sign::Positive}});
    case Family::Path:
      if (n < 1) throw GraphError("path needs n >= 1");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, Sign::Positive});
      return SignedGraph(n, apply_signs(std::move(edges), params.signs));
    case Family::Cycle:
      if (n < 3) throw GraphError("cycle needs n >= 3");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, Sign::Positive});
      edges.push_back({0, n - 1, Sign::Positive});
      return SignedGraph(n, apply_signs(std::move(edges), params.signs));
    case Family::Complete:
      if (n < 1) throw GraphError("complete graph needs n >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::Positive});
      return SignedGraph(n, apply_signs(std::move(edges), params.signs));
    case Family::Random: {
      if (n < 1) throw GraphError("random graph needs n >= 1");
      if (!(params.p >= 0.0 && params.p <= 1.0) || !(params.q >= 0.0 && params.q <= 1.0)) {
        throw GraphError("probabilities p and q must lie in [0,1]");
      }
      std::mt19937_64 rng(params.seed);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          // both draws are always taken so the stream position depends only on the pair
          const double keep = unit_draw(rng);
          const double neg = unit_draw(rng);
          if (keep < params.p) {
            edges.push_back({u, v, neg < params.q ? Sign::Negative : Sign::Positive});
          }
        }
      }
      return SignedGraph(n, std::move(edges));
    }
  }
  throw GraphError("unknown family");
}

}  // namespace netlap
