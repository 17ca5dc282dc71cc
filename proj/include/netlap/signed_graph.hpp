#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netlap {

/// Raised for malformed graph input or invalid construction parameters.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

inline Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

/// An edge between 0-based vertices u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Positive;

  bool negative() const { return sign == Sign::Negative; }
  bool operator==(const Edge&) const = default;
};

/// Simple signed graph. Edge order is fixed at construction and defines the
/// column order of every incidence matrix built from the graph.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validates and canonicalizes endpoints to u < v without reordering.
  SignedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t idx) const { return edges_.at(idx); }

  std::size_t negative_edge_count() const;
  bool is_connected() const;
  /// Neighbour lists as (vertex, edge index) pairs.
  std::vector<std::vector<std::pair<int, std::size_t>>> adjacency_lists() const;

  bool operator==(const SignedGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

SignedGraph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list; vertices printed 1-based, signs as `+`/`-`.
std::string to_edge_list(const SignedGraph& g);

SignedGraph negate(const SignedGraph& g);
SignedGraph underlying(const SignedGraph& g);

/// Undirected Graphviz rendering; negative edges are dashed.
std::string emit_dot(const SignedGraph& g);

// ---------------------------------------------------------------------------
// Spanning subgraph structure

/// A spanning subgraph selected by edge indices; all n vertices are kept.
struct SubgraphMask {
  std::vector<std::size_t> edges;

  static SubgraphMask all(const SignedGraph& g);
};

enum class ComponentKind { Tree, OddUnicyclic, EvenUnicyclic, Other };

std::string_view to_string(ComponentKind kind);

struct Component {
  std::vector<int> vertices;
  std::vector<std::size_t> edges;
  ComponentKind kind = ComponentKind::Tree;
  std::size_t negative_edges = 0;

  bool negative() const { return negative_edges % 2 == 1; }
};

struct ComponentReport {
  std::vector<Component> components;
  /// component index of each vertex
  std::vector<std::size_t> component_of;
  std::size_t b_minus = 0;
  std::size_t tree_count = 0;
  std::size_t odd_unicyclic_count = 0;
  bool tu = false;

  bool single_tree() const { return tree_count == 1; }
  /// TU with exactly one tree component, and that tree contains `vertex`.
  bool rooted_tu_at(int vertex) const;
  /// Every component is odd-unicyclic.
  bool all_odd_unicyclic() const;
};

/// Throws GraphError if the mask references a missing or repeated edge.
ComponentReport classify_spanning_subgraph(const SignedGraph& g, const SubgraphMask& mask);

// ---------------------------------------------------------------------------
// Generators

enum class Family { Path, Cycle, Complete, Paw, ExtendedPaw, Random };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

struct GeneratorParams {
  int n = 0;
  double p = 0.5;
  double q = 0.5;
  std::uint64_t seed = 0;
  /// Per-edge signs (`+`/`-`) for path, cycle and complete; empty means all positive.
  std::string signs;
};

SignedGraph generate(Family family, const GeneratorParams& params = {});

}  // namespace netlap
