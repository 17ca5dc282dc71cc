#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netlap/gmatrix.hpp"
#include "netlap/matrix_zoo.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap {

/// Default cap on the number of candidate edge subsets C(m, k).
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class CensusError : public std::runtime_error {
 public:
  enum class Kind { Disconnected, BudgetExceeded, InvalidArgument };

  CensusError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// ---------------------------------------------------------------------------
// Spanning trees

struct TreeCounts {
  std::uint64_t t_plus = 0;
  std::uint64_t t_minus = 0;

  bool operator==(const TreeCounts&) const = default;
};

/// Brute force over all (n-1)-edge subsets. Requires a connected graph.
TreeCounts enumerate_spanning_trees(const SignedGraph& g, std::uint64_t budget = kDefaultBudget);

/// det(L±(i)) and det(L_|G|(i)) for every vertex i (0-based index into the vectors).
struct TreeMinors {
  std::vector<mpz_class> net;
  std::vector<mpz_class> plain;
  /// False for disconnected input, where the counting identities do not apply.
  bool applicable = true;

  bool anchor_independent() const;
};

/// Requires n >= 2.
TreeMinors tree_balance_via_minor(const SignedGraph& g);

/// Recovers (t_plus, t_minus) from (plain ± net)/2 at every anchor. Requires a
/// connected graph on n >= 2 vertices; throws std::logic_error on a non-integral,
/// negative, or anchor-dependent result.
TreeCounts tree_counts_via_corollary(const SignedGraph& g);

// ---------------------------------------------------------------------------
// TU-subgraphs

struct TuRecord {
  std::vector<std::size_t> edges;
  /// number of odd-unicyclic components
  std::size_t c = 0;
  std::size_t b_minus = 0;

  bool even() const { return b_minus % 2 == 0; }
  mpz_class weight() const;  // 4^c
};

struct TUCensus {
  int anchor = 0;
  std::vector<TuRecord> records;
  mpz_class sum_even;
  mpz_class sum_odd;

  mpz_class difference() const { return sum_even - sum_odd; }
};

struct FullTUCensus {
  std::vector<TuRecord> records;
  mpz_class sum_even;
  mpz_class sum_odd;

  mpz_class difference() const { return sum_even - sum_odd; }
};

/// (n-1)-edge spanning TU-subgraphs whose unique tree contains `anchor`,
/// split by parity of b⁻. Requires a connected graph.
TUCensus enumerate_rooted_tu(const SignedGraph& g, int anchor, std::uint64_t budget = kDefaultBudget);

/// det(Q±(anchor)); throws std::logic_error if the result is not real.
GaussianInt rooted_tu_via_minor(const SignedGraph& g, int anchor);

/// n-edge spanning subgraphs whose components are all odd-unicyclic, split by
/// parity of the number of negative components. Any simple signed graph.
FullTUCensus enumerate_full_tu(const SignedGraph& g, std::uint64_t budget = kDefaultBudget);

/// det(Q±); throws std::logic_error if the result is not real.
GaussianInt det_q_via_matrix(const SignedGraph& g);

// ---------------------------------------------------------------------------
// Incidence minors

/// A square incidence minor together with its structural prediction.
struct MinorCheck {
  GaussianInt det;
  /// predicted det², from the component structure alone
  GaussianInt predicted_square;
  ComponentReport structure;

  bool consistent() const { return det * det == predicted_square; }
};

/// Minor of M± (or of N± when `orientation` is given) with row `anchor` deleted
/// and columns `edges` kept; no row is deleted when `anchor` is empty.
/// `edges` must have n-1 entries with an anchor, n without.
MinorCheck incidence_minor_oracle(const SignedGraph& g, std::optional<int> anchor,
                                  const std::vector<std::size_t>& edges,
                                  const Orientation* orientation = nullptr);

struct TreeMinorCheck {
  GaussianInt oriented_det;  // det N±(j;)
  GaussianInt plain_det;     // det M±(j;)
  bool positive = true;

  /// Both squares equal +1 for a positive tree and -1 for a negative one.
  bool consistent() const;
};

/// Throws CensusError(InvalidArgument) unless `tree` is a tree with at least one edge.
TreeMinorCheck tree_minor_oracle(const SignedGraph& tree, int vertex, const Orientation& orientation);

/// det(L±(i)) against the explicit sum Σ_S det(N±(i;S])² over (n-1)-subsets S.
struct CauchyBinetExpansion {
  GaussianInt minor;
  GaussianInt term_sum;
  /// subsets with a nonzero term
  std::vector<std::vector<std::size_t>> nonzero_subsets;
  /// nonzero terms occur exactly at the spanning-tree subsets
  bool support_is_spanning_trees = true;

  bool consistent() const { return minor == term_sum && support_is_spanning_trees; }
};

CauchyBinetExpansion cauchy_binet_expansion(const SignedGraph& g, int anchor, const Orientation& orientation,
                                            std::uint64_t budget = kDefaultBudget);

/// Visits every k-subset of {0..m-1} in lexicographic order. Throws
/// CensusError(BudgetExceeded) when C(m, k) > budget.
void for_each_subset(std::size_t m, std::size_t k, std::uint64_t budget,
                     const std::function<void(const std::vector<std::size_t>&)>& visit);

}  // namespace netlap
