// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "netlap/census.hpp"
#include "netlap/matrix_zoo.hpp"
#include "support/oracles.hpp"

using namespace netlap;
using netlap::testing::int_matrix;
using netlap::testing::random_connected_corpus;
using netlap::testing::random_tree;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      ok = false;
    }
  }
};

const std::vector<SignedGraph>& corpus() {
  static const std::vector<SignedGraph> graphs = random_connected_corpus(200, 2, 8, 14, 20240601);
  return graphs;
}

mpz_class as_mpz(std::uint64_t v) { return mpz_class(std::to_string(v)); }

RationalVector random_vector(std::size_t n, std::mt19937_64& rng) {
  RationalVector x(n);
  for (auto& v : x) {
    v = mpq_class(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) + 1);
    v.canonicalize();
  }
  return x;
}

SignedGraph cycle_with_pattern(int n, unsigned bits) {
  GeneratorParams p;
  p.n = n;
  for (int k = 0; k < n; ++k) p.signs.push_back((bits >> k) & 1U ? '-' : '+');
  return generate(Family::Cycle, p);
}

Outcome paw_golden() {
  Outcome o;
  const SignedGraph paw = generate(Family::Paw);
  const MatrixBundle b = build_bundle(paw, Orientation::parse("<><<"));
  const GaussianInt I = GaussianInt::i();
  o.require(b.laplacian == int_matrix({{1, -1, 0, 0}, {-1, 3, 1, -1}, {0, 1, 2, 1}, {0, -1, 1, 2}}), "L");
  o.require(b.signless_laplacian == int_matrix({{1, 1, 0, 0}, {1, 3, -1, 1}, {0, -1, 2, -1}, {0, 1, -1, 2}}), "Q");
  o.require(b.net_laplacian == int_matrix({{1, -1, 0, 0}, {-1, 1, 1, -1}, {0, 1, -2, 1}, {0, -1, 1, 0}}), "L±");
  o.require(b.signless_net_laplacian == int_matrix({{1, 1, 0, 0}, {1, 1, -1, 1}, {0, -1, -2, -1}, {0, 1, -1, 0}}),
            "Q±");
  o.require(b.net_incidence == GMatrix{{1, 0, 0, 0}, {1, I, 0, 1}, {0, I, I, 0}, {0, 0, I, 1}}, "M±");
  o.require(b.oriented_net_incidence == GMatrix{{1, 0, 0, 0}, {-1, -I, 0, 1}, {0, I, I, 0}, {0, 0, -I, -1}}, "N±");
  return o;
}

Outcome paw_trees() {
  Outcome o;
  const SignedGraph paw = generate(Family::Paw);
  const TreeMinors minors = tree_balance_via_minor(paw);
  for (int a = 0; a < 4; ++a) o.require(minors.net[a] == -1, "det L±(" + std::to_string(a + 1) + ")");
  o.require(enumerate_spanning_trees(paw) == TreeCounts{1, 2}, "tree census");
  o.require(tree_counts_via_corollary(paw) == TreeCounts{1, 2}, "corollary");
  return o;
}

Outcome extended_paw_rooted() {
  Outcome o;
  const SignedGraph g = generate(Family::ExtendedPaw);
  // edges 0:(1,2) 1:(2,3) 2:(3,4) 3:(4,5) 4:(3,5)
  using Key = std::vector<std::size_t>;
  const std::map<Key, std::pair<std::size_t, bool>> expected{
      {{0, 1, 2, 3}, {0, true}},   // H1
      {{0, 1, 3, 4}, {0, true}},   // H2
      {{0, 1, 2, 4}, {0, false}},  // H3
      {{1, 2, 3, 4}, {1, true}},   // H4
      {{0, 2, 3, 4}, {1, false}},  // H5
  };
  const TUCensus census = enumerate_rooted_tu(g, 0);
  std::map<Key, std::pair<std::size_t, bool>> found;
  for (const TuRecord& r : census.records) {
    Key k = r.edges;
    std::sort(k.begin(), k.end());
    found[k] = {r.c, r.even()};
  }
  o.require(census.records.size() == 5 && found == expected, "masks, c-values or parities");
  o.require(census.sum_even == 6 && census.sum_odd == 5, "sums");
  o.require(rooted_tu_via_minor(g, 0) == GaussianInt(1), "det Q±(1)");
  return o;
}

Outcome extended_paw_full() {
  Outcome o;
  const SignedGraph g = generate(Family::ExtendedPaw);
  o.require(det_q_via_matrix(g) == GaussianInt(4), "det Q±");
  const FullTUCensus full = enumerate_full_tu(g);
  o.require(full.records.size() == 1, "record count");
  if (full.records.size() == 1) {
    o.require(full.records[0].edges == SubgraphMask::all(g).edges, "whole graph");
    o.require(full.records[0].c == 1 && full.records[0].even(), "c and parity");
  }
  return o;
}

Outcome randomized_theorems() {
  Outcome o;
  std::size_t idx = 0;
  for (const SignedGraph& g : corpus()) {
    const std::string tag = "graph " + std::to_string(idx++);
    const TreeCounts counts = enumerate_spanning_trees(g);
    const TreeMinors minors = tree_balance_via_minor(g);
    for (int a = 0; a < g.vertex_count(); ++a) {
      o.require(minors.net[a] == as_mpz(counts.t_plus) - as_mpz(counts.t_minus), tag + " det L±(i)");
      o.require(minors.plain[a] == as_mpz(counts.t_plus) + as_mpz(counts.t_minus), tag + " det L_|G|(i)");
      o.require(rooted_tu_via_minor(g, a) == GaussianInt(enumerate_rooted_tu(g, a).difference()),
                tag + " det Q±(i)");
    }
    o.require(det_q_via_matrix(g) == GaussianInt(enumerate_full_tu(g).difference()), tag + " det Q±");
  }
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  std::mt19937_64 rng(909);
  for (int n = 3; n <= 9; ++n) {
    for (unsigned bits = 0; bits < (1U << n); ++bits) {
      const SignedGraph c = cycle_with_pattern(n, bits);
      const std::string tag = "C" + std::to_string(n) + " pattern " + std::to_string(bits);
      for (int t = 0; t < 100; ++t) {
        const Orientation orient = Orientation::random(c.edge_count(), rng);
        o.require(det(oriented_net_incidence_matrix(c, orient)).is_zero(), tag + " det N±");
      }
      const GaussianInt dm = det(net_incidence_matrix(c));
      if (n % 2 == 1) {
        const long sign = c.negative_edge_count() % 2 == 0 ? 1 : -1;
        o.require(dm * dm == GaussianInt(4 * sign), tag + " det M± squared");
      } else {
        o.require(dm.is_zero(), tag + " det M±");
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    const SignedGraph tree = random_tree(2 + static_cast<int>(rng() % 9), rng);
    const Orientation orient = Orientation::random(tree.edge_count(), rng);
    const GMatrix n_pm = oriented_net_incidence_matrix(tree, orient);
    const GaussianInt expected(tree.negative_edge_count() % 2 == 0 ? 1 : -1);
    for (int j = 0; j < tree.vertex_count(); ++j) {
      const GaussianInt d = det(delete_rows_cols(n_pm, {static_cast<std::size_t>(j)}, {}));
      o.require(d * d == expected, "tree " + std::to_string(t) + " row " + std::to_string(j + 1));
    }
  }
  return o;
}

Outcome structural_relations() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t idx = 0;
  for (const SignedGraph& g : corpus()) {
    const std::string tag = "graph " + std::to_string(idx++);
    const Orientation orient = Orientation::random(g.edge_count(), rng);
    const Report f = verify_factorizations(build_bundle(g, orient));
    o.require(f.ok() && f.checks().size() == 4, tag + " factorizations");
    const Report neg = verify_negation_relations(g);
    o.require(neg.ok() && neg.checks().size() == 4, tag + " negation");
    o.require(verify_rank_relations(g, orient).ok(), tag + " rank");
  }
  return o;
}

Outcome quadratic_and_kernel() {
  Outcome o;
  std::mt19937_64 rng(31337);
  const auto graphs = random_connected_corpus(50, 2, 8, 14, 8675309);
  std::size_t idx = 0;
  for (const SignedGraph& g : graphs) {
    const std::string tag = "graph " + std::to_string(idx++);
    for (int k = 0; k < 10; ++k) {
      const RationalVector x = random_vector(static_cast<std::size_t>(g.vertex_count()), rng);
      o.require(quadratic_form_L(g, x).agree(), tag + " x^T L± x");
      o.require(quadratic_form_Q(g, x).agree(), tag + " x^T Q± x");
    }
    o.require(kernel_balance_check(g).ok(), tag + " kernel balance");
  }
  return o;
}

Outcome cauchy_binet() {
  Outcome o;
  std::mt19937_64 rng(4242);
  const auto graphs = random_connected_corpus(20, 2, 6, 15, 1234);
  std::size_t idx = 0;
  for (const SignedGraph& g : graphs) {
    const std::string tag = "graph " + std::to_string(idx++);
    const Orientation orient = Orientation::random(g.edge_count(), rng);
    const int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
    const CauchyBinetExpansion cb = cauchy_binet_expansion(g, anchor, orient);
    o.require(cb.minor == cb.term_sum, tag + " sum");
    o.require(cb.support_is_spanning_trees, tag + " support");
    const TreeCounts counts = enumerate_spanning_trees(g);
    o.require(cb.nonzero_subsets.size() == counts.t_plus + counts.t_minus, tag + " support size");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {"1 paw golden matrices", 1, paw_golden},
      {"2 paw spanning tree balance", 1, paw_trees},
      {"3 extended paw rooted TU census", 1, extended_paw_rooted},
      {"4 extended paw det Q± and full TU census", 1, extended_paw_full},
      {"5 randomized theorem suite (200 graphs)", 60, randomized_theorems},
      {"6 cycle and tree incidence lemmas", 30, lemma_suite},
      {"7 factorization, negation and rank relations", 30, structural_relations},
      {"8 quadratic forms and kernel balance", 30, quadratic_and_kernel},
      {"9 Cauchy-Binet terms", 30, cauchy_binet},
  };
  // build the shared corpus outside the timed sections
  corpus();
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_s) out.require(false, "took " + std::to_string(secs) + " s");
    const bool ok = out.ok && secs < c.limit_s;
    if (!ok) ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << " (" << secs << " s)";
    if (!ok) std::cout << ": " << out.detail;
    std::cout << '\n';
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
