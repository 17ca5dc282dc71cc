#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "netlap/matrix_zoo.hpp"
#include "support/oracles.hpp"

using namespace netlap;
using netlap::testing::int_matrix;
using netlap::testing::random_connected_corpus;

namespace {

const GaussianInt I = GaussianInt::i();

// arrows 1->2, 3->2, 3->4, 2->4
const char* kPawArrows = "<><<";

SignedGraph random_graph(std::uint64_t seed, int n) {
  GeneratorParams p;
  p.n = n;
  p.p = 0.55;
  p.q = 0.45;
  p.seed = seed;
  return generate(Family::Random, p);
}

RationalVector random_vector(std::size_t n, std::mt19937_64& rng) {
  RationalVector x(n);
  for (auto& v : x) {
    v = mpq_class(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 5) + 1);
    v.canonicalize();
  }
  return x;
}

}  // namespace

TEST_CASE("paw matrices match the printed examples") {
  const SignedGraph paw = generate(Family::Paw);
  const MatrixBundle b = build_bundle(paw, Orientation::parse(kPawArrows));
  CHECK(b.laplacian == int_matrix({{1, -1, 0, 0}, {-1, 3, 1, -1}, {0, 1, 2, 1}, {0, -1, 1, 2}}));
  CHECK(b.signless_laplacian == int_matrix({{1, 1, 0, 0}, {1, 3, -1, 1}, {0, -1, 2, -1}, {0, 1, -1, 2}}));
  CHECK(b.net_laplacian == int_matrix({{1, -1, 0, 0}, {-1, 1, 1, -1}, {0, 1, -2, 1}, {0, -1, 1, 0}}));
  CHECK(b.signless_net_laplacian == int_matrix({{1, 1, 0, 0}, {1, 1, -1, 1}, {0, -1, -2, -1}, {0, 1, -1, 0}}));
  CHECK(b.net_incidence == GMatrix{{1, 0, 0, 0}, {1, I, 0, 1}, {0, I, I, 0}, {0, 0, I, 1}});
  CHECK(b.oriented_net_incidence == GMatrix{{1, 0, 0, 0}, {-1, -I, 0, 1}, {0, I, I, 0}, {0, 0, -I, -1}});
  CHECK(b.net_degree == int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, 0}}));
  CHECK(b.degree == int_matrix({{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
}

TEST_CASE("paw products reproduce Q± and D+|A|") {
  const SignedGraph paw = generate(Family::Paw);
  const GMatrix m = net_incidence_matrix(paw);
  CHECK(m * m.transpose() == signless_net_laplacian(paw));
  CHECK(m * m.conj_transpose() == signless_laplacian(underlying(paw)));
}

TEST_CASE("orientation parsing and validation") {
  CHECK(Orientation::parse("<><").str() == "<><");
  CHECK(Orientation::canonical(3).str() == "<<<");
  CHECK_THROWS_AS(Orientation::parse("<x"), std::invalid_argument);
  CHECK_THROWS_AS(oriented_net_incidence_matrix(generate(Family::Paw), Orientation::parse("<<")),
                  std::invalid_argument);
}

TEST_CASE("factorizations hold for every orientation of the paw") {
  const SignedGraph paw = generate(Family::Paw);
  for (unsigned bits = 0; bits < 16; ++bits) {
    std::string text;
    for (int k = 0; k < 4; ++k) text.push_back((bits >> k) & 1U ? '>' : '<');
    const Report r = verify_factorizations(build_bundle(paw, Orientation::parse(text)));
    CHECK(r.checks().size() == 4);
    CHECK_MESSAGE(r.ok(), r.str());
  }
}

TEST_CASE("factorizations on the empty graph") {
  const SignedGraph empty = parse_edge_list("3 0");
  const MatrixBundle b = build_bundle(empty, Orientation::canonical(0));
  CHECK(b.net_laplacian.is_zero());
  CHECK(b.net_incidence.rows() == 3);
  CHECK(b.net_incidence.cols() == 0);
  CHECK(verify_factorizations(b).ok());
}

TEST_CASE("factorizations and bundle invariants on random graphs") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SignedGraph g = random_graph(seed, 2 + static_cast<int>(seed % 7));
    const Orientation o = Orientation::random(g.edge_count(), rng);
    const MatrixBundle b = build_bundle(g, o);
    CHECK(verify_factorizations(b).ok());
    CHECK(b.net_laplacian == b.net_laplacian.transpose());
    CHECK(b.signless_net_laplacian == b.signless_net_laplacian.transpose());
    // L± does not depend on the orientation
    const GMatrix other = oriented_net_incidence_matrix(g, Orientation::random(g.edge_count(), rng));
    CHECK(other * other.transpose() == b.net_laplacian);
    for (std::size_t c = 0; c < g.edge_count(); ++c) {
      int nonzero = 0;
      GaussianInt product(1);
      for (std::size_t r = 0; r < b.net_incidence.rows(); ++r) {
        if (!b.net_incidence(r, c).is_zero()) {
          ++nonzero;
          CHECK(b.net_incidence(r, c) == (g.edge(c).negative() ? I : GaussianInt(1)));
          // one entry negated per column
          CHECK((b.oriented_net_incidence(r, c) == b.net_incidence(r, c) ||
                 b.oriented_net_incidence(r, c) == -b.net_incidence(r, c)));
          product *= exact_div(b.oriented_net_incidence(r, c), b.net_incidence(r, c));
        }
      }
      CHECK(nonzero == 2);
      CHECK(product == GaussianInt(-1));
    }
    if (g.vertex_count() > 0) CHECK(det(b.net_laplacian).is_zero());
  }
}

TEST_CASE("quadratic forms") {
  const SignedGraph paw = generate(Family::Paw);
  const RationalVector e1{1, 0, 0, 0};
  CHECK(quadratic_form_L(paw, e1).agree());
  CHECK(quadratic_form_L(paw, e1).value() == 1);
  CHECK(quadratic_form_Q(paw, e1).value() == 1);
  CHECK(quadratic_form_L(paw, RationalVector(4, 1)).value() == 0);
  CHECK(quadratic_form_Q(paw, RationalVector(4, 0)).value() == 0);
  CHECK_THROWS_AS(quadratic_form_L(paw, RationalVector(3, 1)), DimensionError);

  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SignedGraph g = random_graph(seed + 100, 2 + static_cast<int>(seed % 7));
    for (int k = 0; k < 5; ++k) {
      const RationalVector x = random_vector(static_cast<std::size_t>(g.vertex_count()), rng);
      CHECK(quadratic_form_L(g, x).agree());
      CHECK(quadratic_form_Q(g, x).agree());
      CHECK(quadratic_form_L(g, RationalVector(x.size(), 1)).value() == 0);
    }
  }
}

TEST_CASE("kernel balance") {
  const SignedGraph ext = generate(Family::ExtendedPaw);
  CHECK(kernel_basis(signless_net_laplacian(ext)).empty());
  const Report r = kernel_balance_check(ext);
  CHECK(r.ok());
  CHECK(r.passed("kernel balance Q± (kernel trivial)"));

  const SignedGraph paw = generate(Family::Paw);
  CHECK(kernel_basis(net_laplacian(paw)).size() >= 1);
  CHECK(kernel_balance_check(paw).ok());

  // all-ones is in ker L± for every graph
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SignedGraph g = random_graph(seed + 200, 2 + static_cast<int>(seed % 7));
    const RationalVector ones(static_cast<std::size_t>(g.vertex_count()), 1);
    for (const mpq_class& y : net_laplacian(g).apply(ones)) CHECK(sgn(y) == 0);
    CHECK(kernel_balance_check(g).ok());
  }

  // positive C4 is bipartite with all positive edges, so Q± is singular
  GeneratorParams c4;
  c4.n = 4;
  const SignedGraph square = generate(Family::Cycle, c4);
  CHECK_FALSE(kernel_basis(signless_net_laplacian(square)).empty());
  CHECK(kernel_balance_check(square).ok());
}

TEST_CASE("negation relations") {
  const SignedGraph paw = generate(Family::Paw);
  const Report r = verify_negation_relations(paw);
  CHECK(r.checks().size() == 4);
  CHECK(r.ok());
  GeneratorParams k4;
  k4.n = 4;
  const SignedGraph pos = generate(Family::Complete, k4);
  CHECK(net_degree_matrix(negate(pos)) == -net_degree_matrix(pos));
  for (const SignedGraph& g : random_connected_corpus(30, 2, 8, 20, 5)) {
    CHECK(verify_negation_relations(g).ok());
  }
}

TEST_CASE("rank relations") {
  const SignedGraph paw = generate(Family::Paw);
  const Orientation o = Orientation::canonical(4);
  CHECK(rank(net_incidence_matrix(paw)) == 4);
  CHECK(rank(oriented_net_incidence_matrix(paw, o)) == 3);
  CHECK(verify_rank_relations(paw, o).ok());

  const SignedGraph empty = parse_edge_list("3 0");
  CHECK(rank(net_incidence_matrix(empty)) == 0);
  CHECK(rank(net_laplacian(empty)) == 0);
  CHECK(verify_rank_relations(empty, Orientation::canonical(0)).ok());

  std::mt19937_64 rng(4);
  for (const SignedGraph& g : random_connected_corpus(40, 2, 8, 20, 6)) {
    const Orientation ro = Orientation::random(g.edge_count(), rng);
    CHECK(rank(oriented_net_incidence_matrix(g, ro)) == static_cast<std::size_t>(g.vertex_count() - 1));
    CHECK(verify_rank_relations(g, ro).ok());
  }
}

TEST_CASE("oriented DOT arrows decode the orientation") {
  const SignedGraph paw = generate(Family::Paw);
  const std::string dot = emit_oriented_dot(paw, Orientation::parse(kPawArrows));
  CHECK(dot.find("1 -> 2") != std::string::npos);
  CHECK(dot.find("3 -> 2") != std::string::npos);
  CHECK(dot.find("3 -> 4") != std::string::npos);
  CHECK(dot.find("2 -> 4") != std::string::npos);
  const std::string flipped = emit_oriented_dot(paw, Orientation::parse("><>>"));
  CHECK(flipped.find("2 -> 1") != std::string::npos);
  CHECK(flipped.find("2 -> 3") != std::string::npos);
}
