#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "netlap/gaussian.hpp"

using netlap::GaussianInt;
using netlap::InexactDivision;

namespace {

GaussianInt random_gauss(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const GaussianInt a(3, -2);
  const GaussianInt b(1, 4);
  CHECK(a + b == GaussianInt(4, 2));
  CHECK(a - b == GaussianInt(2, -6));
  CHECK(a * b == GaussianInt(11, 10));
  CHECK(-a == GaussianInt(-3, 2));
  CHECK(GaussianInt::i() * GaussianInt::i() == GaussianInt(-1));
  CHECK(a.norm() == 13);
  CHECK(a.conj() == GaussianInt(3, 2));
  CHECK(a * a.conj() == GaussianInt(a.norm()));
}

TEST_CASE("powers of i") {
  CHECK(GaussianInt::i_pow(0) == GaussianInt(1));
  CHECK(GaussianInt::i_pow(1) == GaussianInt::i());
  CHECK(GaussianInt::i_pow(2) == GaussianInt(-1));
  CHECK(GaussianInt::i_pow(3) == -GaussianInt::i());
  CHECK(GaussianInt::i_pow(-1) == -GaussianInt::i());
  CHECK(GaussianInt::i_pow(10) == GaussianInt(-1));
}

TEST_CASE("exact division") {
  const GaussianInt a(3, -2);
  const GaussianInt b(1, 4);
  CHECK(exact_div(a * b, b) == a);
  CHECK(exact_div(a * b, a) == b);
  CHECK(exact_div(GaussianInt(6, 4), GaussianInt(2)) == GaussianInt(3, 2));
  CHECK(exact_div(GaussianInt(2), GaussianInt(1, 1)) == GaussianInt(1, -1));
  CHECK_THROWS_AS(exact_div(GaussianInt(1), GaussianInt(1, 1)), InexactDivision);
  CHECK_THROWS_AS(exact_div(GaussianInt(3), GaussianInt(2)), InexactDivision);
  CHECK_THROWS_AS(exact_div(GaussianInt(3), GaussianInt(0)), std::domain_error);
  CHECK(GaussianInt(1, 1).divides(GaussianInt(2)));
  CHECK_FALSE(GaussianInt(2).divides(GaussianInt(1, 1)));
  CHECK(GaussianInt(0).divides(GaussianInt(0)));
  CHECK_FALSE(GaussianInt(0).divides(GaussianInt(1)));
}

TEST_CASE("rendering") {
  CHECK(GaussianInt(0).str() == "0");
  CHECK(GaussianInt(-7).str() == "-7");
  CHECK(GaussianInt(0, 1).str() == "i");
  CHECK(GaussianInt(0, -1).str() == "-i");
  CHECK(GaussianInt(0, 3).str() == "3i");
  CHECK(GaussianInt(0, -3).str() == "-3i");
  CHECK(GaussianInt(2, 3).str() == "2+3i");
  CHECK(GaussianInt(2, -3).str() == "2-3i");
  CHECK(GaussianInt(1, 1).str() == "1+i");
  CHECK(GaussianInt(-1, -1).str() == "-1-i");
}

TEST_CASE("arbitrary precision") {
  GaussianInt z(1, 1);
  GaussianInt p(1);
  for (int k = 0; k < 200; ++k) p *= z;
  // (1+i)^200 = (2i)^100 = 2^100
  mpz_class two100;
  mpz_ui_pow_ui(two100.get_mpz_t(), 2, 100);
  CHECK(p == GaussianInt(two100));
  CHECK(exact_div(p, GaussianInt(two100)) == GaussianInt(1));
}

TEST_CASE("ring axioms on random values") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const GaussianInt a = random_gauss(rng, 50);
    const GaussianInt b = random_gauss(rng, 50);
    const GaussianInt c = random_gauss(rng, 50);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(sgn(a.norm()) >= 0);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}
