#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace netlap {

/// Raised when an exact division in Z[i] has a nonzero remainder.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact Gaussian integer re + im*i with arbitrary-precision parts.
class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianInt(mpz_class re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianInt i() { return {0, 1}; }
  /// i^k for any integer k.
  static GaussianInt i_pow(long k);

  const mpz_class& re() const { return re_; }
  const mpz_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianInt conj() const { return {re_, -im_}; }
  /// |z|^2
  mpz_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianInt operator-() const { return {-re_, -im_}; }
  GaussianInt& operator+=(const GaussianInt& o);
  GaussianInt& operator-=(const GaussianInt& o);
  GaussianInt& operator*=(const GaussianInt& o);

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// True when this divides `other` in Z[i]. Zero divides only zero.
  bool divides(const GaussianInt& other) const;

  /// Quotient a/b; throws InexactDivision unless b | a, std::domain_error for b == 0.
  friend GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b);

  /// Renders as `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, `1+i`, ... with no spaces.
  std::string str() const;

 private:
  mpz_class re_{0};
  mpz_class im_{0};
};

GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b);

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << z.str(); }

}  // namespace netlap
