#include "netlap/gaussian.hpp"

namespace netlap {

GaussianInt GaussianInt::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
  mpz_class re = re_ * o.re_ - im_ * o.im_;
  mpz_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

bool GaussianInt::divides(const GaussianInt& other) const {
  if (is_zero()) return other.is_zero();
  // other * conj(this) must be divisible by |this|^2 componentwise
  GaussianInt num = other * conj();
  mpz_class n = norm();
  return mpz_divisible_p(num.re_.get_mpz_t(), n.get_mpz_t()) != 0 &&
         mpz_divisible_p(num.im_.get_mpz_t(), n.get_mpz_t()) != 0;
}

GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Gaussian integer");
  if (b.is_real()) {
    const mpz_class& d = b.re_;
    if (mpz_divisible_p(a.re_.get_mpz_t(), d.get_mpz_t()) == 0 ||
        mpz_divisible_p(a.im_.get_mpz_t(), d.get_mpz_t()) == 0) {
      throw InexactDivision(a.str() + " is not divisible by " + b.str());
    }
    GaussianInt q;
    mpz_divexact(q.re_.get_mpz_t(), a.re_.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(q.im_.get_mpz_t(), a.im_.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  GaussianInt num = a * b.conj();
  mpz_class n = b.norm();
  if (mpz_divisible_p(num.re_.get_mpz_t(), n.get_mpz_t()) == 0 ||
      mpz_divisible_p(num.im_.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw InexactDivision(a.str() + " is not divisible by " + b.str());
  }
  GaussianInt q;
  mpz_divexact(q.re_.get_mpz_t(), num.re_.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im_.get_mpz_t(), num.im_.get_mpz_t(), n.get_mpz_t());
  return q;
}

std::string GaussianInt::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

}  // namespace netlap
