#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "netlap/gaussian.hpp"

namespace netlap {

/// Raised on non-conformable shapes or out-of-range indices.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RationalVector = std::vector<mpq_class>;

/// Dense row-major matrix over the Gaussian integers.
class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(std::size_t rows, std::size_t cols);
  /// Row-wise literal, e.g. {{1, 0}, {0, GaussianInt::i()}}.
  GMatrix(std::initializer_list<std::initializer_list<GaussianInt>> rows);

  static GMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  GaussianInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GaussianInt& at(std::size_t r, std::size_t c);
  const GaussianInt& at(std::size_t r, std::size_t c) const;

  bool is_real() const;
  bool is_zero() const;

  GMatrix transpose() const;
  /// Conjugate transpose M*.
  GMatrix conj_transpose() const;
  GMatrix operator-() const;

  friend GMatrix operator+(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator-(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  friend bool operator==(const GMatrix& a, const GMatrix& b) = default;

  /// Matrix-vector product over the rationals; requires a real matrix.
  RationalVector apply(const RationalVector& x) const;

  /// Right-aligned columns, one row per line.
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianInt> data_;
};

using IndexSet = std::set<std::size_t>;

/// Submatrix with the listed rows and columns removed, order preserved.
GMatrix delete_rows_cols(const GMatrix& m, const IndexSet& rows, const IndexSet& cols);
/// Submatrix keeping the listed columns in the given order, minus the listed rows.
GMatrix select_columns(const GMatrix& m, std::span<const std::size_t> cols, const IndexSet& drop_rows = {});

/// Exact determinant by fraction-free (Bareiss) elimination; det of 0x0 is 1.
GaussianInt det(const GMatrix& m);

/// Rank over Q(i), by fraction-free echelon pivot counting.
std::size_t rank(const GMatrix& m);

/// Basis of the right null space over Q. Empty iff the matrix has full column rank.
/// Throws std::invalid_argument for non-real input.
std::vector<RationalVector> kernel_basis(const GMatrix& m);

}  // namespace netlap
