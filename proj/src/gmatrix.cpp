#include "netlap/gmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace netlap {

GMatrix::GMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

GMatrix::GMatrix(std::initializer_list<std::initializer_list<GaussianInt>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

GMatrix GMatrix::identity(std::size_t n) {
  GMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

GaussianInt& GMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return (*this)(r, c);
}

const GaussianInt& GMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return (*this)(r, c);
}

bool GMatrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussianInt& z) { return z.is_real(); });
}

bool GMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussianInt& z) { return z.is_zero(); });
}

GMatrix GMatrix::transpose() const {
  GMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

GMatrix GMatrix::conj_transpose() const {
  GMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

GMatrix GMatrix::operator-() const {
  GMatrix out(*this);
  for (auto& z : out.data_) z = -z;
  return out;
}

GMatrix operator+(const GMatrix& a, const GMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("sum of mismatched shapes");
  GMatrix out(a);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

GMatrix operator-(const GMatrix& a, const GMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("difference of mismatched shapes");
  GMatrix out(a);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  GMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianInt& lhs = a(r, k);
      if (lhs.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += lhs * b(k, c);
      }
    }
  }
  return out;
}

RationalVector GMatrix::apply(const RationalVector& x) const {
  if (!is_real()) throw std::invalid_argument("rational apply requires a real matrix");
  if (x.size() != cols_) throw DimensionError("vector length does not match column count");
  RationalVector y(rows_, mpq_class(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += mpq_class((*this)(r, c).re()) * x[c];
  return y;
}

std::string GMatrix::str() const {
  std::vector<std::string> cells(data_.size());
  std::vector<std::size_t> width(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      cells[r * cols_ + c] = (*this)(r, c).str();
      width[c] = std::max(width[c], cells[r * cols_ + c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& cell = cells[r * cols_ + c];
      out << (c == 0 ? "" : " ") << std::string(width[c] - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

GMatrix delete_rows_cols(const GMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (!rows.empty() && *rows.rbegin() >= m.rows()) throw DimensionError("row index out of range");
  if (!cols.empty() && *cols.rbegin() >= m.cols()) throw DimensionError("column index out of range");
  GMatrix out(m.rows() - rows.size(), m.cols() - cols.size());
  std::size_t orow = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (rows.contains(r)) continue;
    std::size_t ocol = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (cols.contains(c)) continue;
      out(orow, ocol++) = m(r, c);
    }
    ++orow;
  }
  return out;
}

GMatrix select_columns(const GMatrix& m, std::span<const std::size_t> cols, const IndexSet& drop_rows) {
  if (!drop_rows.empty() && *drop_rows.rbegin() >= m.rows()) throw DimensionError("row index out of range");
  for (std::size_t c : cols) {
    if (c >= m.cols()) throw DimensionError("column index out of range");
  }
  GMatrix out(m.rows() - drop_rows.size(), cols.size());
  std::size_t orow = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (drop_rows.contains(r)) continue;
    for (std::size_t k = 0; k < cols.size(); ++k) out(orow, k) = m(r, cols[k]);
    ++orow;
  }
  return out;
}

namespace {

struct Echelon {
  std::size_t rank = 0;
  bool odd_swaps = false;
  GaussianInt last_pivot{1};
};

// Fraction-free echelon form in place. Every entry after step k is a (k+1)x(k+1)
// minor of the input, so each division by the previous pivot is exact; exact_div
// throws if that ever fails.
Echelon bareiss_echelon(GMatrix& a, bool stop_on_zero_column) {
  Echelon e;
  GaussianInt prev{1};
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) {
      if (stop_on_zero_column) {
        e.rank = r;
        e.last_pivot = 0;
        return e;
      }
      continue;
    }
    if (p != r) {
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      e.odd_swaps = !e.odd_swaps;
    }
    const GaussianInt pivot = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const GaussianInt factor = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        GaussianInt num = pivot * a(i, j);
        if (!factor.is_zero()) num -= factor * a(r, j);
        a(i, j) = exact_div(num, prev);
      }
      a(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  e.rank = r;
  e.last_pivot = prev;
  return e;
}

}  // namespace

GaussianInt det(const GMatrix& m) {
  if (!m.square()) {
    throw DimensionError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  if (m.rows() == 0) return 1;
  GMatrix work(m);
  Echelon e = bareiss_echelon(work, true);
  if (e.rank < m.rows()) return 0;
  return e.odd_swaps ? -e.last_pivot : e.last_pivot;
}

std::size_t rank(const GMatrix& m) {
  GMatrix work(m);
  return bareiss_echelon(work, false).rank;
}

std::vector<RationalVector> kernel_basis(const GMatrix& m) {
  if (!m.is_real()) throw std::invalid_argument("kernel_basis requires a real matrix");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<RationalVector> a(rows, RationalVector(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpq_class(m(r, c).re());

  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpq_class inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, mpq_class(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace netlap
