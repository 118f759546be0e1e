#include "pn/int_matrix.hpp"

#include "pn/errors.hpp"

#include <algorithm>

namespace pn {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_resource("64-bit overflow in representation arithmetic");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_resource("64-bit overflow in representation arithmetic");
  return r;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_sparse(const SparseIntMatrix& s) {
  IntMatrix m(s.rows(), s.cols());
  for (std::size_t c = 0; c < s.cols(); ++c) {
    for (const auto& e : s.column(c)) {
      if (!fits_int64(e.value)) throw_resource("matrix entry does not fit in 64 bits");
      m(e.row, c) = static_cast<std::int64_t>(e.value);
    }
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw_invalid("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw_invalid("matrix product: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const std::int64_t b = other(k, j);
        if (b != 0) out(i, j) = add(out(i, j), mul(a, b));
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw_invalid("matrix difference: shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    std::int64_t r;
    if (__builtin_sub_overflow(data_[i], other.data_[i], &r)) throw_resource("64-bit overflow");
    out.data_[i] = r;
  }
  return out;
}

IntMatrix IntMatrix::scaled(std::int64_t factor) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = mul(x, factor);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = add(t, (*this)(i, i));
  return t;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw_invalid("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (*this)(i, j);
  }
  // Bareiss.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool IntMatrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_);
}

SparseIntMatrix IntMatrix::to_sparse() const {
  SparseIntMatrix s(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    SparseIntMatrix::Column col;
    for (std::size_t r = 0; r < rows_; ++r) {
      if ((*this)(r, c) != 0) col.push_back({static_cast<std::uint32_t>(r), BigInt((*this)(r, c))});
    }
    s.set_column(c, std::move(col));
  }
  return s;
}

}  // namespace pn
