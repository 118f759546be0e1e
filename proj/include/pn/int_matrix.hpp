#pragma once

#include "pn/bigint.hpp"
#include "pn/sparse_matrix.hpp"

#include <cstdint>
#include <vector>

namespace pn {

/// Small dense integer matrix with 64-bit entries. Every arithmetic step is
/// overflow-checked; overflow raises ResourceExhausted.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  /// Fails if an entry does not fit in 64 bits.
  static IntMatrix from_sparse(const SparseIntMatrix& m);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix scaled(std::int64_t factor) const;
  IntMatrix transpose() const;
  std::int64_t trace() const;
  /// Exact determinant (fraction-free elimination).
  BigInt determinant() const;
  bool is_identity() const;
  SparseIntMatrix to_sparse() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace pn
