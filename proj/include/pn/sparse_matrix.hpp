#pragma once

#include "pn/bigint.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace pn {

/// Column-major sparse integer matrix. Each column holds entries sorted by
/// row with no stored zeros and no duplicates.
class SparseIntMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    BigInt value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  static SparseIntMatrix from_dense(const std::vector<std::vector<BigInt>>& rows);
  static SparseIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nonzeros() const;

  const Column& column(std::size_t c) const { return cols_[c]; }
  const std::vector<Column>& columns() const { return cols_; }

  /// Adds v to entry (r, c); keeps the column sorted and drops zeros.
  void add(std::size_t r, std::size_t c, const BigInt& v);
  /// Replaces a column; entries are sorted and validated.
  void set_column(std::size_t c, Column entries);
  BigInt at(std::size_t r, std::size_t c) const;

  SparseIntMatrix transpose() const;
  /// Horizontal concatenation [this | other].
  SparseIntMatrix hconcat(const SparseIntMatrix& other) const;
  SparseIntMatrix operator*(const SparseIntMatrix& other) const;
  std::vector<std::vector<BigInt>> to_dense() const;
  bool is_zero() const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

/// Writes the coordinate triplet format: a MatrixMarket "coordinate integer
/// general" block with 1-based `row col value` lines, ordered column-major.
void write_triplets(std::ostream& os, const SparseIntMatrix& m);
/// Reads one block written by write_triplets. Comment lines other than the
/// banner are skipped.
SparseIntMatrix read_triplets(std::istream& is);

}  // namespace pn
