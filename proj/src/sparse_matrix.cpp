#include "pn/sparse_matrix.hpp"

#include "pn/errors.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace pn {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows > UINT32_MAX) throw_invalid("matrix too tall");
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<BigInt>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  SparseIntMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw_invalid("ragged dense matrix");
    for (std::size_t c = 0; c < ncols; ++c) {
      if (rows[r][c] != 0) m.cols_[c].push_back({static_cast<std::uint32_t>(r), rows[r][c]});
    }
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back({static_cast<std::uint32_t>(i), BigInt(1)});
  return m;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : cols_) total += c.size();
  return total;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const BigInt& v) {
  if (r >= rows_ || c >= cols_.size()) throw_invalid("matrix index out of range");
  if (v == 0) return;
  auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    it->value += v;
    if (it->value == 0) col.erase(it);
  } else {
    col.insert(it, {static_cast<std::uint32_t>(r), v});
  }
}

void SparseIntMatrix::set_column(std::size_t c, Column entries) {
  if (c >= cols_.size()) throw_invalid("matrix index out of range");
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  Column clean;
  for (auto& e : entries) {
    if (e.row >= rows_) throw_invalid("matrix index out of range");
    if (!clean.empty() && clean.back().row == e.row) throw_invalid("duplicate matrix entry");
    if (e.value != 0) clean.push_back(std::move(e));
  }
  cols_[c] = std::move(clean);
}

BigInt SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->value;
  return 0;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& e : cols_[c]) t.cols_[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  }
  return t;
}

SparseIntMatrix SparseIntMatrix::hconcat(const SparseIntMatrix& other) const {
  if (other.rows_ != rows_) throw_invalid("hconcat row mismatch");
  SparseIntMatrix out = *this;
  out.cols_.insert(out.cols_.end(), other.cols_.begin(), other.cols_.end());
  return out;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& other) const {
  if (cols() != other.rows_) throw_invalid("matrix product shape mismatch");
  SparseIntMatrix out(rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) {
    std::map<std::uint32_t, BigInt> acc;
    for (const auto& oe : other.cols_[c]) {
      for (const auto& e : cols_[oe.row]) acc[e.row] += e.value * oe.value;
    }
    for (auto& [r, v] : acc) {
      if (v != 0) out.cols_[c].push_back({r, std::move(v)});
    }
  }
  return out;
}

std::vector<std::vector<BigInt>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> d(rows_, std::vector<BigInt>(cols(), 0));
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& e : cols_[c]) d[e.row][c] = e.value;
  }
  return d;
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

void write_triplets(std::ostream& os, const SparseIntMatrix& m) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) os << e.row + 1 << ' ' << c + 1 << ' ' << e.value << '\n';
  }
}

SparseIntMatrix read_triplets(std::istream& is) {
  std::string line;
  bool banner = false;
  while (std::getline(is, line)) {
    if (line.rfind("%%MatrixMarket", 0) == 0) {
      if (line.find("coordinate") == std::string::npos || line.find("integer") == std::string::npos) {
        throw_invalid("unsupported MatrixMarket banner: " + line);
      }
      banner = true;
      continue;
    }
    if (line.empty() || line[0] == '%') continue;
    break;
  }
  if (!banner) throw_invalid("missing MatrixMarket banner");
  std::size_t rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream header(line);
    if (!(header >> rows >> cols >> nnz)) throw_invalid("bad triplet header: " + line);
  }
  SparseIntMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    if (!std::getline(is, line)) throw_invalid("truncated triplet data");
    std::istringstream in(line);
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value) || r < 1 || c < 1 || r > rows || c > cols) {
      throw_invalid("bad triplet line: " + line);
    }
    BigInt v;
    try {
      v = BigInt(value);
    } catch (const std::exception&) {
      throw_invalid("bad triplet value: " + value);
    }
    if (m.at(r - 1, c - 1) != 0) throw_invalid("duplicate triplet entry");
    m.add(r - 1, c - 1, v);
  }
  return m;
}

}  // namespace pn
