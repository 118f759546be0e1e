// Sparse unit-pivot elimination shared by Smith normal form, modular rank
// and saturated kernels. Internal header.
#pragma once

#include "pn/bigint.hpp"
#include "pn/budget.hpp"
#include "pn/errors.hpp"
#include "pn/sparse_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace pn::detail {

/// Thrown by CheckedIntRing; callers retry the whole computation over BigRing.
struct Int64Overflow {};

struct CheckedIntRing {
  using value_type = std::int64_t;

  value_type from_big(const BigInt& v) const {
    if (!fits_int64(v)) throw Int64Overflow{};
    return static_cast<std::int64_t>(v);
  }
  BigInt to_big(value_type v) const { return BigInt(v); }
  bool is_zero(value_type v) const { return v == 0; }
  bool is_unit(value_type v) const { return v == 1 || v == -1; }
  value_type unit_inverse(value_type u) const { return u; }
  value_type mul(value_type a, value_type b) const {
    value_type out;
    if (__builtin_mul_overflow(a, b, &out) || out == std::numeric_limits<std::int64_t>::min()) throw Int64Overflow{};
    return out;
  }
  /// a - f * b
  value_type sub_mul(value_type a, value_type f, value_type b) const {
    value_type prod = mul(f, b);
    value_type out;
    if (__builtin_sub_overflow(a, prod, &out) || out == std::numeric_limits<std::int64_t>::min()) throw Int64Overflow{};
    return out;
  }
  value_type neg(value_type v) const { return -v; }
};

struct BigRing {
  using value_type = BigInt;
  const BudgetMeter* meter = nullptr;

  value_type from_big(const BigInt& v) const { return v; }
  BigInt to_big(const value_type& v) const { return v; }
  bool is_zero(const value_type& v) const { return v == 0; }
  bool is_unit(const value_type& v) const { return v == 1 || v == -1; }
  value_type unit_inverse(const value_type& u) const { return u; }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type out = a * b;
    if (meter) meter->check_bits(bit_length(out));
    return out;
  }
  value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const {
    value_type out = a - f * b;
    if (meter) meter->check_bits(bit_length(out));
    return out;
  }
  value_type neg(const value_type& v) const { return -v; }
};

struct ModPRing {
  using value_type = std::uint64_t;
  std::uint64_t p = 2;

  value_type from_big(const BigInt& v) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
  }
  BigInt to_big(value_type v) const { return BigInt(v); }
  bool is_zero(value_type v) const { return v == 0; }
  bool is_unit(value_type v) const { return v != 0; }
  value_type unit_inverse(value_type u) const {
    // Fermat: u^(p-2)
    std::uint64_t result = 1, base = u % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  value_type mul(value_type a, value_type b) const { return a * b % p; }
  value_type sub_mul(value_type a, value_type f, value_type b) const {
    return (a + p - (f * b % p)) % p;
  }
  value_type neg(value_type v) const { return v == 0 ? 0 : p - v; }
};

/// Column-oriented elimination restricted to unit pivots. A pivot (r, c)
/// clears row r with column operations, after which row r and column c
/// split off as a 1x1 unit block and are dropped. Row singletons go first
/// (no fill), then the sparsest column, choosing its unit entry with the
/// sparsest row. All choices are index-tie-broken, so the run is
/// deterministic. What cannot be pivoted stays behind as the residual.
template <class Ring>
class UnitPivotEliminator {
 public:
  using V = typename Ring::value_type;
  struct Entry {
    std::uint32_t row;
    V value;
  };
  using Column = std::vector<Entry>;
  using SparseVec = std::vector<std::pair<std::uint32_t, V>>;

  UnitPivotEliminator(Ring ring, const SparseIntMatrix& m, bool track_transforms, BudgetMeter& meter)
      : ring_(std::move(ring)),
        meter_(meter),
        track_(track_transforms),
        cols_(m.cols()),
        col_alive_(m.cols(), 1),
        row_alive_(m.rows(), 1),
        row_count_(m.rows(), 0),
        row_cols_(m.rows()),
        queued_key_(m.cols(), kNotQueued),
        stamp_(m.cols(), 0) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto& col = cols_[c];
      col.reserve(m.column(c).size());
      for (const auto& e : m.column(c)) {
        V v = ring_.from_big(e.value);
        if (ring_.is_zero(v)) continue;
        col.push_back({e.row, v});
        ++row_count_[e.row];
        row_cols_[e.row].push_back(static_cast<std::uint32_t>(c));
      }
      live_entries_ += col.size();
    }
    if (track_) {
      transforms_.resize(m.cols());
      for (std::size_t c = 0; c < m.cols(); ++c) transforms_[c].push_back({static_cast<std::uint32_t>(c), V(1)});
      live_entries_ += m.cols();
    }
    meter_.check_entries(live_entries_);
  }

  void run() {
    for (std::size_t c = 0; c < cols_.size(); ++c) enqueue(c);
    for (std::size_t r = 0; r < row_count_.size(); ++r) {
      if (row_count_[r] == 1) singleton_rows_.push_back(static_cast<std::uint32_t>(r));
    }
    for (;;) {
      meter_.tick();
      if (!singleton_rows_.empty()) {
        std::uint32_t r = singleton_rows_.back();
        singleton_rows_.pop_back();
        if (!row_alive_[r] || row_count_[r] != 1) continue;
        auto [c, value] = find_in_row(r);
        if (c != kNone && ring_.is_unit(value)) pivot(r, c);
        continue;
      }
      if (queue_.empty()) break;
      auto [key, c] = *queue_.begin();
      queue_.erase(queue_.begin());
      queued_key_[c] = kNotQueued;
      std::uint32_t best_row = kNone;
      std::uint32_t best_count = std::numeric_limits<std::uint32_t>::max();
      for (const auto& e : cols_[c]) {
        if (ring_.is_unit(e.value) && row_count_[e.row] < best_count) {
          best_count = row_count_[e.row];
          best_row = e.row;
        }
      }
      // No unit entry: parked until an update touches the column again.
      if (best_row != kNone) pivot(best_row, c);
    }
  }

  std::size_t pivot_count() const { return pivots_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pivots() const { return pivots_; }

  std::vector<std::uint32_t> residual_columns() const {
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (col_alive_[c] && !cols_[c].empty()) out.push_back(static_cast<std::uint32_t>(c));
    }
    return out;
  }
  std::vector<std::uint32_t> zero_columns() const {
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (col_alive_[c] && cols_[c].empty()) out.push_back(static_cast<std::uint32_t>(c));
    }
    return out;
  }
  const Column& column(std::size_t c) const { return cols_[c]; }
  const SparseVec& transform(std::size_t c) const { return transforms_[c]; }
  const Ring& ring() const { return ring_; }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::size_t kNotQueued = std::numeric_limits<std::size_t>::max();

  void enqueue(std::size_t c) {
    if (queued_key_[c] != kNotQueued) {
      queue_.erase({queued_key_[c], static_cast<std::uint32_t>(c)});
      queued_key_[c] = kNotQueued;
    }
    if (!col_alive_[c] || cols_[c].empty()) return;
    queued_key_[c] = cols_[c].size();
    queue_.insert({queued_key_[c], static_cast<std::uint32_t>(c)});
  }

  const Entry* find_entry(std::size_t c, std::uint32_t r) const {
    const auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::uint32_t row) { return e.row < row; });
    if (it != col.end() && it->row == r) return &*it;
    return nullptr;
  }

  std::pair<std::uint32_t, V> find_in_row(std::uint32_t r) const {
    for (std::uint32_t c : row_cols_[r]) {
      if (!col_alive_[c]) continue;
      if (const Entry* e = find_entry(c, r)) return {c, e->value};
    }
    return {kNone, V{}};
  }

  void decrement_row(std::uint32_t r) {
    if (--row_count_[r] == 1 && row_alive_[r]) singleton_rows_.push_back(r);
  }

  // target := target - f * source, maintaining row bookkeeping for target.
  void axpy_column(std::uint32_t target, const V& f, const Column& source) {
    Column& dst = cols_[target];
    Column out;
    out.reserve(dst.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < source.size()) {
      if (j == source.size() || (i < dst.size() && dst[i].row < source[j].row)) {
        out.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || source[j].row < dst[i].row) {
        std::uint32_t r = source[j].row;
        out.push_back({r, ring_.sub_mul(V(0), f, source[j].value)});
        ++row_count_[r];
        row_cols_[r].push_back(target);
        ++j;
      } else {
        std::uint32_t r = dst[i].row;
        V v = ring_.sub_mul(dst[i].value, f, source[j].value);
        if (ring_.is_zero(v)) {
          decrement_row(r);
        } else {
          out.push_back({r, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    live_entries_ = live_entries_ - dst.size() + out.size();
    dst = std::move(out);
  }

  void axpy_transform(std::uint32_t target, const V& f, const SparseVec& source) {
    SparseVec& dst = transforms_[target];
    SparseVec out;
    out.reserve(dst.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < source.size()) {
      if (j == source.size() || (i < dst.size() && dst[i].first < source[j].first)) {
        out.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || source[j].first < dst[i].first) {
        out.push_back({source[j].first, ring_.sub_mul(V(0), f, source[j].second)});
        ++j;
      } else {
        V v = ring_.sub_mul(dst[i].second, f, source[j].second);
        if (!ring_.is_zero(v)) out.push_back({dst[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    live_entries_ = live_entries_ - dst.size() + out.size();
    dst = std::move(out);
  }

  void pivot(std::uint32_t r, std::uint32_t c) {
    const Entry* pe = find_entry(c, r);
    V u_inv = ring_.unit_inverse(pe->value);
    ++epoch_;
    stamp_[c] = epoch_;
    const Column source = cols_[c];
    const SparseVec source_t = track_ ? transforms_[c] : SparseVec{};
    // Copy: axpy_column may append to row_cols_[r] only for rows != r, but
    // iterate a snapshot to be safe against reallocation.
    const std::vector<std::uint32_t> row_cols = row_cols_[r];
    for (std::uint32_t other : row_cols) {
      if (stamp_[other] == epoch_ || !col_alive_[other]) continue;
      stamp_[other] = epoch_;
      const Entry* e = find_entry(other, r);
      if (!e) continue;
      V f = ring_.mul(e->value, u_inv);
      axpy_column(other, f, source);
      if (track_) axpy_transform(other, f, source_t);
      enqueue(other);
    }
    // Row r now holds only the pivot; drop it together with column c.
    for (const auto& e : source) decrement_row(e.row);
    live_entries_ -= cols_[c].size();
    Column().swap(cols_[c]);
    if (track_) {
      live_entries_ -= transforms_[c].size();
      SparseVec().swap(transforms_[c]);
    }
    col_alive_[c] = 0;
    row_alive_[r] = 0;
    std::vector<std::uint32_t>().swap(row_cols_[r]);
    if (queued_key_[c] != kNotQueued) {
      queue_.erase({queued_key_[c], c});
      queued_key_[c] = kNotQueued;
    }
    pivots_.emplace_back(r, c);
    meter_.check_entries(live_entries_);
  }

  Ring ring_;
  BudgetMeter& meter_;
  bool track_;
  std::vector<Column> cols_;
  std::vector<SparseVec> transforms_;
  std::vector<std::uint8_t> col_alive_;
  std::vector<std::uint8_t> row_alive_;
  std::vector<std::uint32_t> row_count_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::set<std::pair<std::size_t, std::uint32_t>> queue_;
  std::vector<std::size_t> queued_key_;
  std::vector<std::uint32_t> singleton_rows_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::size_t live_entries_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots_;
};

}  // namespace pn::detail
