#include "pn/smith.hpp"

#include "elimination.hpp"
#include "pn/errors.hpp"

#include <algorithm>
#include <map>

namespace pn {

namespace {

using Dense = std::vector<std::vector<BigInt>>;
using BigVec = std::vector<std::pair<std::uint32_t, BigInt>>;

Dense identity_dense(std::size_t n) {
  Dense d(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

/// In-place dense Smith normal form. Row operations are mirrored into *u,
/// column operations into *v, so that U * M * V = D.
std::vector<BigInt> dense_smith(Dense& a, Dense* u, Dense* v, BudgetMeter& meter) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if (u) std::swap((*u)[i], (*u)[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    if (v) {
      for (auto& row : *v) std::swap(row[i], row[j]);
    }
  };
  // row_i -= q * row_t
  auto row_op = [&](std::size_t i, std::size_t t, const BigInt& q) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[t][k] != 0) a[i][k] -= q * a[t][k];
    }
    if (u) {
      for (std::size_t k = 0; k < m; ++k) {
        if ((*u)[t][k] != 0) (*u)[i][k] -= q * (*u)[t][k];
      }
    }
  };
  // col_j -= q * col_t
  auto col_op = [&](std::size_t j, std::size_t t, const BigInt& q) {
    for (std::size_t k = 0; k < m; ++k) {
      if (a[k][t] != 0) a[k][j] -= q * a[k][t];
    }
    if (v) {
      for (std::size_t k = 0; k < n; ++k) {
        if ((*v)[k][t] != 0) (*v)[k][j] -= q * (*v)[k][t];
      }
    }
  };

  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      meter.tick();
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        row_op(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        col_op(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder on the cross into the pivot slot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Cross is clear; enforce divisibility of the trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      row_op(t, bad, BigInt(-1));
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      if (u) {
        for (auto& x : (*u)[t]) x = -x;
      }
    }
    meter.check_bits(bit_length(a[t][t]));
    diag.push_back(a[t][t]);
  }
  return diag;
}

SparseIntMatrix dense_to_sparse(const Dense& d, std::size_t rows, std::size_t cols) {
  SparseIntMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (d[r][c] != 0) out.add(r, c, d[r][c]);
    }
  }
  return out;
}

template <class Ring>
std::vector<BigInt> sparse_invariant_factors(const Ring& ring, const SparseIntMatrix& m, BudgetMeter& meter) {
  detail::UnitPivotEliminator<Ring> elim(ring, m, false, meter);
  elim.run();
  std::vector<BigInt> factors(elim.pivot_count(), BigInt(1));
  auto residual_cols = elim.residual_columns();
  if (residual_cols.empty()) return factors;

  std::map<std::uint32_t, std::size_t> row_index;
  for (auto c : residual_cols) {
    for (const auto& e : elim.column(c)) row_index.emplace(e.row, 0);
  }
  std::size_t k = 0;
  for (auto& [r, idx] : row_index) idx = k++;
  meter.check_entries(row_index.size() * residual_cols.size());
  Dense dense(row_index.size(), std::vector<BigInt>(residual_cols.size(), 0));
  for (std::size_t j = 0; j < residual_cols.size(); ++j) {
    for (const auto& e : elim.column(residual_cols[j])) dense[row_index[e.row]][j] = elim.ring().to_big(e.value);
  }
  auto tail = dense_smith(dense, nullptr, nullptr, meter);
  factors.insert(factors.end(), tail.begin(), tail.end());
  return factors;
}

BigVec to_big_vec(const auto& ring, const auto& vec) {
  BigVec out;
  out.reserve(vec.size());
  for (const auto& [i, v] : vec) out.emplace_back(i, ring.to_big(v));
  return out;
}

// a := a - q * b on sparse vectors.
void sub_scaled(BigVec& a, const BigInt& q, const BigVec& b) {
  BigVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -q * b[j].second);
      ++j;
    } else {
      BigInt v = a[i].second - q * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

struct KernelRaw {
  std::vector<BigVec> vectors;
};

template <class Ring>
KernelRaw raw_kernel(const Ring& ring, const SparseIntMatrix& m, BudgetMeter& meter) {
  detail::UnitPivotEliminator<Ring> elim(ring, m, true, meter);
  elim.run();
  KernelRaw out;
  for (auto c : elim.zero_columns()) out.vectors.push_back(to_big_vec(ring, elim.transform(c)));

  // Residual block: column echelon form by Euclidean column operations,
  // carrying the transforms along. Columns left at zero extend the kernel.
  auto residual_cols = elim.residual_columns();
  if (residual_cols.empty()) return out;
  std::vector<BigVec> cols, transforms;
  std::set<std::uint32_t> rows;
  for (auto c : residual_cols) {
    BigVec col;
    for (const auto& e : elim.column(c)) {
      col.emplace_back(e.row, ring.to_big(e.value));
      rows.insert(e.row);
    }
    cols.push_back(std::move(col));
    transforms.push_back(to_big_vec(ring, elim.transform(c)));
  }
  auto entry_at = [](const BigVec& v, std::uint32_t r) -> BigInt {
    auto it = std::lower_bound(v.begin(), v.end(), r, [](const auto& e, std::uint32_t row) { return e.first < row; });
    return (it != v.end() && it->first == r) ? it->second : BigInt(0);
  };
  std::vector<bool> active(cols.size(), true);
  for (std::uint32_t r : rows) {
    for (;;) {
      meter.tick();
      std::size_t best = cols.size();
      BigInt best_val;
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!active[j]) continue;
        BigInt v = entry_at(cols[j], r);
        if (v == 0) continue;
        ++nonzero;
        if (best == cols.size() || abs(v) < abs(best_val)) {
          best = j;
          best_val = v;
        }
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        active[best] = false;
        break;
      }
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!active[j] || j == best) continue;
        BigInt v = entry_at(cols[j], r);
        if (v == 0) continue;
        BigInt q = v / best_val;
        sub_scaled(cols[j], q, cols[best]);
        sub_scaled(transforms[j], q, transforms[best]);
        for (const auto& [idx, val] : cols[j]) meter.check_bits(bit_length(val));
      }
    }
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!active[j]) continue;
    if (!cols[j].empty()) throw_invariant("kernel residual column not reduced to zero");
    out.vectors.push_back(std::move(transforms[j]));
  }
  return out;
}

std::uint32_t lead_index(const BigVec& v) { return v.front().first; }

/// Row-style HNF of independent sparse rows.
std::vector<BigVec> hermite_rows(std::vector<BigVec> rows, BudgetMeter& meter) {
  std::vector<BigVec> result;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw_invariant("hermite_rows: dependent generators");
    active.push_back(i);
  }
  while (!active.empty()) {
    std::uint32_t lead = UINT32_MAX;
    for (auto i : active) lead = std::min(lead, lead_index(rows[i]));
    std::vector<std::size_t> group;
    for (auto i : active) {
      if (lead_index(rows[i]) == lead) group.push_back(i);
    }
    while (group.size() > 1) {
      meter.tick();
      std::size_t best = group[0];
      for (auto i : group) {
        if (abs(rows[i].front().second) < abs(rows[best].front().second)) best = i;
      }
      std::vector<std::size_t> still;
      still.push_back(best);
      for (auto i : group) {
        if (i == best) continue;
        BigInt q = rows[i].front().second / rows[best].front().second;
        sub_scaled(rows[i], q, rows[best]);
        if (rows[i].empty()) throw_invariant("hermite_rows: dependent generators");
        if (lead_index(rows[i]) == lead) still.push_back(i);
      }
      group = std::move(still);
    }
    std::size_t p = group[0];
    if (rows[p].front().second < 0) {
      for (auto& [idx, v] : rows[p]) v = -v;
    }
    result.push_back(std::move(rows[p]));
    active.erase(std::find(active.begin(), active.end(), p));
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < result.size(); ++i) {
    std::uint32_t col = lead_index(result[i]);
    const BigInt pivot = result[i].front().second;
    for (std::size_t h = 0; h < i; ++h) {
      auto& row = result[h];
      auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it == row.end() || it->first != col) continue;
      BigInt q = it->second / pivot;
      if (it->second - q * pivot < 0) q -= 1;
      if (q != 0) sub_scaled(row, q, result[i]);
      for (const auto& [idx, v] : row) meter.check_bits(bit_length(v));
    }
  }
  return result;
}

SparseIntMatrix rows_to_columns(const std::vector<BigVec>& rows, std::size_t length) {
  SparseIntMatrix out(length, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    SparseIntMatrix::Column col;
    for (const auto& [i, v] : rows[j]) col.push_back({i, v});
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

SmithResult smith_normal_form(const SparseIntMatrix& m, bool with_transforms, const Budget& budget) {
  BudgetMeter meter(budget);
  SmithResult result;
  if (with_transforms) {
    meter.check_entries(m.rows() * m.cols() + m.rows() * m.rows() + m.cols() * m.cols());
    Dense a = m.to_dense();
    Dense u = identity_dense(m.rows());
    Dense v = identity_dense(m.cols());
    result.invariant_factors = dense_smith(a, &u, &v, meter);
    result.left = dense_to_sparse(u, m.rows(), m.rows());
    result.right = dense_to_sparse(v, m.cols(), m.cols());
    return result;
  }
  try {
    result.invariant_factors = sparse_invariant_factors(detail::CheckedIntRing{}, m, meter);
  } catch (const detail::Int64Overflow&) {
    result.invariant_factors = sparse_invariant_factors(detail::BigRing{&meter}, m, meter);
  }
  return result;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p, const Budget& budget) {
  if (p >= (1ull << 31) || !is_prime(p)) throw_invalid("rank_mod_p: " + std::to_string(p) + " is not a prime below 2^31");
  BudgetMeter meter(budget);
  detail::UnitPivotEliminator<detail::ModPRing> elim(detail::ModPRing{p}, m, false, meter);
  elim.run();
  if (!elim.residual_columns().empty()) throw_invariant("nonzero residual over a field");
  return elim.pivot_count();
}

SparseIntMatrix kernel_basis(const SparseIntMatrix& m, const Budget& budget) {
  BudgetMeter meter(budget);
  KernelRaw raw;
  try {
    raw = raw_kernel(detail::CheckedIntRing{}, m, meter);
  } catch (const detail::Int64Overflow&) {
    raw = raw_kernel(detail::BigRing{&meter}, m, meter);
  }
  auto rows = hermite_rows(std::move(raw.vectors), meter);
  return rows_to_columns(rows, m.cols());
}

SparseIntMatrix hermite_basis(const SparseIntMatrix& generators, const Budget& budget) {
  BudgetMeter meter(budget);
  std::vector<BigVec> rows;
  for (const auto& col : generators.columns()) {
    BigVec v;
    for (const auto& e : col) v.emplace_back(e.row, e.value);
    rows.push_back(std::move(v));
  }
  return rows_to_columns(hermite_rows(std::move(rows), meter), generators.rows());
}

}  // namespace pn
