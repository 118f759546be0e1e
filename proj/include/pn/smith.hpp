#pragma once

#include "pn/bigint.hpp"
#include "pn/budget.hpp"
#include "pn/sparse_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pn {

struct SmithResult {
  /// d_1 | d_2 | ... | d_r, all positive; r is the rank over Q.
  std::vector<BigInt> invariant_factors;
  /// Present when requested: U * M * V is diagonal with the factors above.
  std::optional<SparseIntMatrix> left;
  std::optional<SparseIntMatrix> right;

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Smith normal form. Without transforms the matrix is first reduced by
/// sparse unit-pivot elimination (64-bit fast path, arbitrary precision on
/// overflow) and only the leftover block goes through the dense algorithm.
/// With transforms the dense algorithm runs on the whole matrix.
SmithResult smith_normal_form(const SparseIntMatrix& m, bool with_transforms = false,
                              const Budget& budget = {});

/// Rank over F_p. p must be a prime below 2^31.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p, const Budget& budget = {});

/// Basis of the saturated integer kernel, one basis vector per column, in
/// Hermite normal form (the row-style HNF of the basis-as-rows matrix).
SparseIntMatrix kernel_basis(const SparseIntMatrix& m, const Budget& budget = {});

/// Row-style Hermite normal form of the lattice spanned by the columns of
/// `generators`, returned again as columns. The columns must be linearly
/// independent.
SparseIntMatrix hermite_basis(const SparseIntMatrix& generators, const Budget& budget = {});

bool is_prime(std::uint64_t p);

}  // namespace pn
