#pragma once

#include "pn/abelian_group.hpp"
#include "pn/budget.hpp"
#include "pn/lie_module.hpp"
#include "pn/sparse_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pn {

/// H_0(Sigma_n; M): the lattice modulo the span of (g - 1)v over the two
/// generators g.
AbelianGroup coinvariants(const IntegralRepresentation& rep, const Budget& budget = {});

/// Rank of the k-th chain group of the normalized bar complex:
/// (n! - 1)^k * dim.
std::size_t bar_chain_rank(const IntegralRepresentation& rep, int k);

/// Normalized bar complex with coefficients in rep, boundary d_k : C_k -> C_{k-1}
/// for k >= 1. Basis of C_k: module vector j tensor [g_1|...|g_k], g_i non-identity
/// permutations in lexicographic order, indexed by (g_1, ..., g_k, j) with j fastest.
///   d(m [g_1|...|g_k]) = g_1^{-1} m [g_2|...|g_k]
///                      + sum_i (-1)^i m [..|g_i g_{i+1}|..]
///                      + (-1)^k m [g_1|...|g_{k-1}]
SparseIntMatrix bar_boundary(const IntegralRepresentation& rep, int k, const Budget& budget = {});

/// H_k(Sigma_n; M) from the bar complex.
AbelianGroup bar_homology(const IntegralRepresentation& rep, int k, const Budget& budget = {});
/// dim over F_p of H_k(Sigma_n; M / p).
std::size_t bar_homology_mod_p(const IntegralRepresentation& rep, int k, std::uint64_t p, const Budget& budget = {});

struct ComparisonRow {
  int degree = 0;
  std::string left;
  std::string right;
  bool equal = false;
  std::string relation;  ///< the identity being checked, e.g. "H_2(S_3; L_3) = H_0(S_3; L_3 x sign)"
};

struct ComparisonReport {
  std::string name;
  std::vector<ComparisonRow> rows;
  bool all_equal() const;
};

/// H_i(S_3; L_3) against H_{i-2}(S_3; L_3 x sign) for 0 <= i <= max_degree (<= 3).
ComparisonReport verify_l3_degree_shift(int max_degree = 3, const ComputeOptions& options = {});
/// Coinvariants of L_3 x sign against those of L_6, and L_6 against the
/// Dyer-Lashof prediction for dimension 4 at p = 3.
ComparisonReport verify_l6_coinvariants(const ComputeOptions& options = {});
/// H_i(S_2; L_2) and H_i(S_2; L_2 x sign) against H_i(S_4; L_4), i <= max_degree
/// (<= 2). Degrees 0 and 1 are integral, two rows each; degree 2 compares
/// dimensions over F_2 in a single row.
ComparisonReport verify_les_n4(int max_degree = 2, const ComputeOptions& options = {});

}  // namespace pn
