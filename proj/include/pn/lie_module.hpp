#pragma once

#include "pn/budget.hpp"
#include "pn/int_matrix.hpp"
#include "pn/permutation.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pn {

/// A Z-lattice with a left Sigma_n action, stored through the matrices of
/// the two generators (1 2) and (1 2 ... n).
struct IntegralRepresentation {
  int n = 0;
  std::size_t dim = 0;
  IntMatrix transposition;  ///< action of (1 2)
  IntMatrix cycle;          ///< action of (1 2 ... n)
  std::string basis_provenance;
};

/// L_n = reduced H_{n-2}(K_n) in the Hermite basis of the top cycles.
/// 2 <= n <= 7.
IntegralRepresentation extract_ln(int n, const ComputeOptions& options = {});

/// Z with trivial action.
IntegralRepresentation trivial_representation(int n);

/// Multiplies each generator matrix by the sign of the generator.
IntegralRepresentation tensor_sign(const IntegralRepresentation& rep);

/// Matrix of an arbitrary permutation, A(sigma tau) = A(sigma) A(tau).
IntMatrix act(const IntegralRepresentation& rep, const Permutation& sigma);

/// Checks the Coxeter presentation through s_1 = (1 2), s_{i+1} = C s_i C^-1:
/// s_i^2 = 1, (s_i s_{i+1})^3 = 1, (s_i s_j)^2 = 1 for |i-j| >= 2, plus
/// C^n = 1 and C = s_1 s_2 ... s_{n-1}.
bool satisfies_relations(const IntegralRepresentation& rep);

struct CharacterValue {
  std::vector<int> cycle_type;  ///< descending
  std::uint64_t class_size = 0;
  std::int64_t value = 0;
};

/// Trace of the representation on each conjugacy class, in the order of
/// conjugacy_class_reps.
std::vector<CharacterValue> character(const IntegralRepresentation& rep);

/// Character of L_n (optionally sign-twisted) from the alternating trace on
/// the chains of K_n, without extracting the module. n <= 7.
std::vector<CharacterValue> character_via_hopf_trace(int n, bool sign_twist, const ComputeOptions& options = {});

/// sum over classes of size * a * b, i.e. n! times the character inner
/// product.
std::int64_t weighted_character_product(const std::vector<CharacterValue>& a, const std::vector<CharacterValue>& b);

/// Text bundle: a header comment line, then the two generator matrices as
/// triplet blocks.
void write_representation(std::ostream& os, const IntegralRepresentation& rep);
IntegralRepresentation read_representation(std::istream& is);

}  // namespace pn
