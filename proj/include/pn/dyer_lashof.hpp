#pragma once

#include "pn/abelian_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pn {

/// beta^{e_1} Q^{s_1} ... beta^{e_k} Q^{s_k} u at an odd prime p, u of degree 1.
struct DLWord {
  struct Entry {
    int epsilon = 0;  ///< 0 or 1
    std::int64_t s = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::uint64_t p = 3;
  std::vector<Entry> entries;

  /// "bQ7Q1u" style: a "b" before each Q carrying a Bockstein.
  std::string to_string() const;
  static DLWord parse(std::uint64_t p, const std::string& text);
  friend bool operator==(const DLWord&, const DLWord&) = default;
};

/// 1 + (k - 1) + sum_i (2 s_i (p - 1) - e_i).
std::int64_t degree(const DLWord& w);

/// s_i > p s_{i+1} - e_{i+1} for consecutive pairs, every s_i >= 1 and
/// e_i in {0, 1}. Words of length one only need s >= 1.
bool is_completely_inadmissible(const DLWord& w);

/// All completely inadmissible words of length k and degree d, ordered
/// lexicographically by (e_1, s_1, e_2, s_2, ...).
std::vector<DLWord> enumerate_basis(std::uint64_t p, int k, std::int64_t d);

/// Exact integral answer for k = 1: Z/p when d = 2s(p-1) with s >= 1, else 0.
AbelianGroup k1_integral(std::uint64_t p, std::int64_t d);

enum class VerdictStatus { Zero, NonZero, Undetermined };
std::string to_string(VerdictStatus s);

struct HomologyVerdict {
  std::uint64_t p = 0;
  int k = 0;
  std::int64_t dimension = 0;
  VerdictStatus status = VerdictStatus::Undetermined;
  std::size_t mod_p_dimension = 0;       ///< size of the word basis in this dimension
  std::size_t bockstein_image_rank = 0;  ///< words with e_1 = 1
  std::vector<DLWord> witnesses;         ///< words certifying NonZero
};

/// Tri-state integral conclusion. k = 1 is exact via k1_integral; for k >= 2
/// an empty basis gives Zero, a word with e_1 = 1 gives NonZero, and anything
/// else stays Undetermined.
HomologyVerdict integral_verdict(std::uint64_t p, int k, std::int64_t d);

/// For n = 2 p^k with p odd: the verdict for dimension 4 p^k - 3.
HomologyVerdict obstruction_group(std::uint64_t n);

}  // namespace pn
