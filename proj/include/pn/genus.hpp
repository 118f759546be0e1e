#pragma once

#include "pn/dyer_lashof.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pn {

enum class FactorKind { Unit, PrimePower, TwicePrimePower, Other };

/// n = 1 is Unit; n = p^k (any prime, k >= 1) is PrimePower; n = 2 p^k with p
/// odd is TwicePrimePower; everything else is Other.
struct FactorShape {
  FactorKind kind = FactorKind::Other;
  std::uint64_t p = 0;
  int k = 0;
  friend bool operator==(const FactorShape&, const FactorShape&) = default;
};

FactorShape factor_shape(std::uint64_t n);
std::string to_string(const FactorShape& shape);

enum class GenusStatus { EqualsN, LessThanN, Unknown };
enum class GenusSource {
  Vassiliev,
  VanishingTheorem,
  TwoPCase,
  ObstructionZero,
  ObstructionNonZeroConjecture,
  ObstructionUndetermined
};

std::string to_string(GenusStatus s);
std::string to_string(GenusSource s);

/// Verdict on the Schwartz genus of the covering F(C,n) -> F(C,n)/S_n.
struct GenusVerdict {
  std::uint64_t n = 0;
  GenusStatus status = GenusStatus::Unknown;
  GenusSource source = GenusSource::ObstructionUndetermined;
  std::optional<std::string> conjecture_note;
  std::optional<HomologyVerdict> evidence;  ///< set whenever the obstruction group was consulted
};

/// Prime powers (and n = 1) have genus n; n neither p^k nor 2p^k has genus
/// below n; n = 2p^k is decided by the obstruction group H_{n-1}(S_n; L_n).
GenusVerdict classify(std::uint64_t n);

/// classify over [first, last], 1 <= first <= last <= 10^6.
std::vector<GenusVerdict> genus_table(std::uint64_t first, std::uint64_t last, unsigned threads = 1);

}  // namespace pn
