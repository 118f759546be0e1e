#include "pn/genus.hpp"

#include "pn/budget.hpp"
#include "pn/errors.hpp"

namespace pn {

namespace {

constexpr std::uint64_t kTableLimit = 1'000'000;

/// Writes m = p^k if m is a power of a single prime.
bool prime_power(std::uint64_t m, std::uint64_t& p, int& k) {
  if (m < 2) return false;
  std::uint64_t q = 0;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      q = d;
      break;
    }
  }
  if (q == 0) q = m;
  int e = 0;
  while (m % q == 0) {
    m /= q;
    ++e;
  }
  if (m != 1) return false;
  p = q;
  k = e;
  return true;
}

}  // namespace

FactorShape factor_shape(std::uint64_t n) {
  if (n == 0) throw_invalid("n must be positive");
  FactorShape s;
  if (n == 1) {
    s.kind = FactorKind::Unit;
    return s;
  }
  if (prime_power(n, s.p, s.k)) {
    s.kind = FactorKind::PrimePower;
    return s;
  }
  if (n % 2 == 0 && prime_power(n / 2, s.p, s.k) && s.p != 2) {
    s.kind = FactorKind::TwicePrimePower;
    return s;
  }
  return FactorShape{};
}

std::string to_string(const FactorShape& shape) {
  switch (shape.kind) {
    case FactorKind::Unit: return "Unit";
    case FactorKind::PrimePower:
      return "PrimePower(" + std::to_string(shape.p) + ", " + std::to_string(shape.k) + ")";
    case FactorKind::TwicePrimePower:
      return "TwicePrimePower(" + std::to_string(shape.p) + ", " + std::to_string(shape.k) + ")";
    case FactorKind::Other: return "Other";
  }
  return "Other";
}

std::string to_string(GenusStatus s) {
  switch (s) {
    case GenusStatus::EqualsN: return "EqualsN";
    case GenusStatus::LessThanN: return "LessThanN";
    case GenusStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(GenusSource s) {
  switch (s) {
    case GenusSource::Vassiliev: return "Vassiliev";
    case GenusSource::VanishingTheorem: return "VanishingTheorem";
    case GenusSource::TwoPCase: return "TwoPCase";
    case GenusSource::ObstructionZero: return "ObstructionZero";
    case GenusSource::ObstructionNonZeroConjecture: return "ObstructionNonZeroConjecture";
    case GenusSource::ObstructionUndetermined: return "ObstructionUndetermined";
  }
  return "ObstructionUndetermined";
}

GenusVerdict classify(std::uint64_t n) {
  const auto shape = factor_shape(n);
  GenusVerdict v;
  v.n = n;
  switch (shape.kind) {
    case FactorKind::Unit:
    case FactorKind::PrimePower:
      v.status = GenusStatus::EqualsN;
      v.source = GenusSource::Vassiliev;
      return v;
    case FactorKind::Other:
      v.status = GenusStatus::LessThanN;
      v.source = GenusSource::VanishingTheorem;
      return v;
    case FactorKind::TwicePrimePower:
      break;
  }
  v.evidence = obstruction_group(n);
  switch (v.evidence->status) {
    case VerdictStatus::Zero:
      v.status = GenusStatus::LessThanN;
      v.source = shape.k == 1 ? GenusSource::TwoPCase : GenusSource::ObstructionZero;
      break;
    case VerdictStatus::NonZero:
      v.status = GenusStatus::Unknown;
      v.source = GenusSource::ObstructionNonZeroConjecture;
      v.conjecture_note = "obstruction group H_{n-1}(S_n; L_n) is nonzero; conjecturally g(q_n) = n";
      break;
    case VerdictStatus::Undetermined:
      v.status = GenusStatus::Unknown;
      v.source = GenusSource::ObstructionUndetermined;
      break;
  }
  return v;
}

std::vector<GenusVerdict> genus_table(std::uint64_t first, std::uint64_t last, unsigned threads) {
  if (first < 1 || last < first || last > kTableLimit) throw_invalid("genus table range must lie in 1..1000000");
  std::vector<GenusVerdict> out(last - first + 1);
  parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = classify(first + i); });
  return out;
}

}  // namespace pn
