#include "pn/errors.hpp"
#include "pn/genus.hpp"

#include <doctest.h>

#include <set>

using namespace pn;

namespace {

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

FactorShape expected_shape(std::uint64_t n) {
  if (n == 1) return {FactorKind::Unit, 0, 0};
  const auto f = factor(n);
  if (f.size() == 1) return {FactorKind::PrimePower, f[0].first, f[0].second};
  if (f.size() == 2 && f[0] == std::make_pair<std::uint64_t, int>(2, 1)) {
    return {FactorKind::TwicePrimePower, f[1].first, f[1].second};
  }
  return {FactorKind::Other, 0, 0};
}

}  // namespace

TEST_CASE("factor_shape against trial division") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto want = expected_shape(n);
    const auto got = factor_shape(n);
    CHECK(got.kind == want.kind);
    if (want.kind == FactorKind::PrimePower || want.kind == FactorKind::TwicePrimePower) {
      CHECK(got.p == want.p);
      CHECK(got.k == want.k);
    }
  }
  CHECK(factor_shape(4) == FactorShape{FactorKind::PrimePower, 2, 2});
  CHECK(factor_shape(18) == FactorShape{FactorKind::TwicePrimePower, 3, 2});
  CHECK(factor_shape(2).kind == FactorKind::PrimePower);
  CHECK(factor_shape(12).kind == FactorKind::Other);
  CHECK(factor_shape(999983).kind == FactorKind::PrimePower);
  CHECK_THROWS_AS(factor_shape(0), InvalidInput);
}

TEST_CASE("classify examples") {
  auto g1 = classify(1);
  CHECK(g1.status == GenusStatus::EqualsN);
  CHECK(g1.source == GenusSource::Vassiliev);
  CHECK(classify(8).status == GenusStatus::EqualsN);
  CHECK(classify(12).status == GenusStatus::LessThanN);
  CHECK(classify(12).source == GenusSource::VanishingTheorem);
  CHECK_FALSE(classify(12).evidence.has_value());

  auto g6 = classify(6);
  CHECK(g6.status == GenusStatus::LessThanN);
  CHECK(g6.source == GenusSource::TwoPCase);
  REQUIRE(g6.evidence.has_value());
  CHECK(g6.evidence->status == VerdictStatus::Zero);

  auto g18 = classify(18);
  CHECK(g18.status == GenusStatus::Unknown);
  CHECK(g18.source == GenusSource::ObstructionNonZeroConjecture);
  CHECK(g18.conjecture_note.has_value());
  REQUIRE(g18.evidence.has_value());
  CHECK(g18.evidence->witnesses.front().to_string() == "bQ7Q1u");
  CHECK_THROWS_AS(classify(0), InvalidInput);
}

TEST_CASE("routing is a trichotomy driven by factor_shape") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto shape = factor_shape(n);
    const auto v = classify(n);
    CHECK(v.n == n);
    switch (shape.kind) {
      case FactorKind::Unit:
      case FactorKind::PrimePower:
        CHECK(v.status == GenusStatus::EqualsN);
        CHECK(v.source == GenusSource::Vassiliev);
        break;
      case FactorKind::Other:
        CHECK(v.status == GenusStatus::LessThanN);
        CHECK(v.source == GenusSource::VanishingTheorem);
        break;
      case FactorKind::TwicePrimePower: {
        REQUIRE(v.evidence.has_value());
        const auto st = v.evidence->status;
        if (st == VerdictStatus::Zero) {
          CHECK(v.status == GenusStatus::LessThanN);
          CHECK(v.source == (shape.k == 1 ? GenusSource::TwoPCase : GenusSource::ObstructionZero));
        } else if (st == VerdictStatus::NonZero) {
          CHECK(v.status == GenusStatus::Unknown);
          CHECK(v.source == GenusSource::ObstructionNonZeroConjecture);
        } else {
          CHECK(v.status == GenusStatus::Unknown);
          CHECK(v.source == GenusSource::ObstructionUndetermined);
        }
        CHECK(v.conjecture_note.has_value() == (v.source == GenusSource::ObstructionNonZeroConjecture));
        break;
      }
    }
  }
}

TEST_CASE("table up to 100") {
  std::set<std::uint64_t> equals, unknown;
  for (const auto& v : genus_table(1, 100, 4)) {
    if (v.status == GenusStatus::EqualsN) equals.insert(v.n);
    if (v.status == GenusStatus::Unknown) unknown.insert(v.n);
  }
  const std::set<std::uint64_t> prime_powers{1,  2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17, 19, 23, 25, 27, 29,
                                             31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64, 67, 71, 73, 79, 81, 83, 89, 97};
  CHECK(equals == prime_powers);
  CHECK(unknown == std::set<std::uint64_t>{18, 50, 54, 98});
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    CHECK(classify(2 * p).source == GenusSource::TwoPCase);
  }
}

TEST_CASE("genus_table is thread independent and range checked") {
  const auto a = genus_table(1, 3000, 1);
  const auto b = genus_table(1, 3000, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == i + 1);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].source == b[i].source);
  }
  CHECK_THROWS_AS(genus_table(0, 10), InvalidInput);
  CHECK_THROWS_AS(genus_table(10, 5), InvalidInput);
  CHECK_THROWS_AS(genus_table(1, 1'000'001), InvalidInput);
  CHECK(genus_table(999'999, 1'000'000).size() == 2);
}
