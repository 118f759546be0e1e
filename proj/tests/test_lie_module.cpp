#include "pn/errors.hpp"
#include "pn/lie_module.hpp"
#include "pn/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

using namespace pn;

namespace {

int mobius_number(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  return d > 1 ? -result : result;
}

/// sign(sigma) times the character of the free Lie algebra's multilinear
/// part: nonzero only on classes d^(n/d), where it is
/// mu(d) (n/d - 1)! d^(n/d - 1).
std::int64_t expected_character(const std::vector<int>& type, bool twist) {
  int n = 0;
  for (int c : type) n += c;
  const int d = type.front();
  std::int64_t lie = 0;
  if (std::all_of(type.begin(), type.end(), [d](int c) { return c == d; })) {
    const int m = n / d;
    lie = mobius_number(d) * static_cast<std::int64_t>(factorial(m - 1));
    for (int i = 1; i < m; ++i) lie *= d;
  }
  const int sign = ((n - static_cast<int>(type.size())) % 2) ? -1 : 1;
  return twist ? lie : sign * lie;
}

std::map<std::vector<int>, std::int64_t> by_class(const std::vector<CharacterValue>& chi) {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& v : chi) out[v.cycle_type] = v.value;
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

}  // namespace

TEST_CASE("L_n dimensions and the Coxeter relations") {
  for (int n = 2; n <= 6; ++n) {
    auto rep = extract_ln(n);
    CHECK(rep.n == n);
    CHECK(rep.dim == factorial(n - 1));
    const auto mu = mobius_partition_lattice(n);
    CHECK(rep.dim == static_cast<std::size_t>(mu < 0 ? -mu : mu));
    CHECK(satisfies_relations(rep));
    CHECK(satisfies_relations(tensor_sign(rep)));
    CHECK(rep.transposition.determinant() * rep.transposition.determinant() == 1);
    CHECK(rep.cycle.determinant() * rep.cycle.determinant() == 1);
    CHECK_FALSE(rep.basis_provenance.empty());
  }
  CHECK_THROWS_AS(extract_ln(1), InvalidInput);
  CHECK_THROWS(extract_ln(8));
}

TEST_CASE("small L_n are explicit") {
  auto l2 = extract_ln(2);
  CHECK(l2.dim == 1);
  // K_2 is the two fixed poles, so L_2 is trivial.
  CHECK(l2.transposition == IntMatrix::from_rows({{1}}));
  auto l3 = extract_ln(3);
  auto chi = by_class(character(l3));
  CHECK(chi[{1, 1, 1}] == 2);
  CHECK(chi[{2, 1}] == 0);
  CHECK(chi[{3}] == -1);
  auto chi4 = by_class(character(extract_ln(4)));
  CHECK(chi4 == std::map<std::vector<int>, std::int64_t>{
                    {{1, 1, 1, 1}, 6}, {{2, 1, 1}, 0}, {{2, 2}, -2}, {{3, 1}, 0}, {{4}, 0}});
  auto chi5 = by_class(character(extract_ln(5)));
  CHECK(chi5[{1, 1, 1, 1, 1}] == 24);
  CHECK(chi5[{5}] == -1);
  CHECK(chi5[{2, 2, 1}] == 0);
}

TEST_CASE("characters match sign times the Lie character, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto rep = extract_ln(n);
    for (bool twist : {false, true}) {
      const auto matrix_chi = character(twist ? tensor_sign(rep) : rep);
      const auto hopf_chi = character_via_hopf_trace(n, twist);
      REQUIRE(matrix_chi.size() == hopf_chi.size());
      for (std::size_t i = 0; i < matrix_chi.size(); ++i) {
        CHECK(matrix_chi[i].cycle_type == hopf_chi[i].cycle_type);
        CHECK(matrix_chi[i].class_size == hopf_chi[i].class_size);
        CHECK(matrix_chi[i].value == hopf_chi[i].value);
        CHECK(matrix_chi[i].value == expected_character(matrix_chi[i].cycle_type, twist));
      }
      const auto norm = weighted_character_product(matrix_chi, matrix_chi);
      CHECK(norm > 0);
      CHECK(norm % static_cast<std::int64_t>(factorial(n)) == 0);
    }
  }
  // The n = 7 character is available without building the module.
  for (const auto& v : character_via_hopf_trace(7, false)) {
    CHECK(v.value == expected_character(v.cycle_type, false));
  }
}

TEST_CASE("act is a homomorphism and a class function on traces") {
  std::mt19937_64 rng(20260401);
  for (int n = 2; n <= 5; ++n) {
    auto rep = extract_ln(n);
    for (int trial = 0; trial < 50; ++trial) {
      auto s = random_permutation(n, rng);
      auto t = random_permutation(n, rng);
      CHECK(act(rep, s * t) == act(rep, s) * act(rep, t));
      CHECK(act(rep, t * s * t.inverse()).trace() == act(rep, s).trace());
    }
    CHECK(act(rep, Permutation::identity(n)).is_identity());
    CHECK(act(rep, Permutation::transposition(n, 1, 2)) == rep.transposition);
    CHECK(act(rep, Permutation::long_cycle(n)) == rep.cycle);
  }
}

TEST_CASE("sign twist and the trivial module") {
  auto rep = extract_ln(4);
  auto twice = tensor_sign(tensor_sign(rep));
  CHECK(twice.transposition == rep.transposition);
  CHECK(twice.cycle == rep.cycle);
  CHECK(tensor_sign(rep).transposition == rep.transposition.scaled(-1));
  CHECK(tensor_sign(rep).cycle == rep.cycle.scaled(-1));  // a 4-cycle is odd
  auto triv = trivial_representation(5);
  CHECK(satisfies_relations(triv));
  for (const auto& v : character(triv)) CHECK(v.value == 1);
  // <L_n, trivial> = 0 over Q for n >= 3.
  CHECK(weighted_character_product(character(extract_ln(5)), character(triv)) == 0);
}

TEST_CASE("broken relations are detected") {
  auto rep = extract_ln(3);
  rep.cycle = rep.transposition;
  CHECK_FALSE(satisfies_relations(rep));
}

TEST_CASE("representation text round trip") {
  auto rep = extract_ln(4);
  std::stringstream ss;
  write_representation(ss, rep);
  auto back = read_representation(ss);
  CHECK(back.n == rep.n);
  CHECK(back.dim == rep.dim);
  CHECK(back.transposition == rep.transposition);
  CHECK(back.cycle == rep.cycle);
  std::stringstream bad("% representation n 4 dim 6\n");
  CHECK_THROWS(read_representation(bad));
}
