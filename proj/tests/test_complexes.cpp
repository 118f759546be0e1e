#include "pn/complexes.hpp"
#include "pn/errors.hpp"
#include "pn/homology.hpp"

#include <doctest.h>

#include <map>
#include <sstream>

using namespace pn;

namespace {

SetPartition P(const std::string& s) { return SetPartition::parse(s); }

/// Boundary of the (d+1)-simplex on `first`..`first+d+1`: a d-sphere.
std::vector<std::vector<std::uint32_t>> sphere_faces(int d) {
  std::vector<std::vector<std::uint32_t>> faces;
  const std::uint32_t vertices = static_cast<std::uint32_t>(d + 2);
  for (std::uint32_t mask = 1; mask < (1u << vertices) - 1; ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t v = 0; v < vertices; ++v) {
      if (mask & (1u << v)) s.push_back(v);
    }
    faces.push_back(s);
  }
  return faces;
}

EquivariantComplex sphere(int d) {
  std::vector<std::string> labels;
  for (int v = 0; v < d + 2; ++v) labels.push_back("v" + std::to_string(v));
  return EquivariantComplex::build(labels, sphere_faces(d), {}, 0);
}

/// Nonzero reduced homology as degree -> group.
std::map<int, AbelianGroup> reduced_support(const EquivariantComplex& c) {
  std::map<int, AbelianGroup> out;
  if (c.dimension() < 0) {
    out[-1] = AbelianGroup::free(1);
    return out;
  }
  auto all = homology_all(c);
  for (std::size_t d = 0; d < all.size(); ++d) {
    if (!all[d].is_trivial()) out[static_cast<int>(d)] = all[d];
  }
  return out;
}

}  // namespace

TEST_CASE("order complex examples") {
  auto antichain = order_complex(all_partitions(3, PartitionBounds{false, false}));
  CHECK(antichain.f_vector() == std::vector<std::size_t>{3});

  auto chain = order_complex({P("1,2|3"), P("1|2|3")});
  CHECK(chain.f_vector() == std::vector<std::size_t>{2, 1});
  for (const auto& g : homology_all(chain)) CHECK(g.is_trivial());

  const auto elems = all_partitions(4, PartitionBounds{false, false});
  REQUIRE(elems.size() == 13);
  std::size_t pairs = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (!(a == b) && refines(a, b)) ++pairs;
    }
  }
  auto lam = order_complex(elems);
  CHECK(lam.f_vector() == std::vector<std::size_t>{13, pairs});
  CHECK(pairs == 18);

  CHECK_THROWS_AS(order_complex({P("1,2|3"), P("1,2|3")}), InvalidInput);
}

TEST_CASE("K_n small cases") {
  auto k2 = k_n(2);
  CHECK(k2.f_vector() == std::vector<std::size_t>{2});
  for (std::size_t g = 0; g < k2.generators().size(); ++g) {
    CHECK(k2.action(g, 0) == std::vector<SignedIndex>{{0, 1}, {1, 1}});
  }
  auto k3 = k_n(3);
  CHECK(k3.f_vector() == std::vector<std::size_t>{5, 6});
  CHECK(homology(k3, 1) == AbelianGroup::free(2));
  CHECK(reduced_support(k_n(4)) == std::map<int, AbelianGroup>{{2, AbelianGroup::free(6)}});
  CHECK(k_n(1).dimension() == -1);
  CHECK(k3.vertex_labels()[0] == "SOUTH");
  CHECK(k3.vertex_labels()[1] == "NORTH");
  CHECK_THROWS_AS(k_n(0), InvalidInput);
  CHECK_THROWS_AS(k_n(10), ResourceExhausted);
  Budget small;
  small.max_entries = 100;
  CHECK_THROWS_AS(k_n(5, ComputeOptions{small, 1}), ResourceExhausted);
}

TEST_CASE("K_n is a chain complex with an equivariant signed action, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto k = k_n(n);
    CHECK(k.boundary_squares_to_zero());
    CHECK(k.is_equivariant());
    std::size_t total = 0;
    for (auto f : k.f_vector()) total += f;
    CHECK(total == k_n_simplex_count(n));
  }
}

TEST_CASE("K_n is a wedge of (n-1)! spheres of dimension n-2") {
  for (int n = 2; n <= 6; ++n) {
    const auto mu = mobius_partition_lattice(n);
    const auto rank = static_cast<std::size_t>(mu < 0 ? -mu : mu);
    CHECK(rank == factorial(n - 1));
    CHECK(reduced_support(k_n(n)) == std::map<int, AbelianGroup>{{n - 2, AbelianGroup::free(rank)}});
  }
}

TEST_CASE("the action on order complexes never reverses orientation") {
  // Vertices are numbered along a linear extension of refinement, and every
  // permutation preserves refinement, so a sorted chain maps to a sorted
  // chain. Join generators act block by block, so the same holds there.
  for (int n = 3; n <= 5; ++n) {
    auto k = k_n(n);
    for (const auto& sigma : all_permutations(n)) {
      const auto map = k_n_vertex_map(n, sigma);
      CHECK(map[0] == 0);
      CHECK(map[1] == 1);
      for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.chain_action(d, map)) CHECK(s.sign == 1);
      }
    }
  }
  auto j = k_lambda(P("1,2|3,4"));
  bool reversed = false;
  for (std::size_t g = 0; g < j.generators().size(); ++g) {
    for (int d = 0; d <= j.dimension(); ++d) {
      for (const auto& s : j.action(g, d)) reversed = reversed || s.sign == -1;
    }
  }
  CHECK_FALSE(reversed);
}

TEST_CASE("K_lambda examples") {
  auto c = k_lambda(P("1,2|3,4"));
  CHECK(reduced_support(c) == std::map<int, AbelianGroup>{{1, AbelianGroup::free(1)}});
  CHECK(k_lambda(P("1,2|3")).f_vector() == k_n(2).f_vector());
  CHECK(reduced_support(k_lambda(P("1,2|3"))) == std::map<int, AbelianGroup>{{0, AbelianGroup::free(1)}});
  auto one = k_lambda(P("1,2,3,4"));
  auto k4 = k_n(4);
  CHECK(one.f_vector() == k4.f_vector());
  for (int d = 1; d <= k4.dimension(); ++d) CHECK(one.boundary(d) == k4.boundary(d));
  CHECK_THROWS_AS(k_lambda(P("1|2|3")), InvalidInput);
  CHECK(c.boundary_squares_to_zero());
  CHECK(c.is_equivariant());
}

TEST_CASE("K_lambda homology: dimension n - c - 1, rank prod (|block| - 1)!") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lambda : all_partitions(n, PartitionBounds{true, false})) {
      std::uint64_t rank = 1;
      for (const auto& b : lambda.blocks()) rank *= factorial(static_cast<int>(b.size()) - 1);
      const int dim = n - lambda.block_count() - 1;
      const auto expected = std::map<int, AbelianGroup>{{dim, AbelianGroup::free(rank)}};
      CHECK(reduced_support(k_lambda(lambda)) == expected);
      CHECK(reduced_support(k_lambda_direct(lambda)) == expected);
      CHECK(k_lambda(lambda).reduced_euler_characteristic() == k_lambda_direct(lambda).reduced_euler_characteristic());
    }
  }
}

TEST_CASE("join of spheres is a sphere") {
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      auto j = join(sphere(a), sphere(b));
      CHECK(j.boundary_squares_to_zero());
      CHECK(reduced_support(j) == std::map<int, AbelianGroup>{{a + b + 1, AbelianGroup::free(1)}});
    }
  }
  // The empty complex is the identity for join.
  auto s1 = sphere(1);
  auto left = join(EquivariantComplex::empty(), s1);
  CHECK(left.f_vector() == s1.f_vector());
  CHECK(join(s1, EquivariantComplex::empty()).f_vector() == s1.f_vector());
  // A wedge-of-spheres factor multiplies ranks.
  CHECK(reduced_support(join(k_n(3), k_n(3))) == std::map<int, AbelianGroup>{{3, AbelianGroup::free(4)}});
}

TEST_CASE("Euler characteristic identity for the fat diagonal") {
  auto r2 = euler_filtration_check(2);
  CHECK(r2.subquotient_sum == 1);
  CHECK(r2.target == 1);
  CHECK(k_lambda(P("1,2,3")).reduced_euler_characteristic() == -2);
  CHECK(k_lambda(P("1,2|3")).reduced_euler_characteristic() == 1);
  for (int n = 2; n <= 6; ++n) {
    auto r = euler_filtration_check(n);
    CHECK(r.agree);
    CHECK(r.subquotient_sum == 1);
    CHECK(r.target == 1);
  }
  CHECK_THROWS_AS(euler_filtration_check(1), InvalidInput);
  CHECK_THROWS_AS(euler_filtration_check(8), ResourceExhausted);
}

TEST_CASE("boundary bundle round trip") {
  auto k = k_n(4);
  std::stringstream ss;
  write_boundary_bundle(ss, k);
  auto back = read_boundary_bundle(ss);
  REQUIRE(back.size() == static_cast<std::size_t>(k.dimension()));
  for (int d = 1; d <= k.dimension(); ++d) CHECK(back[static_cast<std::size_t>(d - 1)] == k.boundary(d));
}

TEST_CASE("simplex labels and lookup") {
  auto k = k_n(3);
  CHECK(k.simplex_label(1, 0).front() == '[');
  const auto& edges = k.simplices(1);
  for (std::size_t i = 0; i < edges.size(); ++i) CHECK(edges.find(edges[i]) == i);
  std::vector<std::uint32_t> missing{0, 1};  // the poles are never joined
  CHECK_FALSE(edges.find(missing).has_value());
}
