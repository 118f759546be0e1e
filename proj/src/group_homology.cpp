#include "pn/group_homology.hpp"

#include "pn/dyer_lashof.hpp"
#include "pn/errors.hpp"
#include "pn/homology.hpp"
#include "pn/smith.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace pn {

namespace {

/// Group elements with their matrices, inverses and multiplication table.
struct GroupData {
  std::vector<Permutation> elements;  // lexicographic, identity first
  std::vector<IntMatrix> matrices;
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint32_t> product;  // product[a * g + b] = index of a*b
  std::size_t order() const { return elements.size(); }
};

GroupData group_data(const IntegralRepresentation& rep) {
  if (rep.n > 6) throw_resource("bar complex is capped at n = 6");
  GroupData g;
  g.elements = all_permutations(rep.n);
  const std::size_t order = g.elements.size();
  std::map<Permutation, std::uint32_t> index;
  for (std::uint32_t i = 0; i < order; ++i) index.emplace(g.elements[i], i);
  for (const auto& e : g.elements) {
    g.matrices.push_back(act(rep, e));
    g.inverse.push_back(index.at(e.inverse()));
  }
  g.product.resize(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) g.product[a * order + b] = index.at(g.elements[a] * g.elements[b]);
  }
  return g;
}

std::size_t checked_pow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > SIZE_MAX / base) throw_resource("bar complex rank overflows");
    r *= base;
  }
  return r;
}

SparseIntMatrix build_bar_boundary(const IntegralRepresentation& rep, const GroupData& g, int k,
                                   const Budget& budget) {
  const std::size_t m = rep.dim;
  const std::size_t base = g.order() - 1;
  const std::size_t tuples = checked_pow(base, k);
  const std::size_t lower_tuples = checked_pow(base, k - 1);
  BudgetMeter meter(budget);
  meter.check_entries(tuples * m * (m + static_cast<std::size_t>(k) + 1));

  SparseIntMatrix d(lower_tuples * m, tuples * m);
  std::vector<std::uint32_t> word(static_cast<std::size_t>(k));
  std::vector<std::uint32_t> shorter(static_cast<std::size_t>(k > 0 ? k - 1 : 0));
  auto encode = [&](const std::vector<std::uint32_t>& w) {
    std::size_t idx = 0;
    for (auto x : w) idx = idx * base + (x - 1);
    return idx;
  };
  for (std::size_t t = 0; t < tuples; ++t) {
    meter.tick();
    std::size_t rest = t;
    for (int i = k - 1; i >= 0; --i) {
      word[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % base) + 1;
      rest /= base;
    }
    for (std::size_t j = 0; j < m; ++j) {
      std::map<std::uint32_t, std::int64_t> col;
      // g_1^{-1} m [g_2|...|g_k]
      std::copy(word.begin() + 1, word.end(), shorter.begin());
      const std::size_t head = encode(shorter) * m;
      const auto& a = g.matrices[g.inverse[word[0]]];
      for (std::size_t r = 0; r < m; ++r) {
        if (a(r, j) != 0) col[static_cast<std::uint32_t>(head + r)] += a(r, j);
      }
      // merged faces
      for (int i = 1; i < k; ++i) {
        const auto merged = g.product[word[static_cast<std::size_t>(i - 1)] * g.order() + word[static_cast<std::size_t>(i)]];
        if (merged == 0) continue;  // identity: degenerate tensor
        std::size_t w = 0;
        for (int s = 0; s < k; ++s) {
          if (s == i) continue;
          shorter[w++] = s == i - 1 ? merged : word[static_cast<std::size_t>(s)];
        }
        col[static_cast<std::uint32_t>(encode(shorter) * m + j)] += i % 2 == 0 ? 1 : -1;
      }
      // (-1)^k m [g_1|...|g_{k-1}]
      std::copy(word.begin(), word.end() - 1, shorter.begin());
      col[static_cast<std::uint32_t>(encode(shorter) * m + j)] += k % 2 == 0 ? 1 : -1;

      SparseIntMatrix::Column entries;
      for (const auto& [row, v] : col) {
        if (v != 0) entries.push_back({row, BigInt(v)});
      }
      d.set_column(t * m + j, std::move(entries));
    }
  }
  return d;
}

std::string dim_string(std::size_t d) { return "dim_F2 = " + std::to_string(d); }

ComparisonRow make_row(int degree, std::string left, std::string right, std::string relation) {
  ComparisonRow row;
  row.degree = degree;
  row.equal = left == right;
  row.left = std::move(left);
  row.right = std::move(right);
  row.relation = std::move(relation);
  return row;
}

}  // namespace

bool ComparisonReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.equal; });
}

AbelianGroup coinvariants(const IntegralRepresentation& rep, const Budget& budget) {
  const IntMatrix id = IntMatrix::identity(rep.dim);
  auto relations = (rep.transposition - id).to_sparse().hconcat((rep.cycle - id).to_sparse());
  return homology_at(rep.dim, nullptr, &relations, budget);
}

std::size_t bar_chain_rank(const IntegralRepresentation& rep, int k) {
  if (k < 0) throw_invalid("bar complex degree must be >= 0");
  return checked_pow(factorial(rep.n) - 1, k) * rep.dim;
}

SparseIntMatrix bar_boundary(const IntegralRepresentation& rep, int k, const Budget& budget) {
  if (k < 1) throw_invalid("bar boundary degree must be >= 1");
  bar_chain_rank(rep, k);
  return build_bar_boundary(rep, group_data(rep), k, budget);
}

AbelianGroup bar_homology(const IntegralRepresentation& rep, int k, const Budget& budget) {
  if (k < 0) throw_invalid("homology degree must be >= 0");
  const auto g = group_data(rep);
  std::optional<SparseIntMatrix> out, in;
  if (k >= 1) out = build_bar_boundary(rep, g, k, budget);
  in = build_bar_boundary(rep, g, k + 1, budget);
  return homology_at(bar_chain_rank(rep, k), out ? &*out : nullptr, &*in, budget);
}

std::size_t bar_homology_mod_p(const IntegralRepresentation& rep, int k, std::uint64_t p, const Budget& budget) {
  if (k < 0) throw_invalid("homology degree must be >= 0");
  if (!is_prime(p)) throw_invalid("coefficient modulus must be prime");
  const auto g = group_data(rep);
  std::optional<SparseIntMatrix> out, in;
  if (k >= 1) out = build_bar_boundary(rep, g, k, budget);
  in = build_bar_boundary(rep, g, k + 1, budget);
  return homology_at_mod_p(bar_chain_rank(rep, k), out ? &*out : nullptr, &*in, p, budget);
}

ComparisonReport verify_l3_degree_shift(int max_degree, const ComputeOptions& options) {
  if (max_degree < 0 || max_degree > 3) throw_invalid("verify_l3_degree_shift covers degrees 0..3");
  const auto l3 = extract_ln(3, options);
  const auto twisted = tensor_sign(l3);
  ComparisonReport report;
  report.name = "cor3";
  for (int i = 0; i <= max_degree; ++i) {
    auto left = bar_homology(l3, i, options.budget);
    auto right = i >= 2 ? bar_homology(twisted, i - 2, options.budget) : AbelianGroup{};
    report.rows.push_back(make_row(i, left.to_string(), right.to_string(),
                                   "H_" + std::to_string(i) + "(S_3; L_3) = H_" + std::to_string(i - 2) +
                                       "(S_3; L_3 x sign)"));
  }
  return report;
}

ComparisonReport verify_l6_coinvariants(const ComputeOptions& options) {
  const auto left = coinvariants(tensor_sign(extract_ln(3, options)), options.budget);
  const auto right = coinvariants(extract_ln(6, options), options.budget);
  ComparisonReport report;
  report.name = "cor4";
  report.rows.push_back(make_row(0, left.to_string(), right.to_string(), "H_0(S_3; L_3 x sign) = H_0(S_6; L_6)"));
  report.rows.push_back(make_row(0, right.to_string(), k1_integral(3, 4).to_string(),
                                 "H_0(S_6; L_6) = integral word-calculus group at p = 3, k = 1, dimension 4"));
  return report;
}

ComparisonReport verify_les_n4(int max_degree, const ComputeOptions& options) {
  if (max_degree < 0 || max_degree > 2) throw_invalid("verify_les_n4 covers degrees 0..2");
  const auto l2 = extract_ln(2, options);
  const auto l2_twisted = tensor_sign(l2);
  const auto l4 = extract_ln(4, options);
  ComparisonReport report;
  report.name = "les4";
  // Each degree is compared against both L_2 and L_2 x sign: the first term
  // of the sequence comes from K_2 smash S^2, which carries the sign twist.
  for (int i = 0; i <= max_degree; ++i) {
    const std::string d = std::to_string(i);
    if (i <= 1) {
      const auto right = bar_homology(l4, i, options.budget).to_string();
      report.rows.push_back(make_row(i, bar_homology(l2, i, options.budget).to_string(), right,
                                     "H_" + d + "(S_2; L_2) = H_" + d + "(S_4; L_4)"));
      report.rows.push_back(make_row(i, bar_homology(l2_twisted, i, options.budget).to_string(), right,
                                     "H_" + d + "(S_2; L_2 x sign) = H_" + d + "(S_4; L_4)"));
    } else {
      // Over F_2 the twist is invisible.
      report.rows.push_back(make_row(i, dim_string(bar_homology_mod_p(l2, i, 2, options.budget)),
                                     dim_string(bar_homology_mod_p(l4, i, 2, options.budget)),
                                     "H_" + d + "(S_2; L_2) = H_" + d + "(S_4; L_4) over F_2"));
    }
  }
  return report;
}

}  // namespace pn
