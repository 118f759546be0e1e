#include "pn/complexes.hpp"

#include "pn/errors.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pn {

namespace {

/// Insertion sort; returns the sign of the sorting permutation.
int sort_with_sign(std::vector<std::uint32_t>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::size_t checked_total(const std::vector<std::size_t>& counts) {
  std::size_t total = 0;
  for (std::size_t d = 0; d < counts.size(); ++d) total += counts[d] * (d + 1);
  return total;
}

/// Comparability DAG of `elements` (sorted canonically): successors[i] lists
/// j > i such that elements[j] strictly refines elements[i].
std::vector<std::vector<std::uint32_t>> refinement_successors(const std::vector<SetPartition>& elements) {
  std::vector<std::vector<std::uint32_t>> up(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (refines(elements[j], elements[i])) up[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return up;
}

/// chains_by_length[l] = number of chains with l+1 elements.
std::vector<std::size_t> count_chains(const std::vector<std::vector<std::uint32_t>>& up) {
  const std::size_t v = up.size();
  // starting[i][l]: chains of l+1 elements starting at i; filled from the top.
  std::vector<std::vector<std::size_t>> starting(v);
  std::vector<std::size_t> totals;
  for (std::size_t ii = v; ii-- > 0;) {
    auto& mine = starting[ii];
    mine.assign(1, 1);
    for (auto j : up[ii]) {
      const auto& theirs = starting[j];
      if (mine.size() < theirs.size() + 1) mine.resize(theirs.size() + 1, 0);
      for (std::size_t l = 0; l < theirs.size(); ++l) mine[l + 1] += theirs[l];
    }
    if (totals.size() < mine.size()) totals.resize(mine.size(), 0);
    for (std::size_t l = 0; l < mine.size(); ++l) totals[l] += mine[l];
  }
  return totals;
}

std::vector<SetPartition> proper_partitions(int n) {
  return all_partitions(n, PartitionBounds{false, false});
}

std::string pole_label(const std::string& base, const std::string& suffix) {
  return suffix.empty() ? base : base + "{" + suffix + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// SimplexTable

SimplexTable SimplexTable::from_flat(std::size_t width, std::vector<std::uint32_t> flat) {
  SimplexTable t(width);
  const std::size_t count = flat.size() / width;
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(flat.begin() + a * width, flat.begin() + (a + 1) * width,
                                        flat.begin() + b * width, flat.begin() + (b + 1) * width);
  };
  if (!std::is_sorted(order.begin(), order.end(), less)) std::sort(order.begin(), order.end(), less);
  t.flat_.reserve(flat.size());
  for (std::size_t k = 0; k < count; ++k) {
    auto begin = flat.begin() + order[k] * width;
    if (k > 0 && std::equal(begin, begin + width, t.flat_.end() - static_cast<std::ptrdiff_t>(width))) continue;
    t.flat_.insert(t.flat_.end(), begin, begin + width);
  }
  return t;
}

std::optional<std::uint32_t> SimplexTable::find(std::span<const std::uint32_t> vertices) const {
  if (vertices.size() != width_) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto s = (*this)[mid];
    if (std::lexicographical_compare(s.begin(), s.end(), vertices.begin(), vertices.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(vertices.begin(), vertices.end(), (*this)[lo].begin())) {
    return static_cast<std::uint32_t>(lo);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// EquivariantComplex

EquivariantComplex EquivariantComplex::build(std::vector<std::string> vertex_labels,
                                             const std::vector<std::vector<std::uint32_t>>& simplices,
                                             std::vector<VertexGenerator> generators, int group_degree,
                                             const ComputeOptions& options) {
  std::vector<std::vector<std::uint32_t>> flats;
  for (auto s : simplices) {
    if (s.empty()) throw_invalid("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw_invalid("repeated vertex in simplex");
    for (auto v : s) {
      if (v >= vertex_labels.size()) throw_invalid("simplex vertex out of range");
    }
    if (flats.size() < s.size()) flats.resize(s.size());
    flats[s.size() - 1].insert(flats[s.size() - 1].end(), s.begin(), s.end());
  }
  std::vector<SimplexTable> tables;
  for (std::size_t d = 0; d < flats.size(); ++d) tables.push_back(SimplexTable::from_flat(d + 1, std::move(flats[d])));
  return from_tables(std::move(vertex_labels), std::move(tables), std::move(generators), group_degree, options);
}

EquivariantComplex EquivariantComplex::from_tables(std::vector<std::string> vertex_labels,
                                                   std::vector<SimplexTable> tables,
                                                   std::vector<VertexGenerator> generators, int group_degree,
                                                   const ComputeOptions& options) {
  BudgetMeter meter(options.budget);
  EquivariantComplex c;
  c.vertex_labels_ = std::move(vertex_labels);
  while (!tables.empty() && tables.back().size() == 0) tables.pop_back();
  c.tables_ = std::move(tables);
  c.generators_ = std::move(generators);
  c.group_degree_ = group_degree;
  for (const auto& g : c.generators_) {
    if (g.image.size() != c.vertex_labels_.size()) throw_invalid("generator does not act on every vertex");
  }

  std::size_t entries = 0;
  for (int d = 1; d <= c.dimension(); ++d) entries += c.count(d) * static_cast<std::size_t>(d + 1);
  meter.check_entries(entries);

  // Boundaries; this also checks closure under faces.
  c.boundaries_.resize(static_cast<std::size_t>(std::max(0, c.dimension())));
  parallel_for(c.boundaries_.size(), options.threads, [&](std::size_t idx) {
    const int d = static_cast<int>(idx) + 1;
    const auto& top = c.tables_[static_cast<std::size_t>(d)];
    const auto& faces = c.tables_[static_cast<std::size_t>(d - 1)];
    SparseIntMatrix m(faces.size(), top.size());
    std::vector<std::uint32_t> face(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < top.size(); ++i) {
      auto s = top[i];
      SparseIntMatrix::Column col;
      col.reserve(static_cast<std::size_t>(d + 1));
      for (int j = 0; j <= d; ++j) {
        std::size_t k = 0;
        for (int t = 0; t <= d; ++t) {
          if (t != j) face[k++] = s[static_cast<std::size_t>(t)];
        }
        auto row = faces.find(face);
        if (!row) throw_invalid("simplex list is not closed under faces");
        col.push_back({*row, BigInt(j % 2 == 0 ? 1 : -1)});
      }
      m.set_column(i, std::move(col));
    }
    c.boundaries_[idx] = std::move(m);
  });

  c.actions_.assign(c.generators_.size(), {});
  for (auto& a : c.actions_) a.resize(c.tables_.size());
  const std::size_t dims = c.tables_.size();
  parallel_for(c.generators_.size() * dims, options.threads, [&](std::size_t job) {
    const std::size_t g = job / dims;
    const int d = static_cast<int>(job % dims);
    c.actions_[g][static_cast<std::size_t>(d)] = c.chain_action(d, c.generators_[g].image);
  });
  return c;
}

EquivariantComplex EquivariantComplex::empty(int group_degree) {
  EquivariantComplex c;
  c.group_degree_ = group_degree;
  return c;
}

std::size_t EquivariantComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return tables_[static_cast<std::size_t>(d)].size();
}

std::vector<std::size_t> EquivariantComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& t : tables_) f.push_back(t.size());
  return f;
}

std::string EquivariantComplex::simplex_label(int d, std::size_t i) const {
  std::string out = "[";
  auto s = simplices(d)[i];
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += " < ";
    out += vertex_labels_[s[k]];
  }
  return out + "]";
}

const SparseIntMatrix& EquivariantComplex::boundary(int d) const {
  if (d < 1 || d > dimension()) throw_invalid("boundary degree out of range: " + std::to_string(d));
  return boundaries_[static_cast<std::size_t>(d - 1)];
}

SparseIntMatrix EquivariantComplex::augmentation() const {
  SparseIntMatrix m(1, count(0));
  for (std::size_t i = 0; i < count(0); ++i) m.set_column(i, {{0, BigInt(1)}});
  return m;
}

const std::vector<SignedIndex>& EquivariantComplex::action(std::size_t generator, int d) const {
  return actions_.at(generator).at(static_cast<std::size_t>(d));
}

std::vector<SignedIndex> EquivariantComplex::chain_action(int d, const std::vector<std::uint32_t>& vertex_map) const {
  if (vertex_map.size() != vertex_labels_.size()) throw_invalid("vertex map has the wrong size");
  const auto& table = simplices(d);
  std::vector<SignedIndex> out(table.size());
  std::vector<std::uint32_t> image(table.width());
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto s = table[i];
    for (std::size_t k = 0; k < s.size(); ++k) image[k] = vertex_map[s[k]];
    int sign = sort_with_sign(image);
    auto j = table.find(image);
    if (!j) throw_invariant("vertex map does not preserve the simplex set");
    out[i] = {*j, static_cast<std::int8_t>(sign)};
  }
  return out;
}

std::int64_t EquivariantComplex::chain_trace(int d, const std::vector<std::uint32_t>& vertex_map) const {
  if (d < 0 || d > dimension()) return 0;
  const auto& table = simplices(d);
  std::int64_t trace = 0;
  std::vector<std::uint32_t> image(table.width());
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto s = table[i];
    for (std::size_t k = 0; k < s.size(); ++k) image[k] = vertex_map[s[k]];
    int sign = sort_with_sign(image);
    if (std::equal(image.begin(), image.end(), s.begin())) trace += sign;
  }
  return trace;
}

std::int64_t EquivariantComplex::reduced_euler_characteristic() const {
  std::int64_t chi = -1;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count(d));
  return chi;
}

bool EquivariantComplex::boundary_squares_to_zero() const {
  for (int d = 2; d <= dimension(); ++d) {
    if (!(boundary(d - 1) * boundary(d)).is_zero()) return false;
  }
  if (dimension() >= 1 && !(augmentation() * boundary(1)).is_zero()) return false;
  return true;
}

bool EquivariantComplex::is_equivariant() const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    for (int d = 0; d <= dimension(); ++d) {
      const auto& a = action(g, d);
      std::vector<bool> hit(a.size(), false);
      for (const auto& si : a) {
        if (si.index >= a.size() || hit[si.index] || (si.sign != 1 && si.sign != -1)) return false;
        hit[si.index] = true;
      }
    }
    for (int d = 1; d <= dimension(); ++d) {
      const auto& bd = boundary(d);
      const auto& top = action(g, d);
      const auto& low = action(g, d - 1);
      for (std::size_t i = 0; i < bd.cols(); ++i) {
        // A_{d-1} (boundary e_i)
        std::map<std::uint32_t, BigInt> lhs;
        for (const auto& e : bd.column(i)) lhs[low[e.row].index] += e.value * low[e.row].sign;
        // boundary (A_d e_i)
        std::map<std::uint32_t, BigInt> rhs;
        for (const auto& e : bd.column(top[i].index)) rhs[e.row] += e.value * top[i].sign;
        std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

EquivariantComplex order_complex(const std::vector<SetPartition>& elements_in,
                                 const std::vector<Permutation>& generators, const ComputeOptions& options) {
  std::vector<SetPartition> elements = elements_in;
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw_invalid("order_complex: duplicate elements");
  }
  int degree = elements.empty() ? (generators.empty() ? 0 : generators.front().degree()) : 0;
  for (const auto& e : elements) {
    if (degree == 0) degree = e.ground_size();
    if (e.ground_size() != degree) throw_invalid("order_complex: mixed ground sets");
  }
  auto up = refinement_successors(elements);
  auto lengths = count_chains(up);
  BudgetMeter(options.budget).check_entries(checked_total(lengths));

  std::vector<std::vector<std::uint32_t>> flats(lengths.size());
  for (std::size_t d = 0; d < lengths.size(); ++d) flats[d].reserve(lengths[d] * (d + 1));
  std::vector<std::uint32_t> chain;
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    chain.push_back(v);
    auto& flat = flats[chain.size() - 1];
    flat.insert(flat.end(), chain.begin(), chain.end());
    for (auto w : up[v]) self(self, w);
    chain.pop_back();
  };
  for (std::uint32_t v = 0; v < elements.size(); ++v) dfs(dfs, v);
  // DFS emits each length class in lexicographic order already.
  std::vector<SimplexTable> tables;
  for (std::size_t d = 0; d < flats.size(); ++d) tables.push_back(SimplexTable::from_flat(d + 1, std::move(flats[d])));

  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(e.to_string());

  std::vector<VertexGenerator> gens;
  for (const auto& sigma : generators) {
    if (sigma.degree() != degree) throw_invalid("order_complex: generator degree mismatch");
    VertexGenerator g{sigma.to_cycle_string(), {}};
    for (const auto& e : elements) {
      auto image = apply(sigma, e);
      auto it = std::lower_bound(elements.begin(), elements.end(), image);
      if (it == elements.end() || !(*it == image)) throw_invalid("order_complex: element set not stable under generator");
      g.image.push_back(static_cast<std::uint32_t>(it - elements.begin()));
    }
    gens.push_back(std::move(g));
  }
  return EquivariantComplex::from_tables(std::move(labels), std::move(tables), std::move(gens), degree, options);
}

EquivariantComplex unreduced_suspension(const EquivariantComplex& c, const ComputeOptions& options) {
  std::vector<std::string> labels{"SOUTH", "NORTH"};
  labels.insert(labels.end(), c.vertex_labels().begin(), c.vertex_labels().end());

  std::vector<std::vector<std::uint32_t>> flats(static_cast<std::size_t>(c.dimension() + 2));
  flats[0] = {0, 1};
  for (int d = 0; d <= c.dimension(); ++d) {
    const auto& t = c.simplices(d);
    auto& cone = flats[static_cast<std::size_t>(d + 1)];
    for (std::uint32_t pole = 0; pole < 2; ++pole) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        cone.push_back(pole);
        for (auto v : t[i]) cone.push_back(v + 2);
      }
    }
    auto& plain = flats[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (auto v : t[i]) plain.push_back(v + 2);
    }
  }
  std::vector<SimplexTable> tables;
  for (std::size_t d = 0; d < flats.size(); ++d) tables.push_back(SimplexTable::from_flat(d + 1, std::move(flats[d])));

  std::vector<VertexGenerator> gens;
  for (const auto& g : c.generators()) {
    VertexGenerator s{g.name, {0, 1}};
    for (auto v : g.image) s.image.push_back(v + 2);
    gens.push_back(std::move(s));
  }
  return EquivariantComplex::from_tables(std::move(labels), std::move(tables), std::move(gens), c.group_degree(),
                                         options);
}

std::size_t k_n_simplex_count(int n) {
  if (n < 1) throw_invalid("k_n needs n >= 1");
  if (n == 1) return 0;
  auto lengths = count_chains(refinement_successors(proper_partitions(n)));
  std::size_t total = 2;
  for (auto f : lengths) total += 3 * f;
  return total;
}

EquivariantComplex k_n(int n, const ComputeOptions& options) {
  if (n < 1) throw_invalid("k_n needs n >= 1");
  if (n == 1) return EquivariantComplex::empty(1);
  std::vector<Permutation> gens{Permutation::transposition(n, 1, 2), Permutation::long_cycle(n)};
  auto base = order_complex(proper_partitions(n), gens, options);
  return unreduced_suspension(base, options);
}

std::vector<std::uint32_t> k_n_vertex_map(int n, const Permutation& sigma) {
  if (sigma.degree() != n) throw_invalid("k_n_vertex_map: degree mismatch");
  if (n == 1) return {};
  auto parts = proper_partitions(n);
  std::vector<std::uint32_t> map{0, 1};
  for (const auto& p : parts) {
    auto image = apply(sigma, p);
    auto it = std::lower_bound(parts.begin(), parts.end(), image);
    map.push_back(static_cast<std::uint32_t>(it - parts.begin()) + 2);
  }
  return map;
}

EquivariantComplex join(const EquivariantComplex& c1, const EquivariantComplex& c2, const ComputeOptions& options) {
  const auto v1 = static_cast<std::uint32_t>(c1.vertex_labels().size());
  const auto v2 = static_cast<std::uint32_t>(c2.vertex_labels().size());
  std::vector<std::string> labels = c1.vertex_labels();
  labels.insert(labels.end(), c2.vertex_labels().begin(), c2.vertex_labels().end());

  const int top = c1.dimension() + c2.dimension() + 1;
  std::vector<std::vector<std::uint32_t>> flats(static_cast<std::size_t>(std::max(top + 1, 0)));
  // d1 = -1 / d2 = -1 stand for the empty face.
  for (int d1 = -1; d1 <= c1.dimension(); ++d1) {
    const std::size_t n1 = d1 < 0 ? 1 : c1.count(d1);
    for (int d2 = -1; d2 <= c2.dimension(); ++d2) {
      if (d1 < 0 && d2 < 0) continue;
      const std::size_t n2 = d2 < 0 ? 1 : c2.count(d2);
      auto& flat = flats[static_cast<std::size_t>(d1 + d2 + 1)];
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
          if (d1 >= 0) {
            for (auto v : c1.simplices(d1)[i]) flat.push_back(v);
          }
          if (d2 >= 0) {
            for (auto v : c2.simplices(d2)[j]) flat.push_back(v + v1);
          }
        }
      }
    }
  }
  std::vector<SimplexTable> tables;
  for (std::size_t d = 0; d < flats.size(); ++d) tables.push_back(SimplexTable::from_flat(d + 1, std::move(flats[d])));

  std::vector<VertexGenerator> gens;
  for (const auto& g : c1.generators()) {
    VertexGenerator s{g.name, g.image};
    for (std::uint32_t v = 0; v < v2; ++v) s.image.push_back(v + v1);
    gens.push_back(std::move(s));
  }
  for (const auto& g : c2.generators()) {
    VertexGenerator s{g.name, {}};
    for (std::uint32_t v = 0; v < v1; ++v) s.image.push_back(v);
    for (auto v : g.image) s.image.push_back(v + v1);
    gens.push_back(std::move(s));
  }
  return EquivariantComplex::from_tables(std::move(labels), std::move(tables), std::move(gens),
                                         c1.group_degree() + c2.group_degree(), options);
}

EquivariantComplex k_lambda(const SetPartition& lambda, const ComputeOptions& options) {
  if (lambda.is_discrete()) throw_invalid("k_lambda: lambda must not be the discrete partition");
  auto result = EquivariantComplex::empty(0);
  for (const auto& block : lambda.blocks()) {
    const int m = static_cast<int>(block.size());
    if (m < 2) continue;
    auto factor = k_n(m, options);
    std::string tag;
    for (std::size_t i = 0; i < block.size(); ++i) tag += (i ? "," : "") + std::to_string(block[i]);
    // Relabel vertices and generator names onto the block's elements.
    std::vector<std::string> labels;
    for (const auto& label : factor.vertex_labels()) {
      if (label == "SOUTH" || label == "NORTH") {
        labels.push_back(pole_label(label, tag));
        continue;
      }
      auto local = SetPartition::parse(label);
      std::string text;
      for (const auto& b : local.blocks()) {
        if (!text.empty()) text += '|';
        for (std::size_t i = 0; i < b.size(); ++i) {
          text += (i ? "," : "") + std::to_string(block[static_cast<std::size_t>(b[i] - 1)]);
        }
      }
      labels.push_back(text);
    }
    std::vector<VertexGenerator> gens;
    for (const auto& g : factor.generators()) gens.push_back({g.name + "@" + tag, g.image});
    std::vector<SimplexTable> tables;
    for (int d = 0; d <= factor.dimension(); ++d) tables.push_back(factor.simplices(d));
    auto relabelled = EquivariantComplex::from_tables(std::move(labels), std::move(tables), std::move(gens), m, options);
    result = join(result, relabelled, options);
  }
  return result;
}

EquivariantComplex k_lambda_direct(const SetPartition& lambda, const ComputeOptions& options) {
  if (lambda.is_discrete()) throw_invalid("k_lambda: lambda must not be the discrete partition");
  std::vector<SetPartition> between;
  for (const auto& p : all_partitions(lambda.ground_size(), PartitionBounds{true, false})) {
    if (!(p == lambda) && refines(p, lambda)) between.push_back(p);
  }
  return unreduced_suspension(order_complex(between, {}, options), options);
}

EulerFiltrationReport euler_filtration_check(int n, const ComputeOptions& options) {
  if (n < 2) throw_invalid("euler_filtration_check needs n >= 2");
  if (n > 7) throw_resource("euler_filtration_check capped at n = 7");
  EulerFiltrationReport report;
  report.n = n;
  // K_lambda depends only on the multiset of block sizes.
  std::map<std::vector<int>, std::int64_t> chi_by_type;
  for (const auto& lambda : all_partitions(n, PartitionBounds{true, false})) {
    std::vector<int> type;
    for (const auto& b : lambda.blocks()) type.push_back(static_cast<int>(b.size()));
    std::sort(type.begin(), type.end(), std::greater<>());
    auto it = chi_by_type.find(type);
    if (it == chi_by_type.end()) {
      it = chi_by_type.emplace(type, k_lambda(lambda, options).reduced_euler_characteristic()).first;
    }
    // reduced chi(K ^ S^{2c}) = reduced chi(K) * reduced chi(S^2)^c = reduced chi(K)
    report.subquotient_sum += it->second;
  }
  // chi(S^{2n}) = chi_c(F(C,n)) + chi(fat diagonal); F(C,n) is an even
  // dimensional manifold, so chi_c = chi = prod_{j<n} (1 - j).
  std::int64_t chi_config = 1;
  for (int j = 0; j < n; ++j) chi_config *= 1 - j;
  report.target = 2 - chi_config - 1;
  report.agree = report.subquotient_sum == report.target;
  return report;
}

void write_boundary_bundle(std::ostream& os, const EquivariantComplex& c) {
  os << "% boundary bundle: dimension " << c.dimension() << ", f-vector";
  for (auto f : c.f_vector()) os << ' ' << f;
  os << '\n';
  for (int d = 1; d <= c.dimension(); ++d) {
    os << "% boundary " << d << '\n';
    write_triplets(os, c.boundary(d));
  }
}

std::vector<SparseIntMatrix> read_boundary_bundle(std::istream& is) {
  std::stringstream all;
  all << is.rdbuf();
  const std::string text = all.str();
  const std::string banner = "%%MatrixMarket";
  std::vector<SparseIntMatrix> out;
  std::size_t pos = text.find(banner);
  while (pos != std::string::npos) {
    std::size_t next = text.find(banner, pos + banner.size());
    std::istringstream block(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    out.push_back(read_triplets(block));
    pos = next;
  }
  return out;
}

}  // namespace pn
