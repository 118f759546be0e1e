#include "pn/lie_module.hpp"

#include "pn/complexes.hpp"
#include "pn/errors.hpp"
#include "pn/smith.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pn {

namespace {

struct BasisColumn {
  std::vector<std::pair<std::uint32_t, std::int64_t>> entries;
};

std::int64_t checked_mul_sub(std::int64_t acc, std::int64_t q, std::int64_t b) {
  std::int64_t prod, r;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(acc, prod, &r)) {
    throw_resource("64-bit overflow while solving for generator matrices");
  }
  return r;
}

/// Matrix X with sigma B = B X, column j of X from the image of basis vector j.
IntMatrix solve_generator(const std::vector<BasisColumn>& basis, const std::vector<SignedIndex>& chain_map,
                          std::size_t chain_rank, unsigned threads) {
  const std::size_t dim = basis.size();
  IntMatrix x(dim, dim);
  std::vector<std::vector<std::int64_t>> columns(dim);
  parallel_for(dim, threads, [&](std::size_t j) {
    std::vector<std::int64_t> w(chain_rank, 0);
    for (const auto& [row, value] : basis[j].entries) {
      const auto& image = chain_map[row];
      w[image.index] = image.sign > 0 ? value : -value;
    }
    std::vector<std::int64_t> coeffs(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      const auto& [pivot, lead] = basis[i].entries.front();
      const std::int64_t v = w[pivot];
      if (v == 0) continue;
      if (v % lead != 0) throw_invariant("generator image is not an integral combination of the basis");
      const std::int64_t q = v / lead;
      coeffs[i] = q;
      for (const auto& [row, value] : basis[i].entries) w[row] = checked_mul_sub(w[row], q, value);
    }
    for (auto r : w) {
      if (r != 0) throw_invariant("generator image leaves the cycle lattice");
    }
    columns[j] = std::move(coeffs);
  });
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) x(i, j) = columns[j][i];
  }
  return x;
}

IntMatrix power(const IntMatrix& a, int e) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

/// Matrices of the adjacent transpositions s_1 .. s_{n-1} (index i-1).
std::vector<IntMatrix> adjacent_matrices(const IntegralRepresentation& rep) {
  std::vector<IntMatrix> s;
  if (rep.n < 2) return s;
  const IntMatrix c_inv = power(rep.cycle, rep.n - 1);
  s.push_back(rep.transposition);
  for (int i = 1; i + 1 < rep.n; ++i) s.push_back(rep.cycle * s.back() * c_inv);
  return s;
}

std::vector<SparseIntMatrix> split_triplet_blocks(const std::string& text) {
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

}  // namespace

IntegralRepresentation extract_ln(int n, const ComputeOptions& options) {
  if (n < 2) throw_invalid("extract_ln needs n >= 2");
  if (n > 7) throw_resource("extract_ln is capped at n = 7");
  auto k = k_n(n, options);
  const int top = n - 2;
  const SparseIntMatrix cycles_of = top == 0 ? k.augmentation() : k.boundary(top);
  const SparseIntMatrix b = kernel_basis(cycles_of, options.budget);

  std::vector<BasisColumn> basis(b.cols());
  std::uint32_t last_pivot = 0;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& e : b.column(j)) {
      if (!fits_int64(e.value)) throw_resource("cycle basis entry exceeds 64 bits");
      basis[j].entries.push_back({e.row, static_cast<std::int64_t>(e.value)});
    }
    if (basis[j].entries.empty()) throw_invariant("zero vector in kernel basis");
    const auto pivot = basis[j].entries.front().first;
    if (j > 0 && pivot <= last_pivot) throw_invariant("kernel basis is not in echelon form");
    last_pivot = pivot;
  }

  IntegralRepresentation rep;
  rep.n = n;
  rep.dim = basis.size();
  rep.transposition = solve_generator(basis, k.action(0, top), k.count(top), options.threads);
  rep.cycle = solve_generator(basis, k.action(1, top), k.count(top), options.threads);
  rep.basis_provenance = "Hermite basis of the " + std::to_string(top) + "-cycles of K_" + std::to_string(n) + " (" +
                         std::to_string(k.count(top)) + " " + std::to_string(top) + "-simplices)";
  return rep;
}

IntegralRepresentation trivial_representation(int n) {
  if (n < 1) throw_invalid("group degree must be positive");
  IntegralRepresentation rep;
  rep.n = n;
  rep.dim = 1;
  rep.transposition = IntMatrix::identity(1);
  rep.cycle = IntMatrix::identity(1);
  rep.basis_provenance = "trivial module Z";
  return rep;
}

IntegralRepresentation tensor_sign(const IntegralRepresentation& rep) {
  IntegralRepresentation out = rep;
  if (rep.n >= 2) out.transposition = rep.transposition.scaled(-1);
  if (rep.n % 2 == 0) out.cycle = rep.cycle.scaled(-1);
  const std::string suffix = " tensor sign";
  if (out.basis_provenance.size() >= suffix.size() &&
      out.basis_provenance.compare(out.basis_provenance.size() - suffix.size(), suffix.size(), suffix) == 0) {
    out.basis_provenance.resize(out.basis_provenance.size() - suffix.size());
  } else {
    out.basis_provenance += suffix;
  }
  return out;
}

IntMatrix act(const IntegralRepresentation& rep, const Permutation& sigma) {
  if (sigma.degree() != rep.n) throw_invalid("permutation degree does not match the representation");
  // Bubble-sort the image sequence: w s_{j1} ... s_{jm} = id, so
  // w = s_{jm} ... s_{j1}.
  std::vector<int> w(static_cast<std::size_t>(rep.n));
  for (int i = 0; i < rep.n; ++i) w[static_cast<std::size_t>(i)] = sigma.image0(i);
  std::vector<int> swaps;
  for (int pass = 0; pass < rep.n; ++pass) {
    for (int i = 0; i + 1 < rep.n; ++i) {
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) {
        std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i + 1)]);
        swaps.push_back(i);
      }
    }
  }
  if (swaps.empty()) return IntMatrix::identity(rep.dim);
  const auto s = adjacent_matrices(rep);
  IntMatrix result = IntMatrix::identity(rep.dim);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) result = result * s[static_cast<std::size_t>(*it)];
  return result;
}

bool satisfies_relations(const IntegralRepresentation& rep) {
  const IntMatrix id = IntMatrix::identity(rep.dim);
  if (rep.transposition.rows() != rep.dim || rep.cycle.rows() != rep.dim) return false;
  if (!power(rep.cycle, rep.n).is_identity()) return false;
  if (rep.n == 1) return rep.transposition.is_identity() && rep.cycle.is_identity();
  const auto s = adjacent_matrices(rep);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] * s[i] == id)) return false;
    if (i + 1 < s.size() && !power(s[i] * s[i + 1], 3).is_identity()) return false;
    for (std::size_t j = i + 2; j < s.size(); ++j) {
      if (!power(s[i] * s[j], 2).is_identity()) return false;
    }
  }
  IntMatrix product = id;
  for (const auto& m : s) product = product * m;
  return product == rep.cycle;
}

std::vector<CharacterValue> character(const IntegralRepresentation& rep) {
  std::vector<CharacterValue> out;
  for (const auto& cls : conjugacy_class_reps(rep.n)) {
    out.push_back({cls.cycle_type, cls.size, act(rep, cls.representative).trace()});
  }
  return out;
}

std::vector<CharacterValue> character_via_hopf_trace(int n, bool sign_twist, const ComputeOptions& options) {
  if (n < 2) throw_invalid("character_via_hopf_trace needs n >= 2");
  if (n > 7) throw_resource("character_via_hopf_trace is capped at n = 7");
  auto k = k_n(n, options);
  std::vector<CharacterValue> out;
  for (const auto& cls : conjugacy_class_reps(n)) {
    const auto map = k_n_vertex_map(n, cls.representative);
    std::int64_t lefschetz = 0;
    for (int d = 0; d <= k.dimension(); ++d) lefschetz += (d % 2 == 0 ? 1 : -1) * k.chain_trace(d, map);
    // Reduced homology sits in degree n-2 only.
    std::int64_t value = ((n - 2) % 2 == 0 ? 1 : -1) * (lefschetz - 1);
    if (sign_twist) value *= cls.representative.sign();
    out.push_back({cls.cycle_type, cls.size, value});
  }
  return out;
}

std::int64_t weighted_character_product(const std::vector<CharacterValue>& a, const std::vector<CharacterValue>& b) {
  if (a.size() != b.size()) throw_invalid("characters of different groups");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].cycle_type != b[i].cycle_type) throw_invalid("characters listed over different classes");
    sum += static_cast<std::int64_t>(a[i].class_size) * a[i].value * b[i].value;
  }
  return sum;
}

void write_representation(std::ostream& os, const IntegralRepresentation& rep) {
  os << "% representation n " << rep.n << " dim " << rep.dim << '\n';
  os << "% provenance " << rep.basis_provenance << '\n';
  os << "% generator (1 2)\n";
  write_triplets(os, rep.transposition.to_sparse());
  os << "% generator long cycle\n";
  write_triplets(os, rep.cycle.to_sparse());
}

IntegralRepresentation read_representation(std::istream& is) {
  std::stringstream all;
  all << is.rdbuf();
  const std::string text = all.str();
  IntegralRepresentation rep;
  std::istringstream lines(text);
  std::string line;
  bool have_header = false;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    std::string pct, key;
    ls >> pct >> key;
    if (pct != "%") continue;
    if (key == "representation") {
      std::string nk, dk;
      ls >> nk >> rep.n >> dk >> rep.dim;
      if (!ls || nk != "n" || dk != "dim") throw_invalid("malformed representation header");
      have_header = true;
    } else if (key == "provenance") {
      std::getline(ls >> std::ws, rep.basis_provenance);
    }
  }
  if (!have_header) throw_invalid("representation bundle has no header");
  auto blocks = split_triplet_blocks(text);
  if (blocks.size() != 2) throw_invalid("representation bundle must hold two matrices");
  rep.transposition = IntMatrix::from_sparse(blocks[0]);
  rep.cycle = IntMatrix::from_sparse(blocks[1]);
  if (rep.transposition.rows() != rep.dim || rep.transposition.cols() != rep.dim || rep.cycle.rows() != rep.dim ||
      rep.cycle.cols() != rep.dim) {
    throw_invalid("representation matrices do not match the declared dimension");
  }
  return rep;
}

}  // namespace pn
