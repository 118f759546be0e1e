#pragma once

#include "pn/budget.hpp"
#include "pn/partitions.hpp"
#include "pn/permutation.hpp"
#include "pn/sparse_matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pn {

/// Image of an oriented simplex under a group element: target index and the
/// sign of the permutation that re-sorts the mapped vertex sequence.
struct SignedIndex {
  std::uint32_t index = 0;
  std::int8_t sign = 1;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// Simplices of one dimension, each a strictly increasing vertex sequence,
/// stored flat and sorted lexicographically so faces are found by binary
/// search.
class SimplexTable {
 public:
  explicit SimplexTable(std::size_t width = 1) : width_(width) {}
  /// Sorts and deduplicates `flat` (consecutive groups of `width` ids).
  static SimplexTable from_flat(std::size_t width, std::vector<std::uint32_t> flat);

  std::size_t width() const { return width_; }
  std::size_t size() const { return width_ ? flat_.size() / width_ : 0; }
  std::span<const std::uint32_t> operator[](std::size_t i) const {
    return {flat_.data() + i * width_, width_};
  }
  std::optional<std::uint32_t> find(std::span<const std::uint32_t> vertices) const;

 private:
  std::size_t width_;
  std::vector<std::uint32_t> flat_;
};

struct VertexGenerator {
  std::string name;
  std::vector<std::uint32_t> image;  ///< vertex id -> vertex id
};

/// Oriented simplicial chain complex with integer boundary matrices and a
/// group acting through vertex permutations. Vertex ids double as the global
/// vertex order, so a simplex is its ascending id sequence. Immutable once
/// built.
class EquivariantComplex {
 public:
  /// `simplices` must be closed under taking faces; each is sorted on input.
  static EquivariantComplex build(std::vector<std::string> vertex_labels,
                                  const std::vector<std::vector<std::uint32_t>>& simplices,
                                  std::vector<VertexGenerator> generators, int group_degree,
                                  const ComputeOptions& options = {});
  static EquivariantComplex from_tables(std::vector<std::string> vertex_labels, std::vector<SimplexTable> tables,
                                        std::vector<VertexGenerator> generators, int group_degree,
                                        const ComputeOptions& options = {});
  static EquivariantComplex empty(int group_degree = 0);

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(tables_.size()) - 1; }
  std::size_t count(int d) const;
  std::vector<std::size_t> f_vector() const;
  const SimplexTable& simplices(int d) const { return tables_.at(static_cast<std::size_t>(d)); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  std::string simplex_label(int d, std::size_t i) const;

  /// boundary d: C_d -> C_{d-1}, for 1 <= d <= dimension().
  const SparseIntMatrix& boundary(int d) const;
  /// Augmentation C_0 -> Z (a row of ones).
  SparseIntMatrix augmentation() const;

  int group_degree() const { return group_degree_; }
  const std::vector<VertexGenerator>& generators() const { return generators_; }
  const std::vector<SignedIndex>& action(std::size_t generator, int d) const;
  /// Signed permutation induced on C_d by an arbitrary vertex permutation.
  std::vector<SignedIndex> chain_action(int d, const std::vector<std::uint32_t>& vertex_map) const;
  /// Trace of a vertex permutation on C_d: signed count of fixed simplices.
  std::int64_t chain_trace(int d, const std::vector<std::uint32_t>& vertex_map) const;

  /// -1 + sum_d (-1)^d f_d.
  std::int64_t reduced_euler_characteristic() const;

  bool boundary_squares_to_zero() const;
  /// A_{k-1} boundary_k == boundary_k A_k for every generator and k, and every
  /// A_k a signed permutation.
  bool is_equivariant() const;

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<SimplexTable> tables_;
  std::vector<SparseIntMatrix> boundaries_;  // index d-1 holds boundary d
  std::vector<VertexGenerator> generators_;
  std::vector<std::vector<std::vector<SignedIndex>>> actions_;  // [generator][d]
  int group_degree_ = 0;
};

/// Order complex of `elements` under the refinement order: k-simplices are
/// (k+1)-chains, vertices ordered canonically. If `generators` are given,
/// the element set must be stable under them and the complex carries the
/// induced action.
EquivariantComplex order_complex(const std::vector<SetPartition>& elements,
                                 const std::vector<Permutation>& generators = {},
                                 const ComputeOptions& options = {});

/// Adds fixed poles SOUTH and NORTH (the first two vertices) and cones every
/// simplex to each of them.
EquivariantComplex unreduced_suspension(const EquivariantComplex& c, const ComputeOptions& options = {});

/// Suspension of the order complex of proper nontrivial partitions of
/// {1..n}, with the action of (1 2) and (1 2 ... n). K_1 is empty.
EquivariantComplex k_n(int n, const ComputeOptions& options = {});

/// Simplicial join. Vertices of c1 precede those of c2; the result carries
/// c1's generators (fixing c2) followed by c2's (fixing c1).
EquivariantComplex join(const EquivariantComplex& c1, const EquivariantComplex& c2,
                        const ComputeOptions& options = {});

/// Join of K_{|B|} over the blocks B of lambda, vertices relabelled onto the
/// blocks' elements. lambda must not be discrete.
EquivariantComplex k_lambda(const SetPartition& lambda, const ComputeOptions& options = {});

/// Suspension of the order complex of partitions strictly between lambda
/// and the discrete partition. Independent construction used to cross-check
/// k_lambda.
EquivariantComplex k_lambda_direct(const SetPartition& lambda, const ComputeOptions& options = {});

/// Vertex permutation of K_n induced by sigma.
std::vector<std::uint32_t> k_n_vertex_map(int n, const Permutation& sigma);

/// Number of simplices k_n(n) would have, counted without building it.
std::size_t k_n_simplex_count(int n);

struct EulerFiltrationReport {
  int n = 0;
  std::int64_t subquotient_sum = 0;  ///< sum over non-discrete lambda of reduced chi(K_lambda ^ S^{2c})
  std::int64_t target = 0;           ///< reduced chi of the fat diagonal of S^2, by additivity
  bool agree = false;
};

/// Compares the Euler characteristic of the filtration subquotients of the
/// fat diagonal of S^2 against the value forced by Euler additivity
/// S^{2n} = F(C, n) + fat diagonal. 2 <= n <= 7.
EulerFiltrationReport euler_filtration_check(int n, const ComputeOptions& options = {});

/// Writes all boundary matrices as consecutive triplet blocks, each preceded
/// by a `% boundary <d>` comment.
void write_boundary_bundle(std::ostream& os, const EquivariantComplex& c);
/// Reads a bundle back as boundary matrices 1..dim.
std::vector<SparseIntMatrix> read_boundary_bundle(std::istream& is);

}  // namespace pn
