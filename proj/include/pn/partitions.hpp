#pragma once

#include "pn/permutation.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pn {

/// Largest ground set a SetPartition can hold.
inline constexpr int kMaxGroundSet = 16;
/// Largest n for which whole-lattice enumeration is allowed (Bell(9) = 21147).
inline constexpr int kLatticeCap = 9;

/// A set partition of {1..n} in canonical form: blocks ordered by their
/// minimum element, elements ascending. Stored as a restricted growth string
/// (label of element i = index of its block), which is unique per partition,
/// so equality, hashing and ordering all go through the labels.
///
/// The lexicographic order on labels is the global vertex order used by the
/// complexes. It is a linear extension of the lattice order below: a coarser
/// partition always compares smaller.
class SetPartition {
 public:
  /// Blocks are 1-based element lists in any order.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// Any labelling; canonicalized. labels[i] is the block tag of element i+1.
  static SetPartition from_labels(const std::vector<int>& labels);
  /// Sorted block notation, e.g. "1,2|3".
  static SetPartition parse(const std::string& text);
  static SetPartition one_block(int n);
  static SetPartition discrete(int n);

  int ground_size() const { return n_; }
  int block_count() const { return blocks_; }
  /// 0-based block index of element i (1-based).
  int block_of(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
  std::vector<std::vector<int>> blocks() const;
  std::string to_string() const;

  bool is_one_block() const { return blocks_ == 1; }
  bool is_discrete() const { return blocks_ == n_; }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }
  std::size_t hash() const;

 private:
  SetPartition() = default;
  std::uint8_t n_ = 0;
  std::uint8_t blocks_ = 0;
  std::array<std::uint8_t, kMaxGroundSet> labels_{};
};

struct PartitionBounds {
  bool include_initial = true;  ///< the one-block partition
  bool include_final = true;    ///< the discrete partition
};

/// All partitions of {1..n} in canonical (label-lexicographic) order.
std::vector<SetPartition> all_partitions(int n, PartitionBounds bounds = {});

/// True iff every block of a lies inside a block of b. In the lattice order
/// used here (one block initial, discrete final), a refines b means b <= a.
bool refines(const SetPartition& a, const SetPartition& b);

/// Coarsest common refinement: blocks are the nonempty intersections.
SetPartition common_refinement(const std::vector<SetPartition>& parts);

/// Moebius value between the one-block and the discrete partition of the
/// full lattice, by the defining recursion.
std::int64_t mobius_partition_lattice(int n);

/// Relabels elements through sigma: element i's block goes to sigma(i).
SetPartition apply(const Permutation& sigma, const SetPartition& lambda);

/// Bell number by direct summation of Stirling numbers of the second kind.
std::uint64_t bell_number(int n);

}  // namespace pn

template <>
struct std::hash<pn::SetPartition> {
  std::size_t operator()(const pn::SetPartition& p) const noexcept { return p.hash(); }
};
