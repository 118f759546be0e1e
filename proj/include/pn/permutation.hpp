#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pn {

/// A permutation of {1..n}. Stored 0-based; the public accessors that take
/// or return elements use 1-based labels.
class Permutation {
 public:
  static Permutation identity(int n);
  /// From 1-based images: images[i-1] = sigma(i).
  static Permutation from_images(const std::vector<int>& images);
  /// The transposition (a b), 1-based.
  static Permutation transposition(int n, int a, int b);
  /// The long cycle (1 2 ... n).
  static Permutation long_cycle(int n);
  /// Parses cycle notation such as "(1 2)(3 4 5)"; "()" or "" is the identity.
  static Permutation parse_cycles(int n, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }
  /// 0-based image, for inner loops.
  int image0(int i) const { return images_[static_cast<std::size_t>(i)]; }

  /// Composition (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  /// Cycle lengths, sorted descending, including fixed points.
  std::vector<int> cycle_type() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {}
  std::vector<std::uint8_t> images_;
};

struct ConjugacyClass {
  std::vector<int> cycle_type;  ///< descending
  Permutation representative;
  std::uint64_t size = 0;
};

/// One representative per cycle type, ordered lexicographically by the
/// descending cycle type, so (1,1,1) < (2,1) < (3). Sizes sum to n!.
std::vector<ConjugacyClass> conjugacy_class_reps(int n);

/// All permutations of {1..n} in lexicographic order of their image sequence.
std::vector<Permutation> all_permutations(int n);

std::uint64_t factorial(int n);

/// "2,1" style rendering of a cycle type.
std::string cycle_type_string(const std::vector<int>& type);

}  // namespace pn
