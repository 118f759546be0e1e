#pragma once

#include "pn/bigint.hpp"

#include <string>
#include <vector>

namespace pn {

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_t with
/// d_1 | d_2 | ... | d_t and every d_i >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts arbitrary cyclic orders (0 = free summand, 1 = dropped) and
  /// brings them into invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::size_t free_rank, const std::vector<BigInt>& orders);
  static AbelianGroup free(std::size_t rank) { return from_cyclic_orders(rank, {}); }
  static AbelianGroup cyclic(const BigInt& order) { return from_cyclic_orders(0, {order}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  /// Number of invariant factors divisible by p.
  std::size_t p_torsion_count(const BigInt& p) const;

  /// "0", "Z^6", "Z/3", "Z + Z/2 + Z/4".
  std::string to_string() const;
  static AbelianGroup parse(const std::string& text);

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

}  // namespace pn
