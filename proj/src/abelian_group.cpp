#include "pn/abelian_group.hpp"

#include "pn/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pn {

namespace {

// Prime-power decomposition by trial division. Torsion orders seen here are
// small; a huge order would only be slow, never wrong.
std::map<BigInt, std::vector<BigInt>> primary_parts(const std::vector<BigInt>& orders) {
  std::map<BigInt, std::vector<BigInt>> parts;
  for (BigInt d : orders) {
    for (BigInt p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      BigInt q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      parts[p].push_back(q);
    }
    if (d > 1) parts[d].push_back(d);
  }
  return parts;
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t free_rank, const std::vector<BigInt>& orders) {
  AbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<BigInt> finite;
  for (const auto& raw : orders) {
    BigInt d = raw < 0 ? BigInt(-raw) : raw;
    if (d == 0) {
      ++g.free_rank_;
    } else if (d > 1) {
      finite.push_back(d);
    }
  }
  bool chain = true;
  for (std::size_t i = 1; i < finite.size(); ++i) {
    if (finite[i] % finite[i - 1] != 0) chain = false;
  }
  if (chain) {
    g.torsion_ = std::move(finite);
    return g;
  }
  // Regroup primary components: the largest powers of each prime multiply
  // into the last invariant factor, and so on.
  auto parts = primary_parts(finite);
  std::size_t count = 0;
  for (auto& [p, powers] : parts) {
    std::sort(powers.begin(), powers.end());
    count = std::max(count, powers.size());
  }
  std::vector<BigInt> factors(count, 1);
  for (auto& [p, powers] : parts) {
    std::size_t offset = count - powers.size();
    for (std::size_t i = 0; i < powers.size(); ++i) factors[offset + i] *= powers[i];
  }
  g.torsion_ = std::move(factors);
  return g;
}

std::size_t AbelianGroup::p_torsion_count(const BigInt& p) const {
  return static_cast<std::size_t>(
      std::count_if(torsion_.begin(), torsion_.end(), [&](const BigInt& d) { return d % p == 0; }));
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> terms;
  if (free_rank_ == 1) terms.emplace_back("Z");
  if (free_rank_ > 1) terms.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) terms.push_back("Z/" + d.str());
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  if (text == "0") return {};
  std::size_t free_rank = 0;
  std::vector<BigInt> orders;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "+") continue;
    if (tok == "Z") {
      ++free_rank;
    } else if (tok.rfind("Z^", 0) == 0) {
      free_rank += std::stoul(tok.substr(2));
    } else if (tok.rfind("Z/", 0) == 0) {
      orders.emplace_back(tok.substr(2));
    } else {
      throw_invalid("cannot parse abelian group: " + text);
    }
  }
  return from_cyclic_orders(free_rank, orders);
}

}  // namespace pn
