#include "pn/dyer_lashof.hpp"

#include "pn/errors.hpp"
#include "pn/smith.hpp"

#include <algorithm>
#include <cctype>

namespace pn {

namespace {

constexpr std::size_t kMaxListedWords = 1'000'000;
constexpr std::size_t kMaxWitnesses = 16;

void check_prime(std::uint64_t p) {
  if (p == 2) throw_invalid("the word calculus is implemented for odd primes only");
  if (!is_prime(p)) throw_invalid("p must be an odd prime");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_resource("word degree overflows 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_resource("word degree overflows 64 bits");
  return r;
}

/// Per Bockstein pattern: the total S = s_1 + ... + s_k forced by the degree,
/// and the smallest chain (s_k = 1, each s_i as small as allowed).
struct Pattern {
  std::vector<int> eps;
  std::int64_t total = 0;
  std::vector<std::int64_t> minimal;  // minimal chain values s_1..s_k
  std::int64_t minimal_sum = 0;
  bool feasible = false;
};

std::vector<Pattern> patterns(std::uint64_t p, int k, std::int64_t d) {
  if (k < 1) throw_invalid("word length must be >= 1");
  if (k > 40) throw_resource("word length is capped at 40");
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t step = 2 * (pp - 1);
  std::vector<Pattern> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Pattern pat;
    // eps[0] is e_1, the most significant bit, so masks run in lex order.
    for (int i = 0; i < k; ++i) pat.eps.push_back(static_cast<int>((mask >> (k - 1 - i)) & 1));
    std::int64_t e = 0;
    for (int x : pat.eps) e += x;
    const std::int64_t numerator = d - k + e;
    if (numerator < 0 || numerator % step != 0) {
      out.push_back(std::move(pat));
      continue;
    }
    pat.total = numerator / step;
    pat.minimal.assign(static_cast<std::size_t>(k), 0);
    pat.minimal[static_cast<std::size_t>(k - 1)] = 1;
    bool overflow = false;
    for (int i = k - 2; i >= 0; --i) {
      const auto next = pat.minimal[static_cast<std::size_t>(i + 1)];
      if (next > (pat.total + 1) / pp + 1) {  // already beyond any reachable total
        overflow = true;
        break;
      }
      pat.minimal[static_cast<std::size_t>(i)] = pp * next - pat.eps[static_cast<std::size_t>(i + 1)] + 1;
    }
    if (!overflow) {
      for (auto v : pat.minimal) pat.minimal_sum += v;
      pat.feasible = pat.minimal_sum <= pat.total;
    }
    out.push_back(std::move(pat));
  }
  return out;
}

/// Raising the slack below position j (1-based) by one raises s_j, s_{j-1},
/// ..., s_1 by 1, p, ..., p^{j-1}, so every word is the minimal chain plus a
/// combination of the weights (p^j - 1)/(p - 1). counts[r] = number of ways
/// to write r with weights j = 1..k.
std::vector<std::uint64_t> slack_counts(std::uint64_t p, int k, std::int64_t max_slack) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_slack + 1), 0);
  counts[0] = 1;
  std::int64_t weight = 1;
  std::int64_t power = 1;
  for (int j = 1; j <= k && weight <= max_slack; ++j) {
    for (std::int64_t r = weight; r <= max_slack; ++r) {
      auto& c = counts[static_cast<std::size_t>(r)];
      if (__builtin_add_overflow(c, counts[static_cast<std::size_t>(r - weight)], &c)) {
        throw_resource("word count exceeds 64 bits");
      }
    }
    power = checked_mul(power, static_cast<std::int64_t>(p));
    weight = checked_add(weight, power);
  }
  return counts;
}

struct Counts {
  std::uint64_t all = 0;
  std::uint64_t with_bockstein = 0;
};

Counts count_words(std::uint64_t p, int k, const std::vector<Pattern>& pats) {
  std::int64_t max_slack = -1;
  for (const auto& pat : pats) {
    if (pat.feasible) max_slack = std::max(max_slack, pat.total - pat.minimal_sum);
  }
  Counts c;
  if (max_slack < 0) return c;
  if (max_slack > 100'000'000) throw_resource("dimension too large to count words");
  const auto counts = slack_counts(p, k, max_slack);
  for (const auto& pat : pats) {
    if (!pat.feasible) continue;
    const auto n = counts[static_cast<std::size_t>(pat.total - pat.minimal_sum)];
    if (__builtin_add_overflow(c.all, n, &c.all)) throw_resource("word count exceeds 64 bits");
    if (pat.eps[0] == 1) c.with_bockstein += n;
  }
  return c;
}

DLWord word_from(std::uint64_t p, const std::vector<int>& eps, const std::vector<std::int64_t>& s) {
  DLWord w;
  w.p = p;
  for (std::size_t i = 0; i < eps.size(); ++i) w.entries.push_back({eps[i], s[i]});
  return w;
}

/// Chooses s_k, s_{k-1}, ..., s_2 and lets s_1 take the remainder.
void enumerate_pattern(std::uint64_t p, const Pattern& pat, std::vector<DLWord>& out) {
  const int k = static_cast<int>(pat.eps.size());
  const auto pp = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> s(static_cast<std::size_t>(k), 0);
  // Smallest possible s_1 + ... + s_{j-1} once s_j is fixed.
  auto minimal_head = [&](int j, std::int64_t sj) {
    std::int64_t sum = 0;
    std::int64_t cur = sj;
    for (int i = j - 1; i >= 0; --i) {
      cur = pp * cur - pat.eps[static_cast<std::size_t>(i + 1)] + 1;
      sum += cur;
      if (sum > pat.total) break;
    }
    return sum;
  };
  auto rec = [&](auto&& self, int j, std::int64_t used) -> void {
    if (j == 0) {
      const std::int64_t s1 = pat.total - used;
      const std::int64_t lower = k == 1 ? 1 : pp * s[1] - pat.eps[1] + 1;
      if (s1 >= lower) {
        s[0] = s1;
        out.push_back(word_from(p, pat.eps, s));
        if (out.size() > kMaxListedWords) throw_resource("word basis too large to list");
      }
      return;
    }
    const std::int64_t lower = j == k - 1 ? 1 : pp * s[static_cast<std::size_t>(j + 1)] -
                                                     pat.eps[static_cast<std::size_t>(j + 1)] + 1;
    for (std::int64_t v = lower; used + v + minimal_head(j, v) <= pat.total; ++v) {
      s[static_cast<std::size_t>(j)] = v;
      self(self, j - 1, used + v);
    }
  };
  rec(rec, k - 1, 0);
}

}  // namespace

std::string DLWord::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    if (e.epsilon) out += 'b';
    out += 'Q' + std::to_string(e.s);
  }
  return out + 'u';
}

DLWord DLWord::parse(std::uint64_t p, const std::string& text) {
  DLWord w;
  w.p = p;
  std::size_t i = 0;
  while (i < text.size() && text[i] != 'u') {
    Entry e;
    if (text[i] == 'b') {
      e.epsilon = 1;
      ++i;
    }
    if (i >= text.size() || text[i] != 'Q') throw_invalid("malformed word: " + text);
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw_invalid("malformed word: " + text);
    e.s = std::stoll(text.substr(start, i - start));
    w.entries.push_back(e);
  }
  if (i + 1 != text.size() || w.entries.empty()) throw_invalid("malformed word: " + text);
  return w;
}

std::int64_t degree(const DLWord& w) {
  const auto step = 2 * (static_cast<std::int64_t>(w.p) - 1);
  std::int64_t d = static_cast<std::int64_t>(w.entries.size());
  for (const auto& e : w.entries) d = checked_add(d, checked_mul(step, e.s) - e.epsilon);
  return d;
}

bool is_completely_inadmissible(const DLWord& w) {
  if (w.entries.empty()) return false;
  const auto pp = static_cast<std::int64_t>(w.p);
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    const auto& e = w.entries[i];
    if (e.s < 1 || (e.epsilon != 0 && e.epsilon != 1)) return false;
    if (i + 1 < w.entries.size()) {
      const auto& next = w.entries[i + 1];
      if (!(e.s > pp * next.s - next.epsilon)) return false;
    }
  }
  return true;
}

std::vector<DLWord> enumerate_basis(std::uint64_t p, int k, std::int64_t d) {
  check_prime(p);
  const auto pats = patterns(p, k, d);
  if (count_words(p, k, pats).all > kMaxListedWords) throw_resource("word basis too large to list");
  std::vector<DLWord> out;
  for (const auto& pat : pats) {
    if (pat.feasible) enumerate_pattern(p, pat, out);
  }
  auto key = [](const DLWord& w) {
    std::vector<std::int64_t> v;
    for (const auto& e : w.entries) {
      v.push_back(e.epsilon);
      v.push_back(e.s);
    }
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const DLWord& a, const DLWord& b) { return key(a) < key(b); });
  return out;
}

AbelianGroup k1_integral(std::uint64_t p, std::int64_t d) {
  check_prime(p);
  const auto step = 2 * (static_cast<std::int64_t>(p) - 1);
  if (d > 0 && d % step == 0) return AbelianGroup::cyclic(BigInt(p));
  return {};
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Zero: return "Zero";
    case VerdictStatus::NonZero: return "NonZero";
    case VerdictStatus::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

HomologyVerdict integral_verdict(std::uint64_t p, int k, std::int64_t d) {
  check_prime(p);
  HomologyVerdict v;
  v.p = p;
  v.k = k;
  v.dimension = d;
  const auto pats = patterns(p, k, d);
  const auto counts = count_words(p, k, pats);
  v.mod_p_dimension = counts.all;
  v.bockstein_image_rank = counts.with_bockstein;
  // One witness per Bockstein pattern: the word whose slack sits entirely in s_1.
  for (const auto& pat : pats) {
    if (!pat.feasible || pat.eps[0] != 1 || v.witnesses.size() >= kMaxWitnesses) continue;
    auto s = pat.minimal;
    s[0] += pat.total - pat.minimal_sum;
    v.witnesses.push_back(word_from(p, pat.eps, s));
  }
  if (k == 1) {
    v.status = k1_integral(p, d).is_trivial() ? VerdictStatus::Zero : VerdictStatus::NonZero;
  } else if (counts.all == 0) {
    v.status = VerdictStatus::Zero;
  } else if (counts.with_bockstein > 0) {
    v.status = VerdictStatus::NonZero;
  } else {
    v.status = VerdictStatus::Undetermined;
  }
  if (v.status != VerdictStatus::NonZero) v.witnesses.clear();
  return v;
}

HomologyVerdict obstruction_group(std::uint64_t n) {
  if (n < 6 || n % 2 != 0) throw_invalid("obstruction_group needs n = 2 p^k with p an odd prime");
  std::uint64_t m = n / 2;
  std::uint64_t p = 0;
  for (std::uint64_t q = 3; q * q <= m; q += 2) {
    if (m % q == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) p = m;  // m itself is prime (or 1, rejected below)
  if (m % 2 == 0 || p < 3) throw_invalid("obstruction_group needs n = 2 p^k with p an odd prime");
  int k = 0;
  std::uint64_t power = 1;
  while (m % p == 0) {
    m /= p;
    power *= p;
    ++k;
  }
  if (m != 1) throw_invalid("obstruction_group needs n = 2 p^k with p an odd prime");
  return integral_verdict(p, k, 4 * static_cast<std::int64_t>(power) - 3);
}

}  // namespace pn
