#include "pn/permutation.hpp"

#include "pn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pn {

namespace {

constexpr int kMaxDegree = 64;

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree) throw_invalid("permutation degree out of range: " + std::to_string(n));
}

void integer_partitions(int remaining, int max_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    integer_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_degree(n);
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  check_degree(static_cast<int>(images.size()));
  std::vector<std::uint8_t> out(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw_invalid("not a bijection of {1..n}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    out[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw_invalid("bad transposition");
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::long_cycle(int n) {
  check_degree(n);
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(int n, const std::string& text) {
  check_degree(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw_invalid("bad cycle notation: " + text);
    auto close = text.find(')', pos);
    if (close == std::string::npos) throw_invalid("bad cycle notation: " + text);
    std::istringstream is(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    std::string tok;
    while (is >> tok) {
      for (auto& ch : tok) {
        if (ch == ',') ch = ' ';
      }
      std::istringstream inner(tok);
      int v;
      while (inner >> v) cycle.push_back(v);
    }
    for (int v : cycle) {
      if (v < 1 || v > n || used[static_cast<std::size_t>(v - 1)]) throw_invalid("bad cycle notation: " + text);
      used[static_cast<std::size_t>(v - 1)] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return from_images(images);
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw_invalid("permutation degree mismatch");
  std::vector<std::uint8_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[other.images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(out));
}

int Permutation::sign() const {
  int parity = 0;
  for (int len : cycle_type()) parity += len - 1;
  return parity % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw_invalid("factorial out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<ConjugacyClass> conjugacy_class_reps(int n) {
  check_degree(n);
  if (n > 20) throw_invalid("class sizes overflow beyond n = 20");
  std::vector<std::vector<int>> types;
  std::vector<int> current;
  integer_partitions(n, n, current, types);
  std::sort(types.begin(), types.end());

  std::vector<ConjugacyClass> out;
  for (const auto& type : types) {
    std::vector<int> images(static_cast<std::size_t>(n));
    int start = 0;
    for (int len : type) {
      for (int k = 0; k < len; ++k) images[static_cast<std::size_t>(start + k)] = start + (k + 1) % len + 1;
      start += len;
    }
    // n! / prod_i (i^{m_i} m_i!)
    std::uint64_t denom = 1;
    for (std::size_t i = 0; i < type.size();) {
      std::size_t j = i;
      while (j < type.size() && type[j] == type[i]) ++j;
      auto mult = static_cast<int>(j - i);
      for (int k = 0; k < mult; ++k) denom *= static_cast<std::uint64_t>(type[i]);
      denom *= factorial(mult);
      i = j;
    }
    out.push_back({type, Permutation::from_images(images), factorial(n) / denom});
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  if (n > 10) throw_resource("refusing to enumerate S_n for n > 10");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string cycle_type_string(const std::vector<int>& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(type[i]);
  }
  return out;
}

}  // namespace pn
