#include "pn/partitions.hpp"

#include "pn/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pn {

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxGroundSet) throw_invalid("ground set size out of range: " + std::to_string(n));
}

void check_same_ground(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) throw_invalid("partitions on different ground sets");
}

}  // namespace

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  check_ground(static_cast<int>(labels.size()));
  SetPartition p;
  p.n_ = static_cast<std::uint8_t>(labels.size());
  // Relabel in order of first appearance; this is the canonical form.
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == labels[i]; });
    int canon;
    if (it == seen.end()) {
      canon = static_cast<int>(seen.size());
      seen.emplace_back(labels[i], canon);
    } else {
      canon = it->second;
    }
    p.labels_[i] = static_cast<std::uint8_t>(canon);
  }
  p.blocks_ = static_cast<std::uint8_t>(seen.size());
  return p;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_ground(n);
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw_invalid("empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) throw_invalid("element out of range: " + std::to_string(e));
      if (labels[static_cast<std::size_t>(e - 1)] != -1) throw_invalid("blocks are not disjoint");
      labels[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) throw_invalid("blocks do not cover {1..n}");
  return from_labels(labels);
}

SetPartition SetPartition::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  int n = 0;
  std::istringstream blocks_in(text);
  std::string block;
  while (std::getline(blocks_in, block, '|')) {
    std::vector<int> elems;
    std::istringstream elems_in(block);
    std::string tok;
    while (std::getline(elems_in, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 3) {
        throw_invalid("malformed partition: '" + text + "'");
      }
      int e = std::stoi(tok);
      elems.push_back(e);
      n = std::max(n, e);
    }
    if (elems.empty()) throw_invalid("malformed partition: '" + text + "'");
    blocks.push_back(std::move(elems));
  }
  if (blocks.empty()) throw_invalid("malformed partition: '" + text + "'");
  return from_blocks(n, blocks);
}

SetPartition SetPartition::one_block(int n) {
  return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0));
}

SetPartition SetPartition::discrete(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
  return from_labels(labels);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < n_; ++i) out[labels_[static_cast<std::size_t>(i)]].push_back(i + 1);
  return out;
}

std::string SetPartition::to_string() const {
  std::string out;
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out += '|';
    for (std::size_t k = 0; k < bs[b].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(bs[b][k]);
    }
  }
  return out;
}

std::size_t SetPartition::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 31 + labels_[static_cast<std::size_t>(i)];
  return h;
}

std::vector<SetPartition> all_partitions(int n, PartitionBounds bounds) {
  if (n < 1) throw_invalid("n must be positive");
  if (n > kLatticeCap) throw_resource("lattice enumeration capped at n = " + std::to_string(kLatticeCap));
  std::vector<SetPartition> out;
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  // Restricted growth strings in lexicographic order.
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      auto p = SetPartition::from_labels(labels);
      if (!bounds.include_initial && p.is_one_block()) return;
      if (!bounds.include_final && p.is_discrete()) return;
      out.push_back(p);
      return;
    }
    for (int b = 0; b <= max_label + 1; ++b) {
      labels[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(max_label, b));
    }
  };
  rec(rec, 1, 0);
  return out;
}

bool refines(const SetPartition& a, const SetPartition& b) {
  check_same_ground(a, b);
  std::array<int, kMaxGroundSet> image;
  image.fill(-1);
  for (int i = 1; i <= a.ground_size(); ++i) {
    int& slot = image[static_cast<std::size_t>(a.block_of(i))];
    if (slot == -1) {
      slot = b.block_of(i);
    } else if (slot != b.block_of(i)) {
      return false;
    }
  }
  return true;
}

SetPartition common_refinement(const std::vector<SetPartition>& parts) {
  if (parts.empty()) throw_invalid("common_refinement of an empty sequence");
  int n = parts.front().ground_size();
  for (const auto& p : parts) check_same_ground(parts.front(), p);
  // Two elements share a block iff they share a block in every input.
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> keys;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> key;
    key.reserve(parts.size());
    for (const auto& p : parts) key.push_back(p.block_of(i));
    auto it = std::find(keys.begin(), keys.end(), key);
    labels[static_cast<std::size_t>(i - 1)] = static_cast<int>(it - keys.begin());
    if (it == keys.end()) keys.push_back(std::move(key));
  }
  return SetPartition::from_labels(labels);
}

std::int64_t mobius_partition_lattice(int n) {
  if (n < 2) throw_invalid("mobius_partition_lattice needs n >= 2");
  auto all = all_partitions(n);
  // all[0] is the one-block partition. Canonical order is a linear extension,
  // so every z below y in the lattice precedes y in `all`.
  std::vector<std::int64_t> mu(all.size(), 0);
  mu[0] = 1;
  for (std::size_t y = 1; y < all.size(); ++y) {
    std::int64_t sum = 0;
    for (std::size_t z = 0; z < y; ++z) {
      if (refines(all[y], all[z])) sum += mu[z];
    }
    mu[y] = -sum;
  }
  return mu.back();
}

SetPartition apply(const Permutation& sigma, const SetPartition& lambda) {
  if (sigma.degree() != lambda.ground_size()) throw_invalid("permutation and partition degree mismatch");
  int n = lambda.ground_size();
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(sigma.image0(i))] = lambda.block_of(i + 1);
  return SetPartition::from_labels(labels);
}

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw_invalid("bell_number out of range");
  // S(n, k) row by row.
  std::vector<std::uint64_t> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(m + 1), 0);
    for (int k = 1; k <= m; ++k) {
      std::uint64_t prev = k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : 0;
      next[static_cast<std::size_t>(k)] = static_cast<std::uint64_t>(k) * prev + row[static_cast<std::size_t>(k - 1)];
    }
    row = std::move(next);
  }
  std::uint64_t sum = 0;
  for (auto v : row) sum += v;
  return sum;
}

}  // namespace pn
