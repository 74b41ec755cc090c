#include "gibbsfrag/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "gibbsfrag/lattice.hpp"

namespace gibbsfrag {

SetPartition SetPartition::of_blocks(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1) throw std::invalid_argument("SetPartition: n must be >= 1");
  std::vector<char> seen(n + 1, 0);
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 1 || e > n) throw std::invalid_argument("SetPartition: element out of range");
      if (seen[e]) throw std::invalid_argument("SetPartition: duplicate element");
      seen[e] = 1;
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (!seen[e]) throw std::invalid_argument("SetPartition: element missing");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SetPartition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::of_rgs(const std::vector<int>& rgs) {
  const int n = static_cast<int>(rgs.size());
  if (n < 1) throw std::invalid_argument("SetPartition: empty rgs");
  int max_label = -1;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    const int label = rgs[i];
    if (label < 0 || label > max_label + 1) {
      throw std::invalid_argument("SetPartition: not a restricted growth string");
    }
    if (label == max_label + 1) {
      blocks.emplace_back();
      ++max_label;
    }
    blocks[label].push_back(i + 1);
  }
  SetPartition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);  // labels appear by first occurrence = by minimum
  return p;
}

SetPartition SetPartition::single_block(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return of_blocks(n, {all});
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = {i + 1};
  return of_blocks(n, std::move(blocks));
}

int SetPartition::block_of(int element) const {
  for (int b = 0; b < block_count(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), element)) return b;
  }
  throw std::invalid_argument("SetPartition: element not present");
}

std::vector<int> SetPartition::rgs() const {
  std::vector<int> out(n_, -1);
  for (int b = 0; b < block_count(); ++b) {
    for (int e : blocks_[b]) out[e - 1] = b;
  }
  return out;
}

std::string SetPartition::rgs_string() const {
  static const char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (n_ > 36) throw std::invalid_argument("rgs_string: supports n <= 36");
  std::string s;
  s.reserve(n_);
  for (int label : rgs()) s.push_back(digits[label]);
  return s;
}

SetPartition SetPartition::without(int element) const {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : blocks_) {
    std::vector<int> kept;
    for (int e : block) {
      if (e != element) kept.push_back(e);
    }
    if (!kept.empty()) blocks.push_back(std::move(kept));
  }
  return of_blocks(n_ - 1, std::move(blocks));
}

SetPartition SetPartition::with_singleton(int element) const {
  if (element != n_ + 1) throw std::invalid_argument("with_singleton: element must be n+1");
  auto blocks = blocks_;
  blocks.push_back({element});
  return of_blocks(n_ + 1, std::move(blocks));
}

SetPartition SetPartition::with_joined(int element, int target) const {
  if (element != n_ + 1) throw std::invalid_argument("with_joined: element must be n+1");
  auto blocks = blocks_;
  blocks[block_of(target)].push_back(element);
  return of_blocks(n_ + 1, std::move(blocks));
}

bool SetPartition::operator<(const SetPartition& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return rgs() < other.rgs();
}

bool covers(const SetPartition& coarse, const SetPartition& fine) {
  if (coarse.n() != fine.n()) return false;
  if (fine.block_count() != coarse.block_count() + 1) return false;
  // Refinement with exactly one coarse block split in two: count the fine
  // blocks landing in each coarse block and check element containment.
  std::vector<int> hits(coarse.block_count(), 0);
  const auto rgs_coarse = coarse.rgs();
  for (const auto& block : fine.blocks()) {
    const int home = rgs_coarse[block.front() - 1];
    for (int e : block) {
      if (rgs_coarse[e - 1] != home) return false;  // not a refinement
    }
    ++hits[home];
  }
  int split = 0;
  for (int h : hits) {
    if (h == 2) {
      ++split;
    } else if (h != 1) {
      return false;
    }
  }
  return split == 1;
}

std::string state_name(const SetPartition& p) { return p.rgs_string(); }

RecordVector record_set(const SetPartition& p) {
  std::uint64_t bits = 0;
  for (const auto& block : p.blocks()) {
    bits |= std::uint64_t{1} << (block.front() - 1);
  }
  return RecordVector(p.n(), bits);
}

void for_each_rgs(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("for_each_rgs: need 1 <= k <= n");
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      if (used == k) fn(rgs);
      return;
    }
    // prune: remaining positions must be able to reach exactly k labels
    if (used + (n - pos) < k) return;
    const int top = std::min(used, k - 1);
    for (int label = 0; label <= top; ++label) {
      rgs[pos] = label;
      self(self, pos + 1, std::max(used, label + 1));
    }
  };
  rec(rec, 0, 0);
}

Int partition_count(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  std::vector<Int> row{Int(1)};  // row for m = 0
  for (int m = 1; m <= n; ++m) {
    std::vector<Int> next(std::min(m, k) + 1, Int(0));
    for (int j = 1; j <= std::min(m, k); ++j) {
      next[j] = Int(j) * (j < static_cast<int>(row.size()) ? row[j] : Int(0)) + row[j - 1];
    }
    row = std::move(next);
  }
  return k < static_cast<int>(row.size()) ? row[k] : Int(0);
}

std::vector<SetPartition> enumerate_partitions(int n, int k) {
  check_layer_guard(partition_count(n, k), "enumerate_partitions(" + std::to_string(n) + "," +
                                               std::to_string(k) + ")");
  std::vector<SetPartition> out;
  for_each_rgs(n, k, [&](const std::vector<int>& rgs) { out.push_back(SetPartition::of_rgs(rgs)); });
  return out;
}

}  // namespace gibbsfrag
