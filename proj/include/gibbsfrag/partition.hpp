#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gibbsfrag/rational.hpp"
#include "gibbsfrag/records.hpp"

namespace gibbsfrag {

// Partition of [n] in canonical form: blocks ordered by their minimum,
// elements ascending inside each block. Equivalently encodable as a
// restricted growth string (element i's 0-based block label).
class SetPartition {
 public:
  SetPartition() = default;

  static SetPartition of_blocks(int n, std::vector<std::vector<int>> blocks);
  static SetPartition of_rgs(const std::vector<int>& rgs);
  static SetPartition single_block(int n);
  static SetPartition singletons(int n);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int element) const;  // 0-based block index

  std::vector<int> rgs() const;
  std::string rgs_string() const;  // digits then letters; supports n <= 36

  // The partition of [n] \ {element} left by removing one element.
  SetPartition without(int element) const;
  SetPartition with_singleton(int element) const;           // element > all current
  SetPartition with_joined(int element, int target) const;  // element joins target's block

  bool operator==(const SetPartition&) const = default;
  bool operator<(const SetPartition& other) const;  // RGS-lexicographic

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Cover relation of the split order: fine is coarse with exactly one block
// split into two nonempty parts.
bool covers(const SetPartition& coarse, const SetPartition& fine);

inline int state_level(const SetPartition& p) { return p.block_count(); }
inline int state_size(const SetPartition& p) { return p.n(); }
std::string state_name(const SetPartition& p);

// bit i set iff i is the smallest element of its block.
RecordVector record_set(const SetPartition& p);

// Visits each restricted growth string of length n with exactly k distinct
// labels, in lexicographic order.
void for_each_rgs(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

// Number of partitions of [n] into k blocks (second-kind triangle).
Int partition_count(int n, int k);

// Materializes the full layer in RGS-lex order; checked against the layer
// state guard before allocating.
std::vector<SetPartition> enumerate_partitions(int n, int k);

}  // namespace gibbsfrag
