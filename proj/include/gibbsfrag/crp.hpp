#pragma once

#include <cstdint>
#include <vector>

#include "gibbsfrag/alpha.hpp"
#include "gibbsfrag/coupling.hpp"
#include "gibbsfrag/partition.hpp"
#include "gibbsfrag/records.hpp"
#include "gibbsfrag/rng.hpp"

namespace gibbsfrag {

// Table choices of the restaurant construction: C_i picks which existing
// customer the arriving customer i sits to the left of, uniform on [1, i-1].
struct SeatingChoices {
  int n = 1;
  std::vector<int> choices;  // choices[i-2] = C_i

  static SeatingChoices uniform(int n, SplitMix64& rng);
  int at(int i) const { return choices.at(i - 2); }
  void validate() const;
};

struct CrpTables {
  SetPartition partition;
  std::vector<std::vector<int>> cycles;  // table orders; each starts at its minimum
};

// Seats customers 1..n: a record opens a new table, otherwise customer i
// sits immediately to the left of customer C_i. Tables give the partition
// blocks; the cyclic order around each table is the cycle view.
CrpTables crp_seating(const RecordVector& b, const SeatingChoices& c);
SetPartition crp_partition(const RecordVector& b, const SeatingChoices& c);

// True iff flipping the extra record of b_next splits exactly one block of
// crp_partition(b, c) into two. Requires covers(b, b_next).
bool split_check(const RecordVector& b, const RecordVector& b_next, const SeatingChoices& c);

// Sequence of partitions with k = 1..n blocks, each step splitting exactly
// one block into two nonempty parts.
struct FragmentationPath {
  int n = 0;
  std::vector<SetPartition> partitions;

  void validate() const;
};

// Rows m = 1..n, row m a fragmentation path on [m], grown recursively.
struct PartitionTriangle {
  int n = 0;
  std::vector<FragmentationPath> rows;

  void validate() const;
};

// One recursion step: the path on [m] derived from a path on [m-1] by
// adding m as a singleton at levels >= threshold and putting it in
// join_target's block below. threshold in [2, m], join_target in [1, m-1].
// The result is validated: every step still splits exactly one block.
FragmentationPath extend_fragmentation_row(const FragmentationPath& prev, int threshold,
                                           int join_target);

// How the restaurant sampler couples adjacent record layers.
enum class CouplingChoice {
  flow_default,       // whatever the deterministic flow produces
  extreme_max_first,  // max mass on the first cover edge of each pair
  extreme_min_first,  // min mass on the first cover edge of each pair
};

struct CrpSampleDetail {
  FragmentationPath path;
  SeatingChoices seats;
  std::vector<RecordVector> chain;  // B^1 < B^2 < ... < B^n
};

// Restaurant-based fragmentation sampler (uniform-permutation case): one
// seating-choice draw is shared by a monotone chain of record vectors, and
// each record vector maps through the seating rule.
class CrpFragmentationSampler {
 public:
  explicit CrpFragmentationSampler(int n, CouplingChoice choice = CouplingChoice::flow_default);

  FragmentationPath sample(SplitMix64& rng) const;
  CrpSampleDetail sample_detail(SplitMix64& rng) const;
  const std::vector<LayerDistribution<RecordVector>>& layers() const { return layers_; }

 private:
  int n_;
  std::vector<LayerDistribution<RecordVector>> layers_;
  std::vector<MonotoneCoupling<RecordVector>> couplings_;
  // conditional kernels: per coupling, per lower state, (upper index, prob)
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> kernels_;
};

// Recursive-in-n fragmentation sampler: row m is derived from row m-1 by
// inserting m, as a singleton for k at or above a sampled threshold and
// into the block of a uniformly chosen earlier element below it.
class RecursiveFragmentationSampler {
 public:
  explicit RecursiveFragmentationSampler(int n);

  PartitionTriangle sample(SplitMix64& rng) const;

 private:
  int n_;
  std::vector<KDistribution> thresholds_;  // thresholds_[m-2] for row m
};

// Record-vector analogue of the recursive sampler for general alpha: the
// output chain is coordinatewise nondecreasing with k-th marginal
// record_law(alpha, n, k).
class RecordChainSampler {
 public:
  RecordChainSampler(const Alpha& alpha, int n);

  std::vector<RecordVector> sample(SplitMix64& rng) const;

 private:
  int n_;
  std::vector<KDistribution> thresholds_;
};

FragmentationPath sample_fragmentation_crp(int n, std::uint64_t seed);
PartitionTriangle sample_fragmentation_recursive(int n, std::uint64_t seed);
std::vector<RecordVector> sample_record_chain(const Alpha& alpha, int n, std::uint64_t seed);

}  // namespace gibbsfrag
