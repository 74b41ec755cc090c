#include "gibbsfrag/crp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gibbsfrag {

SeatingChoices SeatingChoices::uniform(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("SeatingChoices: n must be >= 1");
  SeatingChoices c;
  c.n = n;
  c.choices.reserve(n >= 2 ? n - 1 : 0);
  for (int i = 2; i <= n; ++i) {
    c.choices.push_back(1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i - 1))));
  }
  return c;
}

void SeatingChoices::validate() const {
  if (n < 1) throw std::invalid_argument("SeatingChoices: n must be >= 1");
  if (static_cast<int>(choices.size()) != std::max(0, n - 1)) {
    throw std::invalid_argument("SeatingChoices: wrong number of choices");
  }
  for (int i = 2; i <= n; ++i) {
    if (at(i) < 1 || at(i) > i - 1) {
      throw std::invalid_argument("SeatingChoices: C_" + std::to_string(i) + " out of range");
    }
  }
}

CrpTables crp_seating(const RecordVector& b, const SeatingChoices& c) {
  if (b.n != c.n) throw std::invalid_argument("crp_seating: length mismatch");
  if (!b.get(1)) throw std::invalid_argument("crp_seating: b_1 must be 1");
  c.validate();
  const int n = b.n;
  std::vector<int> right(n + 1), left(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (b.get(i)) {
      right[i] = left[i] = i;  // new table
    } else {
      const int target = c.at(i);
      const int old_left = left[target];
      right[old_left] = i;
      left[i] = old_left;
      right[i] = target;
      left[target] = i;
    }
  }
  CrpTables out;
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> blocks;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = right[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    blocks.push_back(cycle);  // starts at its minimum: smaller elements were visited first
    out.cycles.push_back(std::move(cycle));
  }
  out.partition = SetPartition::of_blocks(n, std::move(blocks));
  return out;
}

SetPartition crp_partition(const RecordVector& b, const SeatingChoices& c) {
  return crp_seating(b, c).partition;
}

bool split_check(const RecordVector& b, const RecordVector& b_next, const SeatingChoices& c) {
  if (!covers(b, b_next)) throw std::invalid_argument("split_check: states are not a cover pair");
  return covers(crp_partition(b, c), crp_partition(b_next, c));
}

void FragmentationPath::validate() const {
  if (static_cast<int>(partitions.size()) != n) {
    throw std::logic_error("FragmentationPath: expected one partition per level");
  }
  if (partitions.front() != SetPartition::single_block(n)) {
    throw std::logic_error("FragmentationPath: level 1 must be the single block");
  }
  if (partitions.back() != SetPartition::singletons(n)) {
    throw std::logic_error("FragmentationPath: level n must be all singletons");
  }
  for (int k = 1; k < n; ++k) {
    if (!covers(partitions[k - 1], partitions[k])) {
      throw std::logic_error("FragmentationPath: level " + std::to_string(k) +
                             " does not split exactly one block");
    }
  }
}

void PartitionTriangle::validate() const {
  if (static_cast<int>(rows.size()) != n) throw std::logic_error("PartitionTriangle: missing rows");
  for (int m = 1; m <= n; ++m) {
    if (rows[m - 1].n != m) throw std::logic_error("PartitionTriangle: row ground-set mismatch");
    rows[m - 1].validate();
  }
}

CrpFragmentationSampler::CrpFragmentationSampler(int n, CouplingChoice choice) : n_(n) {
  if (n < 1) throw std::invalid_argument("CrpFragmentationSampler: n must be >= 1");
  const StirlingTable table(Alpha::zero(), n);
  for (int k = 1; k <= n; ++k) layers_.push_back(record_law(table, n, k));
  for (int k = 1; k < n; ++k) {
    const auto& lower = layers_[k - 1];
    const auto& upper = layers_[k];
    auto graph = build_cover_graph(lower, upper);
    if (choice == CouplingChoice::flow_default) {
      auto result = strassen_feasible(lower, upper, graph);
      if (std::holds_alternative<ViolationCertificate<RecordVector>>(result)) {
        throw coupling_infeasible_error("record layers unexpectedly infeasible", k);
      }
      couplings_.push_back(std::get<MonotoneCoupling<RecordVector>>(std::move(result)));
    } else {
      const auto direction = choice == CouplingChoice::extreme_max_first ? ExtremeDirection::max
                                                                         : ExtremeDirection::min;
      couplings_.push_back(extreme_coupling(lower, upper, graph, 0, direction));
    }
  }
  for (const auto& coupling : couplings_) {
    std::vector<std::vector<std::pair<int, Rat>>> kernel(coupling.graph.lower_size);
    for (std::size_t e = 0; e < coupling.graph.edges.size(); ++e) {
      const auto [lo, up] = coupling.graph.edges[e];
      if (coupling.lower.probs[lo] > 0) {
        kernel[lo].emplace_back(up, coupling.joint[e] / coupling.lower.probs[lo]);
      }
    }
    kernels_.push_back(std::move(kernel));
  }
}

CrpSampleDetail CrpFragmentationSampler::sample_detail(SplitMix64& rng) const {
  CrpSampleDetail out;
  out.seats = SeatingChoices::uniform(n_, rng);
  out.path.n = n_;
  int state = 0;  // index of the unique k=1 state (1,0,...,0)
  out.chain.push_back(layers_[0].states[state]);
  out.path.partitions.push_back(crp_partition(out.chain.back(), out.seats));
  std::vector<Rat> row;
  for (int k = 1; k < n_; ++k) {
    const auto& kernel = kernels_[k - 1][state];
    row.clear();
    for (const auto& [up, prob] : kernel) row.push_back(prob);
    state = kernel[rng.pick(row)].first;
    out.chain.push_back(layers_[k].states[state]);
    out.path.partitions.push_back(crp_partition(out.chain.back(), out.seats));
  }
  out.path.validate();
  return out;
}

FragmentationPath CrpFragmentationSampler::sample(SplitMix64& rng) const {
  return sample_detail(rng).path;
}

RecursiveFragmentationSampler::RecursiveFragmentationSampler(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RecursiveFragmentationSampler: n must be >= 1");
  const StirlingTable table(Alpha::zero(), std::max(n, 2));
  for (int m = 2; m <= n; ++m) thresholds_.push_back(threshold_law(table, m));
}

FragmentationPath extend_fragmentation_row(const FragmentationPath& prev, int threshold,
                                           int join_target) {
  const int m = prev.n + 1;
  if (threshold < 2 || threshold > m) {
    throw std::invalid_argument("extend_fragmentation_row: threshold out of range");
  }
  if (join_target < 1 || join_target > m - 1) {
    throw std::invalid_argument("extend_fragmentation_row: join target out of range");
  }
  FragmentationPath row;
  row.n = m;
  for (int k = 1; k <= m; ++k) {
    row.partitions.push_back(k >= threshold ? prev.partitions[k - 2].with_singleton(m)
                                            : prev.partitions[k - 1].with_joined(m, join_target));
  }
  row.validate();
  return row;
}

PartitionTriangle RecursiveFragmentationSampler::sample(SplitMix64& rng) const {
  PartitionTriangle triangle;
  triangle.n = n_;
  triangle.rows.push_back({1, {SetPartition::single_block(1)}});
  for (int m = 2; m <= n_; ++m) {
    const int threshold = 1 + rng.pick(thresholds_[m - 2].probs);
    const int join_target = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m - 1)));
    triangle.rows.push_back(extend_fragmentation_row(triangle.rows[m - 2], threshold, join_target));
  }
  return triangle;
}

RecordChainSampler::RecordChainSampler(const Alpha& alpha, int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RecordChainSampler: n must be >= 1");
  const StirlingTable table(alpha, std::max(n, 2));
  for (int m = 2; m <= n; ++m) thresholds_.push_back(threshold_law(table, m));
}

std::vector<RecordVector> RecordChainSampler::sample(SplitMix64& rng) const {
  std::vector<RecordVector> chain{RecordVector(1, 1)};
  for (int m = 2; m <= n_; ++m) {
    const int threshold = 1 + rng.pick(thresholds_[m - 2].probs);
    std::vector<RecordVector> next;
    next.reserve(m);
    for (int k = 1; k <= m; ++k) {
      next.push_back(k >= threshold
                         ? RecordVector(m, chain[k - 2].bits | (std::uint64_t{1} << (m - 1)))
                         : RecordVector(m, chain[k - 1].bits));
    }
    chain = std::move(next);
  }
  return chain;
}

FragmentationPath sample_fragmentation_crp(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return CrpFragmentationSampler(n).sample(rng);
}

PartitionTriangle sample_fragmentation_recursive(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return RecursiveFragmentationSampler(n).sample(rng);
}

std::vector<RecordVector> sample_record_chain(const Alpha& alpha, int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return RecordChainSampler(alpha, n).sample(rng);
}

}  // namespace gibbsfrag
