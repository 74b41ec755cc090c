#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gibbsfrag/layer.hpp"
#include "gibbsfrag/partition.hpp"
#include "gibbsfrag/records.hpp"

namespace gibbsfrag {

// Thrown when a layer would exceed the in-memory state guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-layer state budget: 5e6 by default, overridable through the
// GIBBSFRAG_GUARD environment variable.
Int layer_state_guard();
void check_layer_guard(const Int& states, const std::string& what);

// Gibbs(w) law on partitions of [n] with k blocks:
//   P(pi) = prod_j w_{|A_j|} / B_{n,k}(w).
// The normalizer is accumulated by enumeration; bell_polynomial must agree.
LayerDistribution<SetPartition> gibbs_partition_law(const std::vector<Rat>& w, int n, int k);

// Pushforward of gibbs_partition_law under record_set; ground truth for
// records::record_law.
LayerDistribution<RecordVector> record_law_oracle(const std::vector<Rat>& w, int n, int k);

struct LevelCertificate {
  std::vector<std::string> subset_rgs;  // violating lower states
  Rat lhs;
  Rat rhs;
};

struct LevelReport {
  int k = 0;  // lower level; pair is k -> k+1
  bool feasible = false;
  std::size_t lower_states = 0;
  std::size_t upper_states = 0;
  std::size_t edge_count = 0;
  std::size_t coupling_support = 0;             // positive-mass edges when feasible
  std::optional<LevelCertificate> certificate;  // when infeasible
};

struct ExploreReport {
  int n = 0;
  std::vector<Rat> w;
  std::vector<LevelReport> levels;
  bool all_feasible() const;
};

// Runs the Strassen feasibility solve on every adjacent pair of partition
// layers under the split cover relation. Returned couplings are verified
// against both marginals before being reported feasible.
ExploreReport partition_strassen_explore(const std::vector<Rat>& w, int n);

}  // namespace gibbsfrag
