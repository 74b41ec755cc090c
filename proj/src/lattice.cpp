#include "gibbsfrag/lattice.hpp"

#include <cstdlib>
#include <map>

#include "gibbsfrag/coupling.hpp"

namespace gibbsfrag {

Int layer_state_guard() {
  if (const char* env = std::getenv("GIBBSFRAG_GUARD")) {
    try {
      Int guard(env);
      if (guard >= 1) return guard;
    } catch (const std::invalid_argument&) {
    }
    throw guard_error(std::string("GIBBSFRAG_GUARD is not a positive integer: ") + env);
  }
  return Int(5000000);
}

void check_layer_guard(const Int& states, const std::string& what) {
  const Int guard = layer_state_guard();
  if (states > guard) {
    throw guard_error(what + " needs " + states.get_str() + " states, guard allows " +
                      guard.get_str());
  }
}

LayerDistribution<SetPartition> gibbs_partition_law(const std::vector<Rat>& w, int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("gibbs_partition_law: need 1 <= k <= n");
  if (static_cast<int>(w.size()) < n) {
    throw std::invalid_argument("gibbs_partition_law: weight sequence too short");
  }
  for (int j = 0; j < n; ++j) {
    if (!(w[j] > 0)) throw std::invalid_argument("gibbs_partition_law: weights must be positive");
  }
  check_layer_guard(partition_count(n, k),
                    "gibbs_partition_law(" + std::to_string(n) + "," + std::to_string(k) + ")");

  LayerDistribution<SetPartition> layer;
  layer.level = k;
  Rat normalizer(0);
  for_each_rgs(n, k, [&](const std::vector<int>& rgs) {
    SetPartition p = SetPartition::of_rgs(rgs);
    Rat mass(1);
    for (const auto& block : p.blocks()) mass *= w[block.size() - 1];
    normalizer += mass;
    layer.states.push_back(std::move(p));
    layer.probs.push_back(std::move(mass));
  });
  for (Rat& mass : layer.probs) mass /= normalizer;
  layer.validate();
  return layer;
}

LayerDistribution<RecordVector> record_law_oracle(const std::vector<Rat>& w, int n, int k) {
  const auto partitions = gibbs_partition_law(w, n, k);
  std::map<RecordVector, Rat> pushforward;
  for (int i = 0; i < partitions.size(); ++i) {
    pushforward[record_set(partitions.states[i])] += partitions.probs[i];
  }
  LayerDistribution<RecordVector> layer;
  layer.level = k;
  for (auto& [state, mass] : pushforward) {
    layer.states.push_back(state);
    layer.probs.push_back(std::move(mass));
  }
  layer.validate();
  return layer;
}

bool ExploreReport::all_feasible() const {
  for (const auto& level : levels) {
    if (!level.feasible) return false;
  }
  return true;
}

ExploreReport partition_strassen_explore(const std::vector<Rat>& w, int n) {
  if (n < 2) throw std::invalid_argument("partition_strassen_explore: need n >= 2");
  ExploreReport report;
  report.n = n;
  report.w.assign(w.begin(), w.begin() + n);

  auto lower = gibbs_partition_law(w, n, 1);
  for (int k = 1; k < n; ++k) {
    auto upper = gibbs_partition_law(w, n, k + 1);
    const auto graph = build_cover_graph(lower, upper);
    LevelReport level;
    level.k = k;
    level.lower_states = lower.states.size();
    level.upper_states = upper.states.size();
    level.edge_count = graph.edges.size();

    auto result = strassen_feasible(lower, upper, graph);
    if (auto* coupling = std::get_if<MonotoneCoupling<SetPartition>>(&result)) {
      coupling->validate();
      level.feasible = true;
      for (const Rat& mass : coupling->joint) {
        if (mass > 0) ++level.coupling_support;
      }
    } else {
      const auto& cert = std::get<ViolationCertificate<SetPartition>>(result);
      LevelCertificate out;
      for (const auto& state : cert.subset_states) out.subset_rgs.push_back(state.rgs_string());
      out.lhs = cert.lhs;
      out.rhs = cert.rhs;
      level.certificate = std::move(out);
    }
    report.levels.push_back(std::move(level));
    lower = std::move(upper);
  }
  return report;
}

}  // namespace gibbsfrag
