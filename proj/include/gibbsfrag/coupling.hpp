#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gibbsfrag/layer.hpp"
#include "gibbsfrag/rng.hpp"

namespace gibbsfrag {

// Adjacency between two adjacent layers under the cover relation, by state
// index. Edges are kept sorted by (lower, upper), i.e. in canonical state
// order on both sides.
struct CoverGraph {
  int lower_size = 0;
  int upper_size = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_index(int lower, int upper) const {
    const auto key = std::make_pair(lower, upper);
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return static_cast<int>(it - edges.begin());
  }

  std::vector<std::vector<int>> lower_adjacency() const {
    std::vector<std::vector<int>> adj(lower_size);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      adj[edges[e].first].push_back(e);
    }
    return adj;
  }
};

// Joint law on cover pairs with the two layers as exact marginals.
template <typename State>
struct MonotoneCoupling {
  LayerDistribution<State> lower;
  LayerDistribution<State> upper;
  CoverGraph graph;
  std::vector<Rat> joint;  // mass per graph edge

  const Rat& mass(int edge) const { return joint.at(edge); }

  void validate() const {
    if (joint.size() != graph.edges.size()) throw std::logic_error("coupling: joint size mismatch");
    std::vector<Rat> row(graph.lower_size, Rat(0));
    std::vector<Rat> col(graph.upper_size, Rat(0));
    for (std::size_t e = 0; e < joint.size(); ++e) {
      if (joint[e] < 0) throw std::logic_error("coupling: negative mass");
      const auto [lo, up] = graph.edges[e];
      if (joint[e] > 0 && !covers(lower.states[lo], upper.states[up])) {
        throw std::logic_error("coupling: mass on a non-cover pair");
      }
      row[lo] += joint[e];
      col[up] += joint[e];
    }
    for (int i = 0; i < graph.lower_size; ++i) {
      if (row[i] != lower.probs[i]) throw std::logic_error("coupling: lower marginal mismatch");
    }
    for (int j = 0; j < graph.upper_size; ++j) {
      if (col[j] != upper.probs[j]) throw std::logic_error("coupling: upper marginal mismatch");
    }
  }
};

// Witness that the marginal-domination condition fails: a subset C of lower
// states whose mass strictly exceeds the mass of its upper neighborhood.
template <typename State>
struct ViolationCertificate {
  std::vector<int> lower_subset;
  std::vector<State> subset_states;
  Rat lhs;  // mass of C in the lower layer
  Rat rhs;  // mass of N(C) in the upper layer
};

template <typename State>
using StrassenResult = std::variant<MonotoneCoupling<State>, ViolationCertificate<State>>;

class coupling_infeasible_error : public std::runtime_error {
 public:
  coupling_infeasible_error(std::string message, int level)
      : std::runtime_error(std::move(message)), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

enum class ExtremeDirection { max, min };

namespace detail {

struct TransportOutcome {
  bool feasible = false;
  std::vector<Rat> edge_mass;
  std::vector<int> violating_subset;
  Rat lhs;
  Rat rhs;
};

// Exact max-flow solve of the transportation instance; extreme_edge >= 0
// additionally pushes the mass on that edge to its max/min over the
// feasible polytope via residual augmentation between its endpoints.
TransportOutcome solve_transport(const std::vector<Rat>& lower, const std::vector<Rat>& upper,
                                 const std::vector<std::pair<int, int>>& edges, int extreme_edge,
                                 bool maximize);

}  // namespace detail

template <typename State>
CoverGraph build_cover_graph(const LayerDistribution<State>& lower,
                             const LayerDistribution<State>& upper) {
  if (upper.level != lower.level + 1) {
    throw std::invalid_argument("build_cover_graph: layers are not adjacent");
  }
  if (state_size(lower.states.front()) != state_size(upper.states.front())) {
    throw std::invalid_argument("build_cover_graph: ground sets differ");
  }
  CoverGraph graph;
  graph.lower_size = lower.size();
  graph.upper_size = upper.size();
  for (int i = 0; i < lower.size(); ++i) {
    for (int j = 0; j < upper.size(); ++j) {
      if (covers(lower.states[i], upper.states[j])) graph.edges.emplace_back(i, j);
    }
  }
  return graph;
}

template <typename State>
StrassenResult<State> strassen_feasible(const LayerDistribution<State>& lower,
                                        const LayerDistribution<State>& upper,
                                        const CoverGraph& graph) {
  auto outcome = detail::solve_transport(lower.probs, upper.probs, graph.edges, -1, false);
  if (outcome.feasible) {
    MonotoneCoupling<State> coupling{lower, upper, graph, std::move(outcome.edge_mass)};
    coupling.validate();
    return coupling;
  }
  ViolationCertificate<State> cert;
  cert.lower_subset = std::move(outcome.violating_subset);
  for (int i : cert.lower_subset) cert.subset_states.push_back(lower.states[i]);
  cert.lhs = std::move(outcome.lhs);
  cert.rhs = std::move(outcome.rhs);
  return cert;
}

template <typename State>
MonotoneCoupling<State> extreme_coupling(const LayerDistribution<State>& lower,
                                         const LayerDistribution<State>& upper,
                                         const CoverGraph& graph, int target_edge,
                                         ExtremeDirection direction) {
  if (target_edge < 0 || target_edge >= static_cast<int>(graph.edges.size())) {
    throw std::invalid_argument("extreme_coupling: target edge out of range");
  }
  auto outcome = detail::solve_transport(lower.probs, upper.probs, graph.edges, target_edge,
                                         direction == ExtremeDirection::max);
  if (!outcome.feasible) {
    throw coupling_infeasible_error("extreme_coupling: instance is infeasible", lower.level);
  }
  MonotoneCoupling<State> coupling{lower, upper, graph, std::move(outcome.edge_mass)};
  coupling.validate();
  return coupling;
}

// One coupling per adjacent pair of layers; throws coupling_infeasible_error
// naming the first infeasible level.
template <typename State>
std::vector<MonotoneCoupling<State>> chain_couplings(
    const std::vector<LayerDistribution<State>>& layers) {
  std::vector<MonotoneCoupling<State>> chain;
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    auto graph = build_cover_graph(layers[i], layers[i + 1]);
    auto result = strassen_feasible(layers[i], layers[i + 1], graph);
    if (auto* cert = std::get_if<ViolationCertificate<State>>(&result)) {
      throw coupling_infeasible_error(
          "chain_couplings: level " + std::to_string(layers[i].level) + " -> " +
              std::to_string(layers[i + 1].level) + " infeasible (" + rat_str(cert->lhs) + " > " +
              rat_str(cert->rhs) + " on a " + std::to_string(cert->lower_subset.size()) +
              "-state subset)",
          layers[i].level);
    }
    chain.push_back(std::get<MonotoneCoupling<State>>(std::move(result)));
  }
  return chain;
}

// Draws a successor of `current` from the conditional row of the coupling.
template <typename State>
const State& sample_next(const MonotoneCoupling<State>& coupling, const State& current,
                         SplitMix64& rng) {
  const int index = coupling.lower.index_of(current);
  if (index < 0 || coupling.lower.probs[index] == 0) {
    throw std::domain_error("sample_next: state outside the lower support");
  }
  std::vector<int> upper_of;
  std::vector<Rat> row;
  for (std::size_t e = 0; e < coupling.graph.edges.size(); ++e) {
    if (coupling.graph.edges[e].first == index) {
      upper_of.push_back(coupling.graph.edges[e].second);
      row.push_back(coupling.joint[e]);
    }
  }
  return coupling.upper.states[upper_of[rng.pick(row)]];
}

}  // namespace gibbsfrag
