#pragma once

#include <utility>
#include <vector>

#include "gibbsfrag/rational.hpp"

namespace gibbsfrag {

// Deterministic Dinic max-flow over exact integer capacities. Arcs are
// scanned in insertion order, so callers that add edges in canonical state
// order get reproducible flows. Capacities, flows and values are mpz.
class IntegerMaxFlow {
 public:
  explicit IntegerMaxFlow(int node_count);

  // Adds a directed edge and its zero-capacity residual twin.
  // Returns an edge id for flow queries.
  int add_edge(int from, int to, Int capacity);

  // Augments from `source` to `sink` until no path remains; returns the
  // flow added by this call. Incremental: may be called repeatedly.
  Int run(int source, int sink);

  // Like run(), but arcs of edge `masked_edge` (both directions) are
  // ignored, and at most `limit` units are pushed when limit != nullptr.
  Int run_masked(int source, int sink, int masked_edge, const Int* limit);

  Int flow(int edge_id) const;
  // Direct adjustments for flow rerouted around a masked edge.
  void add_flow(int edge_id, const Int& amount);
  void remove_flow(int edge_id, const Int& amount);

  // Nodes reachable from `source` in the residual graph.
  std::vector<char> residual_reachable(int source) const;

 private:
  struct Arc {
    int to;
    int twin;  // index of the reverse arc in adj_[to]
    Int residual;
  };

  bool bfs_levels(int source, int sink, int masked_edge);
  Int dfs_push(int node, int sink, Int limit, int masked_edge);

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<int, int>> edge_pos_;  // edge id -> (node, arc index)
  std::vector<Int> edge_cap_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace gibbsfrag
