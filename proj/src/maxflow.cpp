#include "gibbsfrag/maxflow.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace gibbsfrag {

IntegerMaxFlow::IntegerMaxFlow(int node_count)
    : adj_(node_count), level_(node_count), iter_(node_count) {}

int IntegerMaxFlow::add_edge(int from, int to, Int capacity) {
  if (capacity < 0) throw std::invalid_argument("max-flow: negative capacity");
  const int id = static_cast<int>(edge_pos_.size());
  adj_[from].push_back({to, static_cast<int>(adj_[to].size()), capacity});
  adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, Int(0)});
  edge_pos_.emplace_back(from, static_cast<int>(adj_[from].size()) - 1);
  edge_cap_.push_back(std::move(capacity));
  return id;
}

bool IntegerMaxFlow::bfs_levels(int source, int sink, int masked_edge) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  const auto masked = masked_edge >= 0 ? edge_pos_[masked_edge] : std::make_pair(-1, -1);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int a = 0; a < static_cast<int>(adj_[u].size()); ++a) {
      const Arc& arc = adj_[u][a];
      if (masked_edge >= 0) {
        if (u == masked.first && a == masked.second) continue;
        if (arc.to == masked.first && arc.twin == masked.second) continue;
      }
      if (arc.residual > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

Int IntegerMaxFlow::dfs_push(int node, int sink, Int limit, int masked_edge) {
  if (node == sink) return limit;
  const auto masked = masked_edge >= 0 ? edge_pos_[masked_edge] : std::make_pair(-1, -1);
  Int pushed(0);
  for (int& a = iter_[node]; a < static_cast<int>(adj_[node].size()); ++a) {
    Arc& arc = adj_[node][a];
    if (masked_edge >= 0) {
      if (node == masked.first && a == masked.second) continue;
      if (arc.to == masked.first && arc.twin == masked.second) continue;
    }
    if (arc.residual <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const Int room = limit - pushed;
    const Int got = dfs_push(arc.to, sink, arc.residual < room ? arc.residual : room, masked_edge);
    if (got > 0) {
      arc.residual -= got;
      adj_[arc.to][arc.twin].residual += got;
      pushed += got;
      if (pushed == limit) return pushed;
    }
  }
  level_[node] = -1;  // dead end for this phase
  return pushed;
}

Int IntegerMaxFlow::run(int source, int sink) { return run_masked(source, sink, -1, nullptr); }

Int IntegerMaxFlow::run_masked(int source, int sink, int masked_edge, const Int* limit) {
  Int total(0);
  while ((limit == nullptr || total < *limit) && bfs_levels(source, sink, masked_edge)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    // One dfs with the whole phase budget produces a blocking flow.
    Int room(0);
    for (const Arc& arc : adj_[source]) {
      if (arc.residual > 0) room += arc.residual;
    }
    if (limit != nullptr && *limit - total < room) room = *limit - total;
    const Int pushed = dfs_push(source, sink, room, masked_edge);
    if (pushed == 0) break;
    total += pushed;
  }
  return total;
}

Int IntegerMaxFlow::flow(int edge_id) const {
  const auto [node, arc] = edge_pos_[edge_id];
  return edge_cap_[edge_id] - adj_[node][arc].residual;
}

void IntegerMaxFlow::add_flow(int edge_id, const Int& amount) {
  const auto [node, arc] = edge_pos_[edge_id];
  Arc& fwd = adj_[node][arc];
  if (amount > fwd.residual) throw std::logic_error("max-flow: adjustment exceeds residual");
  fwd.residual -= amount;
  adj_[fwd.to][fwd.twin].residual += amount;
}

void IntegerMaxFlow::remove_flow(int edge_id, const Int& amount) {
  const auto [node, arc] = edge_pos_[edge_id];
  Arc& fwd = adj_[node][arc];
  Arc& rev = adj_[fwd.to][fwd.twin];
  if (amount > rev.residual) throw std::logic_error("max-flow: adjustment exceeds flow");
  fwd.residual += amount;
  rev.residual -= amount;
}

std::vector<char> IntegerMaxFlow::residual_reachable(int source) const {
  std::vector<char> seen(adj_.size(), 0);
  std::queue<int> queue;
  seen[source] = 1;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const Arc& arc : adj_[u]) {
      if (arc.residual > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        queue.push(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace gibbsfrag
