#include "gibbsfrag/coupling.hpp"

#include "gibbsfrag/maxflow.hpp"

namespace gibbsfrag::detail {

namespace {

Int scaled_mass(const Rat& p, const Int& denom) {
  return Int(p.get_num() * (denom / p.get_den()));
}

}  // namespace

TransportOutcome solve_transport(const std::vector<Rat>& lower, const std::vector<Rat>& upper,
                                 const std::vector<std::pair<int, int>>& edges, int extreme_edge,
                                 bool maximize) {
  const int nl = static_cast<int>(lower.size());
  const int nu = static_cast<int>(upper.size());
  std::vector<Rat> all = lower;
  all.insert(all.end(), upper.begin(), upper.end());
  const Int denom = common_denominator(all);

  // nodes: 0 = source, 1..nl lower, nl+1..nl+nu upper, nl+nu+1 = sink
  const int source = 0;
  const int sink = nl + nu + 1;
  auto lower_node = [&](int i) { return 1 + i; };
  auto upper_node = [&](int j) { return 1 + nl + j; };

  IntegerMaxFlow net(nl + nu + 2);
  for (int i = 0; i < nl; ++i) net.add_edge(source, lower_node(i), scaled_mass(lower[i], denom));
  std::vector<int> cover_ids(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    // total flow is denom, so denom acts as an infinite capacity
    cover_ids[e] = net.add_edge(lower_node(edges[e].first), upper_node(edges[e].second), denom);
  }
  for (int j = 0; j < nu; ++j) net.add_edge(upper_node(j), sink, scaled_mass(upper[j], denom));

  const Int value = net.run(source, sink);
  TransportOutcome outcome;
  if (value != denom) {
    // min cut: C = residual-reachable lower states; the cut value equals
    // mass(not C) + mass(N(C)) < 1, so mass(C) > mass(N(C)) strictly.
    const auto reachable = net.residual_reachable(source);
    std::vector<char> in_subset(nl, 0);
    for (int i = 0; i < nl; ++i) {
      if (reachable[lower_node(i)]) {
        outcome.violating_subset.push_back(i);
        in_subset[i] = 1;
      }
    }
    std::vector<char> in_nbhd(nu, 0);
    for (const auto& [lo, up] : edges) {
      if (in_subset[lo]) in_nbhd[up] = 1;
    }
    outcome.lhs = 0;
    outcome.rhs = 0;
    for (int i : outcome.violating_subset) outcome.lhs += lower[i];
    for (int j = 0; j < nu; ++j) {
      if (in_nbhd[j]) outcome.rhs += upper[j];
    }
    return outcome;
  }

  if (extreme_edge >= 0) {
    const int id = cover_ids[extreme_edge];
    const auto [lo, up] = edges[extreme_edge];
    if (maximize) {
      // every unit routed upper -> lower around the edge closes a cycle
      // with one more unit on the edge itself
      const Int delta = net.run_masked(upper_node(up), lower_node(lo), id, nullptr);
      net.add_flow(id, delta);
    } else {
      const Int current = net.flow(id);
      if (current > 0) {
        const Int delta = net.run_masked(lower_node(lo), upper_node(up), id, &current);
        net.remove_flow(id, delta);
      }
    }
  }

  outcome.feasible = true;
  outcome.edge_mass.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    outcome.edge_mass[e] = Rat(net.flow(cover_ids[e])) / Rat(denom);
  }
  return outcome;
}

}  // namespace gibbsfrag::detail
