#pragma once

#include <json.hpp>
#include <string>

#include "gibbsfrag/coupling.hpp"
#include "gibbsfrag/crp.hpp"
#include "gibbsfrag/lattice.hpp"
#include "gibbsfrag/partition.hpp"
#include "gibbsfrag/records.hpp"
#include "gibbsfrag/weights.hpp"

namespace gibbsfrag {

using nlohmann::json;

// Machine-readable output always carries rationals as exact "p/q" strings;
// with_float adds a clearly-labeled approximate decimal next to them.

json rat_json(const Rat& value, bool with_float);
json partition_json(const SetPartition& p);  // blocks by minimum, elements ascending

template <typename State>
json layer_json(const LayerDistribution<State>& layer, bool with_float) {
  json states = json::array();
  for (int i = 0; i < layer.size(); ++i) {
    json entry{{"state", state_name(layer.states[i])}, {"prob", rat_str(layer.probs[i])}};
    if (with_float) entry["approx"] = rat_double(layer.probs[i]);
    states.push_back(std::move(entry));
  }
  return json{{"schema", "gibbsfrag/layer/1"}, {"k", layer.level}, {"states", std::move(states)}};
}

template <typename State>
json coupling_json(const MonotoneCoupling<State>& coupling, bool with_float) {
  json edges = json::array();
  for (std::size_t e = 0; e < coupling.graph.edges.size(); ++e) {
    const auto [lo, up] = coupling.graph.edges[e];
    json entry{{"lower", state_name(coupling.lower.states[lo])},
               {"upper", state_name(coupling.upper.states[up])},
               {"mass", rat_str(coupling.joint[e])}};
    if (with_float) entry["approx"] = rat_double(coupling.joint[e]);
    edges.push_back(std::move(entry));
  }
  return json{{"schema", "gibbsfrag/coupling/1"},
              {"status", "feasible"},
              {"lower", layer_json(coupling.lower, with_float)},
              {"upper", layer_json(coupling.upper, with_float)},
              {"edges", std::move(edges)}};
}

template <typename State>
json certificate_json(const ViolationCertificate<State>& cert, bool with_float) {
  json subset = json::array();
  for (const State& s : cert.subset_states) subset.push_back(state_name(s));
  json out{{"schema", "gibbsfrag/coupling/1"},
           {"status", "infeasible"},
           {"subset", std::move(subset)},
           {"subset_mass", rat_str(cert.lhs)},
           {"neighborhood_mass", rat_str(cert.rhs)}};
  if (with_float) {
    out["subset_mass_approx"] = rat_double(cert.lhs);
    out["neighborhood_mass_approx"] = rat_double(cert.rhs);
  }
  return out;
}

// Layered two-row digraph in the style of the coupling pictures: lower
// states on one rank, upper states below, every cover edge labeled with
// its joint mass.
template <typename State>
std::string coupling_dot(const MonotoneCoupling<State>& coupling) {
  std::string dot = "digraph coupling {\n  rankdir=TB;\n  node [shape=circle];\n";
  dot += "  { rank=same;";
  for (const State& s : coupling.lower.states) dot += " \"k" + state_name(s) + "\";";
  dot += " }\n  { rank=same;";
  for (const State& s : coupling.upper.states) dot += " \"K" + state_name(s) + "\";";
  dot += " }\n";
  for (int i = 0; i < coupling.lower.size(); ++i) {
    dot += "  \"k" + state_name(coupling.lower.states[i]) + "\" [label=\"" +
           state_name(coupling.lower.states[i]) + "\\n" + rat_str(coupling.lower.probs[i]) +
           "\"];\n";
  }
  for (int j = 0; j < coupling.upper.size(); ++j) {
    dot += "  \"K" + state_name(coupling.upper.states[j]) + "\" [label=\"" +
           state_name(coupling.upper.states[j]) + "\\n" + rat_str(coupling.upper.probs[j]) +
           "\"];\n";
  }
  for (std::size_t e = 0; e < coupling.graph.edges.size(); ++e) {
    const auto [lo, up] = coupling.graph.edges[e];
    dot += "  \"k" + state_name(coupling.lower.states[lo]) + "\" -> \"K" +
           state_name(coupling.upper.states[up]) + "\" [label=\"" + rat_str(coupling.joint[e]) +
           "\"];\n";
  }
  dot += "}\n";
  return dot;
}

json path_json(const FragmentationPath& path);
json triangle_json(const PartitionTriangle& triangle);
json chain_json(const std::vector<RecordVector>& chain);
json stirling_json(const StirlingTable& table, bool with_float);
json explore_json(const ExploreReport& report, bool with_float);
json cycles_json(const CrpTables& tables);

}  // namespace gibbsfrag
