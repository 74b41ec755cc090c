#include "gibbsfrag/serialize.hpp"

namespace gibbsfrag {

json rat_json(const Rat& value, bool with_float) {
  if (!with_float) return json(rat_str(value));
  return json{{"exact", rat_str(value)}, {"approx", rat_double(value)}};
}

json partition_json(const SetPartition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) blocks.push_back(block);
  return blocks;
}

json path_json(const FragmentationPath& path) {
  json partitions = json::array();
  for (const auto& p : path.partitions) partitions.push_back(partition_json(p));
  return json{{"schema", "gibbsfrag/path/1"}, {"n", path.n}, {"partitions", std::move(partitions)}};
}

json triangle_json(const PartitionTriangle& triangle) {
  json rows = json::array();
  for (const auto& row : triangle.rows) {
    json partitions = json::array();
    for (const auto& p : row.partitions) partitions.push_back(partition_json(p));
    rows.push_back(std::move(partitions));
  }
  return json{{"schema", "gibbsfrag/triangle/1"}, {"n", triangle.n}, {"rows", std::move(rows)}};
}

json chain_json(const std::vector<RecordVector>& chain) {
  json states = json::array();
  for (const auto& b : chain) states.push_back(b.bitstring());
  return json{{"schema", "gibbsfrag/chain/1"},
              {"n", chain.empty() ? 0 : chain.back().n},
              {"records", std::move(states)}};
}

json stirling_json(const StirlingTable& table, bool with_float) {
  json rows = json::array();
  for (int n = 1; n <= table.max_n(); ++n) {
    json row = json::array();
    for (int k = 1; k <= n; ++k) row.push_back(rat_json(table.at(n, k), with_float));
    rows.push_back(std::move(row));
  }
  return json{{"schema", "gibbsfrag/stirling/1"},
              {"alpha", table.alpha().str()},
              {"max_n", table.max_n()},
              {"rows", std::move(rows)}};
}

json explore_json(const ExploreReport& report, bool with_float) {
  json weights = json::array();
  for (const Rat& w : report.w) weights.push_back(rat_str(w));
  json levels = json::array();
  for (const auto& level : report.levels) {
    json entry{{"k", level.k},
               {"feasible", level.feasible},
               {"lower_states", level.lower_states},
               {"upper_states", level.upper_states},
               {"edge_count", level.edge_count},
               {"coupling_edge_count", level.coupling_support}};
    if (level.certificate) {
      entry["certificate"] = json{{"subset", level.certificate->subset_rgs},
                                  {"subset_mass", rat_json(level.certificate->lhs, with_float)},
                                  {"neighborhood_mass",
                                   rat_json(level.certificate->rhs, with_float)}};
    }
    levels.push_back(std::move(entry));
  }
  return json{{"schema", "gibbsfrag/explore/1"},
              {"n", report.n},
              {"w", std::move(weights)},
              {"levels", std::move(levels)}};
}

json cycles_json(const CrpTables& tables) {
  json cycles = json::array();
  for (const auto& cycle : tables.cycles) cycles.push_back(cycle);
  return json{{"schema", "gibbsfrag/cycles/1"},
              {"partition", partition_json(tables.partition)},
              {"cycles", std::move(cycles)}};
}

}  // namespace gibbsfrag
