#include "gibbsfrag/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gibbsfrag/coupling.hpp"
#include "gibbsfrag/crp.hpp"
#include "gibbsfrag/lattice.hpp"
#include "gibbsfrag/records.hpp"
#include "gibbsfrag/serialize.hpp"
#include "gibbsfrag/verify.hpp"

namespace gibbsfrag {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitGuard = 3;

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_rational(item));
  return values;
}

std::vector<Rat> named_weights(const std::string& name, int n) {
  if (name == "ones") return WeightSystem(Alpha::neg_inf()).weights(n);
  if (name == "cycles") return WeightSystem(Alpha::zero()).weights(n);        // (j-1)!
  if (name == "factorial") return WeightSystem(Alpha::rational(Rat(-1))).weights(n);  // j!
  throw std::invalid_argument("unknown weight name: " + name + " (use ones|cycles|factorial)");
}

// Writes either to `fallback` or to --output when set.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

// Edge spec: "lower:upper" with each side a bitstring, a numeric index, or
// a single letter (left side A,B,... from the first lower state; right side
// X,Y,Z from the first upper state, other letters from A).
int parse_edge_side(const std::string& side, const LayerDistribution<RecordVector>& layer,
                    bool is_upper) {
  if (side.empty()) throw std::invalid_argument("empty edge endpoint");
  int index = -1;
  if (side.size() == 1 && side[0] >= 'A' && side[0] <= 'Z') {
    index = (is_upper && side[0] >= 'X') ? side[0] - 'X' : side[0] - 'A';
  } else if (side.find_first_not_of("01") == std::string::npos &&
             side.size() == static_cast<std::size_t>(layer.states.front().n)) {
    index = layer.index_of(RecordVector::from_bitstring(side));
    if (index < 0) throw std::invalid_argument("state " + side + " is not in the layer");
  } else {
    try {
      index = std::stoi(side);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse edge endpoint: " + side);
    }
  }
  if (index < 0 || index >= layer.size()) {
    throw std::invalid_argument("edge endpoint out of range: " + side);
  }
  return index;
}

struct StirlingArgs {
  std::string alpha = "0";
  int n = 0;
  std::string format = "table";
  bool with_float = false;
  std::string output;
};

int cmd_stirling(const StirlingArgs& args, std::ostream& fallback) {
  OutputTarget target(args.output, fallback);
  const StirlingTable table(Alpha::parse(args.alpha), args.n);
  if (args.format == "json") {
    target.stream() << stirling_json(table, args.with_float).dump(2) << "\n";
  } else {
    for (int n = 1; n <= table.max_n(); ++n) {
      for (int k = 1; k <= n; ++k) target.stream() << (k > 1 ? " " : "") << rat_str(table.at(n, k));
      target.stream() << "\n";
    }
  }
  return kExitOk;
}

struct DistArgs {
  std::string alpha = "0";
  int n = 0;
  int k = 0;
  std::string bernoulli;  // comma-separated p_i; record law when empty
  std::string format = "json";
  bool with_float = false;
  std::string output;
};

int cmd_dist(const DistArgs& args, std::ostream& fallback) {
  OutputTarget target(args.output, fallback);
  const LayerDistribution<RecordVector> layer =
      args.bernoulli.empty() ? record_law(Alpha::parse(args.alpha), args.n, args.k)
                             : conditional_bernoulli(parse_rational_list(args.bernoulli), args.k);
  if (args.format == "table") {
    for (int i = 0; i < layer.size(); ++i) {
      target.stream() << layer.states[i].bitstring() << " " << rat_str(layer.probs[i]) << "\n";
    }
  } else {
    target.stream() << layer_json(layer, args.with_float).dump(2) << "\n";
  }
  return kExitOk;
}

struct CoupleArgs {
  std::string alpha = "0";
  std::string weights;  // partitions only: ones|cycles|factorial
  std::string states = "records";
  int n = 0;
  int k = 0;
  std::string extreme;  // "", "max", "min"
  std::string edge;
  std::string format = "json";
  bool with_float = false;
  std::string output;
};

template <typename State>
int couple_layers(const CoupleArgs& args, const LayerDistribution<State>& lower,
                  const LayerDistribution<State>& upper, int target_edge, std::ostream& os) {
  const auto graph = build_cover_graph(lower, upper);
  if (!args.extreme.empty()) {
    if (target_edge < 0) throw std::invalid_argument("--extreme requires --edge");
    const auto direction = args.extreme == "max" ? ExtremeDirection::max : ExtremeDirection::min;
    const auto coupling = extreme_coupling(lower, upper, graph, target_edge, direction);
    os << (args.format == "dot" ? coupling_dot(coupling)
                                : coupling_json(coupling, args.with_float).dump(2) + "\n");
    return kExitOk;
  }
  auto result = strassen_feasible(lower, upper, graph);
  if (auto* cert = std::get_if<ViolationCertificate<State>>(&result)) {
    os << certificate_json(*cert, args.with_float).dump(2) << "\n";
    return kExitOk;  // infeasible is a reported outcome, not an error
  }
  const auto& coupling = std::get<MonotoneCoupling<State>>(result);
  os << (args.format == "dot" ? coupling_dot(coupling)
                              : coupling_json(coupling, args.with_float).dump(2) + "\n");
  return kExitOk;
}

int cmd_couple(const CoupleArgs& args, std::ostream& fallback) {
  OutputTarget target(args.output, fallback);
  if (args.states == "partitions") {
    const auto w = args.weights.empty() ? WeightSystem(Alpha::parse(args.alpha)).weights(args.n)
                                        : named_weights(args.weights, args.n);
    const auto lower = gibbs_partition_law(w, args.n, args.k);
    const auto upper = gibbs_partition_law(w, args.n, args.k + 1);
    int target_edge = -1;
    if (!args.edge.empty()) throw std::invalid_argument("--edge supports --states records only");
    return couple_layers(args, lower, upper, target_edge, target.stream());
  }
  const StirlingTable table(Alpha::parse(args.alpha), args.n);
  const auto lower = record_law(table, args.n, args.k);
  const auto upper = record_law(table, args.n, args.k + 1);
  int target_edge = -1;
  if (!args.edge.empty()) {
    const auto colon = args.edge.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("--edge must look like A:X, 1100:1110 or 0:0");
    }
    const int lo = parse_edge_side(args.edge.substr(0, colon), lower, false);
    const int up = parse_edge_side(args.edge.substr(colon + 1), upper, true);
    const auto graph = build_cover_graph(lower, upper);
    target_edge = graph.edge_index(lo, up);
    if (target_edge < 0) {
      throw std::invalid_argument("--edge " + args.edge + " is not a cover edge");
    }
  }
  return couple_layers(args, lower, upper, target_edge, target.stream());
}

struct SampleArgs {
  std::string mode;
  std::string alpha = "0";
  int n = 0;
  long samples = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string coupling = "default";
  bool cycles = false;
  std::string output;
};

int cmd_sample(const SampleArgs& args, std::ostream& fallback) {
  OutputTarget target(args.output, fallback);
  std::ostream& os = target.stream();
  const Alpha alpha = Alpha::parse(args.alpha);
  const bool uniform_case = alpha == Alpha::zero();
  if (args.mode != "records" && !uniform_case) {
    throw std::invalid_argument(
        "partition-valued sampling (--mode " + args.mode +
        ") is only available at alpha = 0; no partition-level fragmentation exists for general "
        "alpha (the monotone coupling holds only at the record level), use --mode records");
  }
  SplitMix64 master(args.seed);
  if (args.mode == "crp") {
    CouplingChoice choice = CouplingChoice::flow_default;
    if (args.coupling == "extreme-max") choice = CouplingChoice::extreme_max_first;
    if (args.coupling == "extreme-min") choice = CouplingChoice::extreme_min_first;
    const CrpFragmentationSampler sampler(args.n, choice);
    for (long s = 0; s < args.samples; ++s) {
      SplitMix64 rng = master.split();
      const auto detail = sampler.sample_detail(rng);
      json line = path_json(detail.path);
      if (args.cycles) {
        json per_level = json::array();
        for (const auto& records : detail.chain) {
          per_level.push_back(cycles_json(crp_seating(records, detail.seats))["cycles"]);
        }
        line["cycles"] = std::move(per_level);
      }
      os << line.dump() << "\n";
    }
    return kExitOk;
  }
  if (args.mode == "recursive") {
    const RecursiveFragmentationSampler sampler(args.n);
    for (long s = 0; s < args.samples; ++s) {
      SplitMix64 rng = master.split();
      os << triangle_json(sampler.sample(rng)).dump() << "\n";
    }
    return kExitOk;
  }
  if (args.mode == "records") {
    const RecordChainSampler sampler(alpha, args.n);
    for (long s = 0; s < args.samples; ++s) {
      SplitMix64 rng = master.split();
      os << chain_json(sampler.sample(rng)).dump() << "\n";
    }
    return kExitOk;
  }
  throw std::invalid_argument("unknown mode: " + args.mode);
}

struct VerifyArgs {
  std::vector<std::string> suites;
  int max_n = 10;
  std::string grid;
  int cases = 200;
  std::uint64_t seed = 20240101;
  std::string weights = "ones";
  int explore_n = 6;
  int jobs = 1;
  std::string format = "text";
  std::string output;
};

int cmd_verify(const VerifyArgs& args, std::ostream& fallback) {
  OutputTarget target(args.output, fallback);
  std::ostream& os = target.stream();
  verify::Options options;
  options.max_n = args.max_n;
  options.seed = args.seed;
  options.random_cases = args.cases;
  options.explore_n = args.explore_n;
  options.explore_w = named_weights(args.weights, args.explore_n);
  if (!args.grid.empty()) {
    options.grid.clear();
    std::stringstream stream(args.grid);
    std::string item;
    while (std::getline(stream, item, ',')) options.grid.push_back(Alpha::parse(item));
  }
  const auto names = args.suites.empty() ? verify::suite_names() : args.suites;
  const auto results = verify::run_suites(names, options, args.jobs);

  bool all_passed = true;
  if (args.format == "json") {
    json report = json::array();
    for (const auto& result : results) {
      report.push_back(json{{"suite", result.name},
                            {"passed", result.passed},
                            {"cases", result.cases},
                            {"detail", result.detail}});
      all_passed = all_passed && result.passed;
    }
    os << json{{"schema", "gibbsfrag/verify/1"}, {"suites", std::move(report)}}.dump(2) << "\n";
  } else {
    for (const auto& result : results) {
      os << (result.passed ? "PASS " : "FAIL ") << result.name << " (" << result.cases
         << " cases)";
      if (!result.detail.empty()) os << " " << result.detail;
      os << "\n";
      all_passed = all_passed && result.passed;
    }
  }
  return all_passed ? kExitOk : kExitVerifyFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Gibbs fragmentation toolkit: conditioned partition laws, monotone "
               "couplings, and samplers"};
  app.require_subcommand(1);

  StirlingArgs stirling_args;
  auto* stirling_cmd = app.add_subcommand("stirling", "print the generalized Stirling triangle");
  stirling_cmd->add_option("--alpha", stirling_args.alpha, "alpha as p/q or -inf");
  stirling_cmd->add_option("--n", stirling_args.n, "rows to print")->required();
  stirling_cmd->add_option("--format", stirling_args.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  stirling_cmd->add_flag("--float", stirling_args.with_float, "add approximate decimals");
  stirling_cmd->add_option("--output,-o", stirling_args.output, "write to file");

  DistArgs dist_args;
  auto* dist_cmd = app.add_subcommand("dist", "conditioned record-vector law at one level");
  dist_cmd->add_option("--alpha", dist_args.alpha, "alpha as p/q or -inf");
  dist_cmd->add_option("--n", dist_args.n, "ground-set size")->required();
  dist_cmd->add_option("--k", dist_args.k, "record count")->required();
  dist_cmd->add_option("--p", dist_args.bernoulli,
                       "independent Bernoulli parameters p_1,p_2,... (overrides --alpha)");
  dist_cmd->add_option("--format", dist_args.format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  dist_cmd->add_flag("--float", dist_args.with_float, "add approximate decimals");
  dist_cmd->add_option("--output,-o", dist_args.output, "write to file");

  CoupleArgs couple_args;
  auto* couple_cmd = app.add_subcommand("couple", "monotone coupling of levels k and k+1");
  couple_cmd->add_option("--alpha", couple_args.alpha, "alpha as p/q or -inf");
  couple_cmd->add_option("--n", couple_args.n, "ground-set size")->required();
  couple_cmd->add_option("--k", couple_args.k, "lower level")->required();
  couple_cmd->add_option("--states", couple_args.states, "records|partitions")
      ->check(CLI::IsMember({"records", "partitions"}));
  couple_cmd->add_option("--w", couple_args.weights,
                         "partition weights by name: ones|cycles|factorial");
  couple_cmd->add_option("--extreme", couple_args.extreme, "push one edge to max|min")
      ->check(CLI::IsMember({"max", "min"}));
  couple_cmd->add_option("--edge", couple_args.edge,
                         "target edge, e.g. A:X, 1100:1110, or numeric i:j");
  couple_cmd->add_option("--format", couple_args.format, "json|dot")
      ->check(CLI::IsMember({"json", "dot"}));
  couple_cmd->add_flag("--float", couple_args.with_float, "add approximate decimals");
  couple_cmd->add_option("--output,-o", couple_args.output, "write to file");

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand("sample", "draw fragmentation paths or record chains");
  sample_cmd->add_option("--mode", sample_args.mode, "crp|recursive|records")
      ->required()
      ->check(CLI::IsMember({"crp", "recursive", "records"}));
  sample_cmd->add_option("--alpha", sample_args.alpha, "alpha (records mode only unless 0)");
  sample_cmd->add_option("--n", sample_args.n, "ground-set size")->required();
  sample_cmd->add_option("--samples", sample_args.samples, "number of samples");
  sample_cmd->add_option("--seed", sample_args.seed, "RNG seed (required)")->required();
  sample_cmd->add_option("--coupling", sample_args.coupling,
                         "crp mode chain couplings: default|extreme-max|extreme-min")
      ->check(CLI::IsMember({"default", "extreme-max", "extreme-min"}));
  sample_cmd->add_flag("--cycles", sample_args.cycles, "note the cycle view in crp output");
  sample_cmd->add_option("--output,-o", sample_args.output, "write to file");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the exact invariant suites");
  verify_cmd->add_option("--suite", verify_args.suites, "suites to run (default: all)");
  verify_cmd->add_option("--max-n", verify_args.max_n, "size bound for the suites");
  verify_cmd->add_option("--alpha-grid", verify_args.grid, "comma-separated alphas");
  verify_cmd->add_option("--cases", verify_args.cases, "randomized-suite case count");
  verify_cmd->add_option("--seed", verify_args.seed, "randomized-suite seed");
  verify_cmd->add_option("--w", verify_args.weights, "explorer weights: ones|cycles|factorial");
  verify_cmd->add_option("--explore-n,--n", verify_args.explore_n, "explorer ground-set size");
  verify_cmd->add_option("--jobs", verify_args.jobs, "run independent suites in parallel");
  verify_cmd->add_option("--format", verify_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--output,-o", verify_args.output, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stirling_cmd) return cmd_stirling(stirling_args, out);
    if (*dist_cmd) return cmd_dist(dist_args, out);
    if (*couple_cmd) return cmd_couple(couple_args, out);
    if (*sample_cmd) return cmd_sample(sample_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
  } catch (const guard_error& e) {
    err << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const monotonicity_error& e) {
    err << "verification: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}

}  // namespace gibbsfrag
