// Acceptance suite: every release criterion as one pass/fail line, with the
// runtime budget each criterion must meet printed alongside.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "gibbsfrag/coupling.hpp"
#include "gibbsfrag/crp.hpp"
#include "gibbsfrag/lattice.hpp"
#include "gibbsfrag/records.hpp"
#include "gibbsfrag/stats.hpp"
#include "gibbsfrag/verify.hpp"

using namespace gibbsfrag;

namespace {

Rat q(const char* text) { return parse_rational(text); }

std::vector<Rat> record_probs(int n) {
  std::vector<Rat> p;
  for (int i = 1; i <= n; ++i) p.emplace_back(1, i);
  return p;
}

// ---- criterion bodies: return "" on pass, a short reason on failure ----

std::string conditioned_masses_exact() {
  const auto layer2 = conditional_bernoulli(record_probs(4), 2);
  const auto layer3 = conditional_bernoulli(record_probs(4), 3);
  if (layer2.probs != std::vector<Rat>{q("6/11"), q("3/11"), q("2/11")}) {
    return "k=2 masses differ from 6/11, 3/11, 2/11";
  }
  if (layer3.probs != std::vector<Rat>{q("3/6"), q("2/6"), q("1/6")}) {
    return "k=3 masses differ from 3/6, 2/6, 1/6";
  }
  return "";
}

std::string extreme_couplings_exact() {
  const auto lower = record_law(Alpha::zero(), 4, 2);
  const auto upper = record_law(Alpha::zero(), 4, 3);
  const auto graph = build_cover_graph(lower, upper);
  const auto maxed = extreme_coupling(lower, upper, graph, 0, ExtremeDirection::max);
  if (maxed.joint !=
      std::vector<Rat>{q("26/66"), q("10/66"), q("7/66"), q("11/66"), q("12/66"), q("0")}) {
    return "max solution differs from 26/66, 10/66, 7/66, 11/66, 12/66, 0";
  }
  const auto mined = extreme_coupling(lower, upper, graph, 0, ExtremeDirection::min);
  if (mined.joint !=
      std::vector<Rat>{q("15/66"), q("21/66"), q("18/66"), q("0"), q("1/66"), q("11/66")}) {
    return "min solution differs from 15/66, 21/66, 18/66, 0, 1/66, 11/66";
  }
  return "";
}

std::string records_feasible_uniform() {
  const StirlingTable table(Alpha::zero(), 12);
  for (int n = 2; n <= 12; ++n) {
    auto lower = record_law(table, n, 1);
    for (int k = 1; k < n; ++k) {
      auto upper = record_law(table, n, k + 1);
      const auto graph = build_cover_graph(lower, upper);
      auto result = strassen_feasible(lower, upper, graph);
      if (!std::holds_alternative<MonotoneCoupling<RecordVector>>(result)) {
        return "infeasible at n=" + std::to_string(n) + ", k=" + std::to_string(k);
      }
      std::get<MonotoneCoupling<RecordVector>>(result).validate();  // marginals + cover support
      lower = std::move(upper);
    }
  }
  return "";
}

std::string records_feasible_grid_and_chains() {
  for (const Alpha& alpha : verify::default_alpha_grid()) {
    const StirlingTable table(alpha, 10);
    for (int n = 2; n <= 10; ++n) {
      auto lower = record_law(table, n, 1);
      for (int k = 1; k < n; ++k) {
        auto upper = record_law(table, n, k + 1);
        const auto graph = build_cover_graph(lower, upper);
        auto result = strassen_feasible(lower, upper, graph);
        if (!std::holds_alternative<MonotoneCoupling<RecordVector>>(result)) {
          return "infeasible at alpha=" + alpha.str() + ", n=" + std::to_string(n) +
                 ", k=" + std::to_string(k);
        }
        std::get<MonotoneCoupling<RecordVector>>(result).validate();
        lower = std::move(upper);
      }
    }
  }
  // chain-sampler marginals against record_law, 1e5 samples per alpha
  const int n = 6;
  const long samples = 100000;
  std::uint64_t seed = 401;
  for (const Alpha& alpha : verify::default_alpha_grid()) {
    const RecordChainSampler sampler(alpha, n);
    std::vector<LayerDistribution<RecordVector>> laws;
    for (int k = 1; k <= n; ++k) laws.push_back(record_law(alpha, n, k));
    std::vector<std::vector<long>> counts(n);
    for (int k = 1; k <= n; ++k) counts[k - 1].assign(laws[k - 1].size(), 0);
    SplitMix64 rng(seed++);
    for (long s = 0; s < samples; ++s) {
      const auto chain = sampler.sample(rng);
      for (int k = 1; k <= n; ++k) {
        const int i = laws[k - 1].index_of(chain[k - 1]);
        if (i < 0) return "sampled state outside record_law support";
        ++counts[k - 1][i];
      }
    }
    for (int k = 2; k < n; ++k) {
      const auto test = chi_square_test(counts[k - 1], laws[k - 1].probs);
      if (test.p_value <= 0.001) {
        std::ostringstream reason;
        reason << "chi-square p=" << test.p_value << " at alpha=" << alpha.str() << ", k=" << k;
        return reason.str();
      }
    }
  }
  return "";
}

std::string oracle_equivalence() {
  verify::Options opt;
  opt.max_n = 9;
  auto result = verify::record_law_against_oracle(opt);
  if (!result.passed) return result.detail;
  opt.max_n = 10;
  result = verify::bell_against_enumeration(opt);
  if (!result.passed) return result.detail;
  return "";
}

std::string split_property_full() {
  verify::Options opt;
  opt.max_n = 12;  // exhaustive up to 7 inside, randomized at 12
  opt.random_cases = 100000;
  opt.seed = 20240601;
  const auto result = verify::split_property(opt);
  return result.passed ? "" : result.detail;
}

std::string sampler_marginals() {
  const long samples = 100000;
  const auto weights = WeightSystem(Alpha::zero()).weights(6);
  for (int n = 2; n <= 6; ++n) {
    std::vector<LayerDistribution<SetPartition>> laws;
    for (int k = 1; k <= n; ++k) laws.push_back(gibbs_partition_law(weights, n, k));

    const CrpFragmentationSampler crp_sampler(n);
    const RecursiveFragmentationSampler rec_sampler(n);
    for (int which = 0; which < 2; ++which) {
      std::vector<std::vector<long>> counts(n);
      for (int k = 1; k <= n; ++k) counts[k - 1].assign(laws[k - 1].size(), 0);
      SplitMix64 rng(7000 + 10 * n + which);
      for (long s = 0; s < samples; ++s) {
        const FragmentationPath path =
            which == 0 ? crp_sampler.sample(rng) : rec_sampler.sample(rng).rows[n - 1];
        for (int k = 1; k <= n; ++k) {
          const int i = laws[k - 1].index_of(path.partitions[k - 1]);
          if (i < 0) return "sampled partition outside the conditioned law";
          ++counts[k - 1][i];
        }
      }
      for (int k = 2; k < n; ++k) {
        const auto test = chi_square_test(counts[k - 1], laws[k - 1].probs);
        if (test.p_value <= 0.001) {
          std::ostringstream reason;
          reason << (which == 0 ? "restaurant" : "recursive") << " sampler: chi-square p="
                 << test.p_value << " at n=" << n << ", k=" << k;
          return reason.str();
        }
      }
    }
  }
  return "";
}

std::string inequalities_exact() {
  for (const Alpha& alpha : verify::default_alpha_grid()) {
    const StirlingTable table(alpha, 30);
    if (const auto bad = verify::log_concavity_violation(alpha, table.rows())) {
      return "log-concavity fails at alpha=" + alpha.str() + ", n=" + std::to_string(bad->first) +
             ", k=" + std::to_string(bad->second);
    }
    for (int n = 2; n <= 30; ++n) {
      Rat prev(-1);
      for (int k = 1; k <= n; ++k) {
        const Rat ratio = p_record_last(table, n, k);
        if (ratio < prev) {
          return "last-record ratio decreases at alpha=" + alpha.str() +
                 ", n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
        prev = ratio;
      }
    }
  }
  verify::Options opt;
  opt.max_n = 15;
  opt.random_cases = 1000;
  opt.seed = 987654;
  const auto result = verify::poisson_binomial_log_concavity(opt);
  return result.passed ? "" : result.detail;
}

std::string explorer_unit_weights() {
  // the n=20 scale is out of reach by design; this runs the same machinery
  // at desk scale and verifies every feasible level's coupling
  for (int n = 2; n <= 7; ++n) {
    const auto report = partition_strassen_explore(std::vector<Rat>(n, Rat(1)), n);
    if (static_cast<int>(report.levels.size()) != n - 1) {
      return "missing level reports at n=" + std::to_string(n);
    }
    for (const auto& level : report.levels) {
      if (!level.feasible) {
        if (!level.certificate || !(level.certificate->lhs > level.certificate->rhs)) {
          return "non-strict certificate at n=" + std::to_string(n) +
                 ", k=" + std::to_string(level.k);
        }
      }
      // feasible levels were marginal-verified inside the explorer
    }
  }
  return "";
}

struct Criterion {
  int id;
  std::string label;
  double budget_ms;
  std::function<std::string()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "n=4 conditioned record masses, exact", 1.0, conditioned_masses_exact},
      {2, "n=4 extreme couplings, exact", 10.0, extreme_couplings_exact},
      {3, "uniform-case record layers feasible to n=12", 60e3, records_feasible_uniform},
      {4, "alpha-grid layers feasible to n=10, chain marginals", 300e3,
       records_feasible_grid_and_chains},
      {5, "record law and Bell polynomial against enumeration", 300e3, oracle_equivalence},
      {6, "split property exhaustive to n=7, randomized at n=12", 300e3, split_property_full},
      {7, "both sampler partition marginals to n=6", 300e3, sampler_marginals},
      {8, "log-concavity and ratio monotonicity inequalities", 120e3, inequalities_exact},
      {9, "unit-weight partition explorer to n=7", 300e3, explorer_unit_weights},
  };

  bool all_passed = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = criterion.body();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (reason.empty() && elapsed_ms >= criterion.budget_ms) {
      std::ostringstream over;
      over << "over budget: " << elapsed_ms << " ms >= " << criterion.budget_ms << " ms";
      reason = over.str();
    }
    const bool passed = reason.empty();
    all_passed = all_passed && passed;
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
              << criterion.label << " [" << elapsed_ms << " ms]";
    if (!passed) std::cout << " -- " << reason;
    std::cout << "\n";
  }
  return all_passed ? 0 : 1;
}
