#include "gibbsfrag/verify.hpp"

#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "gibbsfrag/coupling.hpp"
#include "gibbsfrag/crp.hpp"
#include "gibbsfrag/lattice.hpp"
#include "gibbsfrag/records.hpp"
#include "gibbsfrag/rng.hpp"

namespace gibbsfrag {
namespace verify {

std::vector<Alpha> default_alpha_grid() {
  return {Alpha::neg_inf(),           Alpha::rational(Rat(-2)), Alpha::rational(Rat(-1)),
          Alpha::rational(Rat(-1, 2)), Alpha::rational(Rat(0)),  Alpha::rational(Rat(1, 2))};
}

namespace {

std::string cell(const Alpha& alpha, int n, int k) {
  return "alpha=" + alpha.str() + ", n=" + std::to_string(n) + ", k=" + std::to_string(k);
}

}  // namespace

std::optional<std::pair<int, int>> log_concavity_violation(
    const Alpha& alpha, const std::vector<std::vector<Rat>>& rows) {
  for (int n = 1; n <= static_cast<int>(rows.size()); ++n) {
    for (int k = 1; k <= n; ++k) {
      const Rat lhs = gamma_coeff(n, k, alpha) * rows[n - 1][k - 1] * rows[n - 1][k - 1];
      Rat rhs(0);
      if (k + 1 <= n && k >= 2) {
        rhs = gamma_coeff(n, k + 1, alpha) * rows[n - 1][k] * rows[n - 1][k - 2];
      }
      if (lhs < rhs) return std::make_pair(n, k);
    }
  }
  return std::nullopt;
}

SuiteResult stirling_log_concavity(const Options& opt) {
  SuiteResult result{"stirling-logconcave", true, 0, ""};
  for (const Alpha& alpha : opt.grid) {
    const StirlingTable table(alpha, opt.max_n);
    if (auto bad = log_concavity_violation(alpha, table.rows())) {
      result.passed = false;
      result.detail = "violated at " + cell(alpha, bad->first, bad->second);
      return result;
    }
    result.cases += opt.max_n * (opt.max_n + 1) / 2;
  }
  return result;
}

SuiteResult lemma1_monotonicity(const Options& opt) {
  SuiteResult result{"lemma1", true, 0, ""};
  for (const Alpha& alpha : opt.grid) {
    const StirlingTable table(alpha, opt.max_n);
    for (int n = 2; n <= opt.max_n; ++n) {
      Rat prev(-1);
      for (int k = 1; k <= n; ++k) {
        const Rat ratio = p_record_last(table, n, k);
        if (ratio < prev) {
          result.passed = false;
          result.detail = "ratio decreases at " + cell(alpha, n, k);
          return result;
        }
        prev = ratio;
        ++result.cases;
      }
    }
  }
  return result;
}

SuiteResult poisson_binomial_log_concavity(const Options& opt) {
  SuiteResult result{"pb-logconcave", true, 0, ""};
  SplitMix64 rng(opt.seed);
  const int max_n = std::min(opt.max_n, 15);
  for (int c = 0; c < opt.random_cases; ++c) {
    const int n = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n)));
    std::vector<Rat> p;
    for (int i = 0; i < n; ++i) p.push_back(rng.random_probability(12));
    const auto pmf = poisson_binomial_pmf(p);
    for (int i = 1; i + 1 <= n; ++i) {
      if (pmf[i] * pmf[i] < pmf[i - 1] * pmf[i + 1]) {
        std::ostringstream what;
        what << "u(" << i << ")^2 < u(" << i - 1 << ")u(" << i + 1 << ") for p = (";
        for (int j = 0; j < n; ++j) what << (j ? "," : "") << rat_str(p[j]);
        what << ")";
        result.passed = false;
        result.detail = what.str();
        return result;
      }
      ++result.cases;
    }
  }
  return result;
}

SuiteResult efron_monotonicity(const Options& opt) {
  SuiteResult result{"efron", true, 0, ""};
  SplitMix64 rng(opt.seed + 1);
  const int max_n = std::min(opt.max_n, 12);
  for (int c = 0; c < opt.random_cases; ++c) {
    const int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 1)));
    std::vector<Rat> p;
    if (c % 2 == 0) {
      for (int i = 1; i <= n; ++i) p.emplace_back(1, i);  // the record probabilities
    } else {
      for (int i = 0; i < n; ++i) p.push_back(rng.random_probability(8));
    }
    const int generators = 1 + static_cast<int>(rng.next_below(3));
    std::vector<std::uint64_t> gens;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (int g = 0; g < generators; ++g) gens.push_back(rng.next_u64() & full);
    const UpSet upset = UpSet::closure(n, gens);

    const auto pmf = poisson_binomial_pmf(p);
    for (int k = 0; k + 1 <= n; ++k) {
      if (pmf[k] == 0 || pmf[k + 1] == 0) continue;
      if (!efron_check(p, upset, k)) {
        result.passed = false;
        result.detail = "P(upset | sum=k) decreased at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k);
        return result;
      }
      ++result.cases;
    }
  }
  return result;
}

SuiteResult record_law_against_oracle(const Options& opt) {
  SuiteResult result{"record-oracle", true, 0, ""};
  // conditional-Bernoulli route, cheap at every n
  {
    const StirlingTable table(Alpha::zero(), opt.max_n);
    std::vector<Rat> p;
    for (int n = 1; n <= opt.max_n; ++n) {
      p.emplace_back(1, n);
      for (int k = 1; k <= n; ++k) {
        if (record_law(table, n, k) != conditional_bernoulli(p, k)) {
          result.passed = false;
          result.detail = "record_law != conditional_bernoulli at " + cell(Alpha::zero(), n, k);
          return result;
        }
        ++result.cases;
      }
    }
  }
  // enumeration route over the grid
  const int oracle_n = std::min(opt.max_n, 9);
  for (const Alpha& alpha : opt.grid) {
    const StirlingTable table(alpha, std::max(oracle_n, 1));
    const auto w = WeightSystem(alpha).weights(oracle_n);
    for (int n = 1; n <= oracle_n; ++n) {
      for (int k = 1; k <= n; ++k) {
        if (record_law(table, n, k) != record_law_oracle(w, n, k)) {
          result.passed = false;
          result.detail = "record_law != enumeration oracle at " + cell(alpha, n, k);
          return result;
        }
        ++result.cases;
      }
    }
  }
  return result;
}

SuiteResult bell_against_enumeration(const Options& opt) {
  SuiteResult result{"bell-oracle", true, 0, ""};
  const int max_n = std::min(opt.max_n, 10);
  for (const Alpha& alpha : opt.grid) {
    const auto w = WeightSystem(alpha).weights(max_n);
    const StirlingTable table(alpha, max_n);
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= n; ++k) {
        Rat by_enumeration(0);
        for_each_rgs(n, k, [&](const std::vector<int>& rgs) {
          std::vector<int> sizes(k, 0);
          for (int label : rgs) ++sizes[label];
          Rat mass(1);
          for (int s : sizes) mass *= w[s - 1];
          by_enumeration += mass;
        });
        const Rat by_recursion = bell_polynomial(n, k, w);
        if (by_recursion != by_enumeration) {
          result.passed = false;
          result.detail = "bell recursion != enumeration at " + cell(alpha, n, k);
          return result;
        }
        if (by_recursion != table.at(n, k)) {
          result.passed = false;
          result.detail = "bell != Stirling entry at " + cell(alpha, n, k);
          return result;
        }
        ++result.cases;
      }
    }
  }
  return result;
}

SuiteResult v_recursion_suite(const Options& opt) {
  SuiteResult result{"v-recursion", true, 0, ""};
  const std::vector<std::pair<Rat, Rat>> params = {
      {Rat(0), Rat(1)},      {Rat(0), Rat(5, 2)}, {Rat(1, 2), Rat(1, 2)},
      {Rat(1, 2), Rat(2)},   {Rat(-1), Rat(2)},   {Rat(-2), Rat(4)},
      {Rat(1, 3), Rat(5, 3)}};
  for (const auto& [a, theta] : params) {
    const Alpha alpha = Alpha::rational(a);
    const auto v = v_array(alpha, theta, opt.max_n);
    const auto check = verify_v_recursion(v, alpha, opt.max_n);
    if (!check.ok) {
      result.passed = false;
      result.detail = "backward recursion fails for alpha=" + alpha.str() +
                      ", theta=" + rat_str(theta) + " at (" + std::to_string(check.n) + "," +
                      std::to_string(check.k) + ")";
      return result;
    }
    ++result.cases;
  }
  // block-count law via v against the independent-Bernoulli route at (0,1)
  std::vector<Rat> p;
  for (int n = 1; n <= opt.max_n; ++n) {
    p.emplace_back(1, n);
    const auto dist = block_count_distribution(Alpha::zero(), Rat(1), n);
    const auto pmf = poisson_binomial_pmf(p);
    for (int k = 1; k <= n; ++k) {
      if (dist.at(k) != pmf[k]) {
        result.passed = false;
        result.detail = "block-count law != Bernoulli route at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k);
        return result;
      }
      ++result.cases;
    }
  }
  return result;
}

SuiteResult strassen_records(const Options& opt) {
  SuiteResult result{"strassen-records", true, 0, ""};
  for (const Alpha& alpha : opt.grid) {
    const StirlingTable table(alpha, opt.max_n);
    for (int n = 2; n <= opt.max_n; ++n) {
      auto lower = record_law(table, n, 1);
      for (int k = 1; k < n; ++k) {
        auto upper = record_law(table, n, k + 1);
        const auto graph = build_cover_graph(lower, upper);
        auto outcome = strassen_feasible(lower, upper, graph);
        if (auto* cert = std::get_if<ViolationCertificate<RecordVector>>(&outcome)) {
          result.passed = false;
          result.detail = "infeasible at " + cell(alpha, n, k) + ": " + rat_str(cert->lhs) +
                          " > " + rat_str(cert->rhs);
          return result;
        }
        std::get<MonotoneCoupling<RecordVector>>(outcome).validate();
        ++result.cases;
        lower = std::move(upper);
      }
    }
  }
  return result;
}

SuiteResult strassen_partitions(const Options& opt) {
  SuiteResult result{"strassen-partitions", true, 0, ""};
  std::vector<Rat> w = opt.explore_w;
  if (w.empty()) w.assign(opt.explore_n, Rat(1));
  const auto report = partition_strassen_explore(w, opt.explore_n);
  std::ostringstream detail;
  detail << "n=" << report.n << ":";
  for (const auto& level : report.levels) {
    ++result.cases;
    detail << " k=" << level.k << (level.feasible ? " feasible" : " INFEASIBLE");
    if (level.certificate) {
      detail << " (" << rat_str(level.certificate->lhs) << " > " << rat_str(level.certificate->rhs)
             << " on " << level.certificate->subset_rgs.size() << " states)";
      if (!(level.certificate->lhs > level.certificate->rhs)) {
        result.passed = false;
        result.detail = "certificate at k=" + std::to_string(level.k) + " is not strict";
        return result;
      }
    }
  }
  result.detail = detail.str();
  return result;
}

SuiteResult split_property(const Options& opt) {
  SuiteResult result{"split-check", true, 0, ""};
  const int exhaustive_n = std::min(opt.max_n, 7);
  for (int n = 2; n <= exhaustive_n; ++n) {
    // odometer over all seating-choice vectors
    SeatingChoices seats;
    seats.n = n;
    seats.choices.assign(n - 1, 1);
    while (true) {
      const std::uint64_t states = std::uint64_t{1} << (n - 1);
      for (std::uint64_t sub = 0; sub < states; ++sub) {
        const RecordVector b(n, (sub << 1) | 1u);
        for (int flip = 2; flip <= n; ++flip) {
          if (b.get(flip)) continue;
          const RecordVector b_next = b.with(flip);
          if (!split_check(b, b_next, seats)) {
            result.passed = false;
            result.detail = "split fails at n=" + std::to_string(n) + ", b=" + b.bitstring() +
                            ", b'=" + b_next.bitstring();
            return result;
          }
          ++result.cases;
        }
      }
      int pos = 0;
      while (pos < n - 1 && seats.choices[pos] == pos + 1) {
        seats.choices[pos] = 1;
        ++pos;
      }
      if (pos == n - 1) break;
      ++seats.choices[pos];
    }
  }
  // randomized larger instances
  const int big_n = std::min(std::max(opt.max_n, 8), 12);
  SplitMix64 rng(opt.seed + 2);
  for (int c = 0; c < opt.random_cases; ++c) {
    const SeatingChoices seats = SeatingChoices::uniform(big_n, rng);
    const std::uint64_t sub = rng.next_u64() & ((std::uint64_t{1} << (big_n - 1)) - 1);
    RecordVector b(big_n, (sub << 1) | 1u);
    if (b.ones() == big_n) b = RecordVector(big_n, 1u);
    std::vector<int> zeros;
    for (int i = 2; i <= big_n; ++i) {
      if (!b.get(i)) zeros.push_back(i);
    }
    const int flip = zeros[rng.next_below(zeros.size())];
    if (!split_check(b, b.with(flip), seats)) {
      result.passed = false;
      result.detail = "split fails at n=" + std::to_string(big_n) + ", b=" + b.bitstring();
      return result;
    }
    ++result.cases;
  }
  return result;
}

std::vector<std::string> suite_names() {
  return {"stirling-logconcave", "lemma1",      "pb-logconcave",       "efron",
          "record-oracle",       "bell-oracle", "v-recursion",         "strassen-records",
          "strassen-partitions", "split-check"};
}

SuiteResult run_suite(const std::string& name, const Options& opt) {
  static const std::map<std::string, SuiteResult (*)(const Options&)> table = {
      {"stirling-logconcave", stirling_log_concavity},
      {"lemma1", lemma1_monotonicity},
      {"pb-logconcave", poisson_binomial_log_concavity},
      {"efron", efron_monotonicity},
      {"record-oracle", record_law_against_oracle},
      {"bell-oracle", bell_against_enumeration},
      {"v-recursion", v_recursion_suite},
      {"strassen-records", strassen_records},
      {"strassen-partitions", strassen_partitions},
      {"split-check", split_property},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(opt);
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Options& opt,
                                    int jobs) {
  std::vector<SuiteResult> results(names.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) results[i] = run_suite(names[i], opt);
    return results;
  }
  std::vector<std::future<void>> workers;
  std::atomic<std::size_t> next{0};
  const int count = std::min<int>(jobs, static_cast<int>(names.size()));
  for (int t = 0; t < count; ++t) {
    workers.push_back(std::async(std::launch::async, [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= names.size()) return;
        results[i] = run_suite(names[i], opt);
      }
    }));
  }
  for (auto& worker : workers) worker.get();
  return results;
}

}  // namespace verify
}  // namespace gibbsfrag
