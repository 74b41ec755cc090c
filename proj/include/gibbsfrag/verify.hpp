#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gibbsfrag/alpha.hpp"
#include "gibbsfrag/weights.hpp"

namespace gibbsfrag {
namespace verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long cases = 0;
  std::string detail;  // first counterexample, or a short summary
};

// alpha grid used everywhere a grid is unspecified.
std::vector<Alpha> default_alpha_grid();

struct Options {
  int max_n = 10;
  std::vector<Alpha> grid = default_alpha_grid();
  std::uint64_t seed = 20240101;
  int random_cases = 200;           // randomized suites (efron, poisson-binomial)
  std::vector<Rat> explore_w;      // strassen-partitions weights (empty = ones)
  int explore_n = 6;
};

// gamma_{n,k} S(n,k)^2 >= gamma_{n,k+1} S(n,k+1) S(n,k-1) over the grid.
SuiteResult stirling_log_concavity(const Options& opt);
// S(n-1,k-1)/S(n,k) nondecreasing in k over the grid.
SuiteResult lemma1_monotonicity(const Options& opt);
// u(i)^2 >= u(i-1)u(i+1) for random rational Bernoulli vectors.
SuiteResult poisson_binomial_log_concavity(const Options& opt);
// random unions of principal up-sets, all layers.
SuiteResult efron_monotonicity(const Options& opt);
// record_law equals the partition-enumeration pushforward.
SuiteResult record_law_against_oracle(const Options& opt);
// bell_polynomial equals the enumeration sum; Stirling entries match the
// Bell polynomial of their weight sequence.
SuiteResult bell_against_enumeration(const Options& opt);
// explicit (alpha, theta) arrays solve the backward recursion; the block
// count law matches the independent-Bernoulli route at (0, 1).
SuiteResult v_recursion_suite(const Options& opt);
// every adjacent record-layer pair on the grid is feasible, marginals exact.
SuiteResult strassen_records(const Options& opt);
// partition-layer explorer; feasible levels verified.
SuiteResult strassen_partitions(const Options& opt);
// exhaustive split property for small n plus randomized larger n.
SuiteResult split_property(const Options& opt);

// Every suite above, in a fixed order.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt);
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Options& opt,
                                    int jobs);

// First cell (n,k) violating the log-concavity inequality, if any; the
// table rows are taken as-is so corrupted tables are reported faithfully.
std::optional<std::pair<int, int>> log_concavity_violation(
    const Alpha& alpha, const std::vector<std::vector<Rat>>& rows);

}  // namespace verify
}  // namespace gibbsfrag
