#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gibbsfrag/alpha.hpp"
#include "gibbsfrag/layer.hpp"
#include "gibbsfrag/weights.hpp"

namespace gibbsfrag {

// Binary vector (b_1,...,b_n) packed into a word, bit i-1 holding b_i.
// In every record-law context b_1 = 1 (element 1 is the minimum of its
// block); the generic Bernoulli operations below also handle vectors
// without that property. n is capped at the word width, asserted loudly.
struct RecordVector {
  int n = 0;
  std::uint64_t bits = 0;

  static constexpr int max_n = 64;

  RecordVector() = default;
  RecordVector(int n_, std::uint64_t bits_);
  static RecordVector from_bitstring(std::string_view text);  // "1100" = b_1..b_4

  bool get(int i) const { return (bits >> (i - 1)) & 1u; }  // 1-based
  int ones() const { return __builtin_popcountll(bits); }
  RecordVector with(int i) const { return RecordVector(n, bits | (std::uint64_t{1} << (i - 1))); }
  std::string bitstring() const;

  auto operator<=>(const RecordVector&) const = default;
};

// Cover relation: hi is lo with exactly one 0 flipped to 1.
bool covers(const RecordVector& lo, const RecordVector& hi);

inline int state_level(const RecordVector& b) { return b.ones(); }
inline int state_size(const RecordVector& b) { return b.n; }
std::string state_name(const RecordVector& b);

// Thrown when a computed CDF that must be nondecreasing is not; this would
// falsify the monotonicity the threshold construction relies on.
class monotonicity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact pmf of a sum of independent Bernoulli(p_i) variables, length n+1.
std::vector<Rat> poisson_binomial_pmf(const std::vector<Rat>& p);

// Law of (I_1,...,I_n) given sum = k. Support carries only states of
// positive mass. Throws std::domain_error if P(sum = k) = 0.
LayerDistribution<RecordVector> conditional_bernoulli(const std::vector<Rat>& p, int k);

// Law of the record vector of a Gibbs partition of [n] given k blocks:
//   P(b) = prod_{i=1}^{n-1} gamma_coeff(i, k_i(b))^{1 - b_{i+1}} / S_alpha(n,k)
// with k_i(b) the number of ones among b_1..b_i. States have b_1 = 1.
LayerDistribution<RecordVector> record_law(const StirlingTable& table, int n, int k);
LayerDistribution<RecordVector> record_law(const Alpha& alpha, int n, int k);

// P(B_n = 1 | K_n = k) = S_alpha(n-1,k-1) / S_alpha(n,k). Requires n >= 2.
Rat p_record_last(const StirlingTable& table, int n, int k);
Rat p_record_last(const Alpha& alpha, int n, int k);

// Threshold variable of the recursive construction: P(K <= k) equals
// p_record_last(n, k). Throws monotonicity_error if that CDF decreases.
KDistribution threshold_law(const StirlingTable& table, int n);
KDistribution threshold_law(const Alpha& alpha, int n);

// Upward-closed family of 0/1 vectors of fixed length.
struct UpSet {
  int n = 0;
  std::set<std::uint64_t> masks;

  static UpSet closure(int n, const std::vector<std::uint64_t>& generators);
  bool contains(std::uint64_t mask) const { return masks.count(mask) > 0; }
  bool is_upward_closed() const;
};

// Exact check of P(upset | sum = k) <= P(upset | sum = k+1) for independent
// Bernoulli(p_i). Rejects sets that are not upward closed.
bool efron_check(const std::vector<Rat>& p, const UpSet& upset, int k);

}  // namespace gibbsfrag
