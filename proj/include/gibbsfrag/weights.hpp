#pragma once

#include <vector>

#include "gibbsfrag/alpha.hpp"
#include "gibbsfrag/rational.hpp"

namespace gibbsfrag {

// (x)_{m up beta} = prod_{j=1..m} (x + (j-1) beta); empty product is 1.
Rat rising_factorial(const Rat& x, int m, const Rat& beta);

// Recursion coefficient: n - alpha*k for finite alpha, k at alpha = -inf.
// Requires 1 <= k <= n.
Rat gamma_coeff(int n, int k, const Alpha& alpha);

// Triangle of generalized Stirling numbers S_alpha(n,k), 1 <= k <= n <= max_n,
// built bottom-up from S(1,1) = 1 with
//   S(n+1,k) = gamma_coeff(n,k) * S(n,k) + S(n,k-1).
// at() returns 0 outside the triangle columns (k < 1 or k > n).
class StirlingTable {
 public:
  StirlingTable(Alpha alpha, int max_n);

  const Rat& at(int n, int k) const;
  int max_n() const { return max_n_; }
  const Alpha& alpha() const { return alpha_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  Alpha alpha_;
  int max_n_;
  std::vector<std::vector<Rat>> rows_;  // rows_[n-1][k-1]
};

StirlingTable stirling_table(const Alpha& alpha, int max_n);

// Partial Bell polynomial B_{n,k}(w) over w_1..w_n, by conditioning on the
// block containing element 1:
//   B_{n,k} = sum_{j=1}^{n-k+1} C(n-1, j-1) w_j B_{n-j,k-1}.
// The lattice enumeration is the test oracle for this recursion.
Rat bell_polynomial(int n, int k, const std::vector<Rat>& w);

// Explicit (alpha, theta) array
//   v_{n,k} = (theta+alpha)_{(k-1) up alpha} / (theta+1)_{(n-1) up 1},
// returned as result[n-1][k-1] for 1 <= k <= n <= max_n.
// Requires finite alpha and theta > -alpha.
std::vector<std::vector<Rat>> v_array(const Alpha& alpha, const Rat& theta, int max_n);

struct VRecursionCheck {
  bool ok = true;
  int n = 0;  // first failing cell when !ok
  int k = 0;
};

// Checks v_{1,1} = 1 and v_{n,k} = gamma_coeff(n,k) v_{n+1,k} + v_{n+1,k+1}
// exactly for all 1 <= k <= n < max_n.
VRecursionCheck verify_v_recursion(const std::vector<std::vector<Rat>>& v, const Alpha& alpha,
                                   int max_n);

// Exact pmf over k = 1..n.
struct KDistribution {
  int n = 0;
  std::vector<Rat> probs;  // probs[k-1] = P(K = k)

  const Rat& at(int k) const { return probs.at(k - 1); }
  void validate() const;  // nonnegative, sums to 1
};

// P(K_n = k) = v_{n,k} S_alpha(n,k). Requires finite alpha, theta > -alpha,
// and a parameter pair for which all masses are nonnegative.
KDistribution block_count_distribution(const Alpha& alpha, const Rat& theta, int n);

}  // namespace gibbsfrag
