#include "gibbsfrag/weights.hpp"

#include <stdexcept>

namespace gibbsfrag {

Rat rising_factorial(const Rat& x, int m, const Rat& beta) {
  if (m < 0) throw std::invalid_argument("rising_factorial: m must be >= 0");
  Rat result(1);
  Rat term = x;
  for (int j = 1; j <= m; ++j) {
    result *= term;
    term += beta;
  }
  return result;
}

Rat gamma_coeff(int n, int k, const Alpha& alpha) {
  if (k < 1 || k > n) throw std::invalid_argument("gamma_coeff: need 1 <= k <= n");
  if (!alpha.finite()) return Rat(k);
  return Rat(n) - alpha.value() * Rat(k);
}

StirlingTable::StirlingTable(Alpha alpha, int max_n) : alpha_(std::move(alpha)), max_n_(max_n) {
  if (max_n < 1) throw std::invalid_argument("StirlingTable: max_n must be >= 1");
  rows_.resize(max_n);
  rows_[0] = {Rat(1)};
  for (int n = 1; n < max_n; ++n) {
    rows_[n].resize(n + 1);
    for (int k = 1; k <= n + 1; ++k) {
      Rat value = (k <= n) ? Rat(gamma_coeff(n, k, alpha_) * rows_[n - 1][k - 1]) : Rat(0);
      if (k >= 2) value += rows_[n - 1][k - 2];
      rows_[n][k - 1] = value;
    }
  }
}

const Rat& StirlingTable::at(int n, int k) const {
  if (n < 1 || n > max_n_) throw std::invalid_argument("StirlingTable::at: n out of range");
  if (k < 1 || k > n) return rat_zero();
  return rows_[n - 1][k - 1];
}

StirlingTable stirling_table(const Alpha& alpha, int max_n) {
  return StirlingTable(alpha, max_n);
}

Rat bell_polynomial(int n, int k, const std::vector<Rat>& w) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("bell_polynomial: need 1 <= k <= n");
  if (static_cast<int>(w.size()) < n) {
    throw std::invalid_argument("bell_polynomial: weight sequence too short");
  }
  for (int j = 0; j < n; ++j) {
    if (w[j] < 0) throw std::invalid_argument("bell_polynomial: weights must be >= 0");
  }
  // binom[m][t] = C(m, t) for m <= n-1
  std::vector<std::vector<Int>> binom(n);
  for (int m = 0; m < n; ++m) {
    binom[m].resize(m + 1);
    binom[m][0] = binom[m][m] = 1;
    for (int t = 1; t < m; ++t) binom[m][t] = binom[m - 1][t - 1] + binom[m - 1][t];
  }
  // bell[m][j] = B_{m,j}, j <= min(m, k)
  std::vector<std::vector<Rat>> bell(n + 1);
  for (int m = 0; m <= n; ++m) bell[m].assign(std::min(m, k) + 1, Rat(0));
  bell[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = 1; j <= std::min(m, k); ++j) {
      Rat sum(0);
      for (int t = 1; t <= m - j + 1; ++t) {
        if (w[t - 1] == 0) continue;
        sum += Rat(binom[m - 1][t - 1]) * w[t - 1] * bell[m - t][j - 1];
      }
      bell[m][j] = sum;
    }
  }
  return bell[n][k];
}

std::vector<std::vector<Rat>> v_array(const Alpha& alpha, const Rat& theta, int max_n) {
  if (!alpha.finite()) throw std::invalid_argument("v_array: alpha must be rational");
  if (!(theta > -alpha.value())) {
    throw std::invalid_argument("v_array: need theta > -alpha");
  }
  if (max_n < 1) throw std::invalid_argument("v_array: max_n must be >= 1");
  std::vector<std::vector<Rat>> v(max_n);
  for (int n = 1; n <= max_n; ++n) {
    v[n - 1].resize(n);
    Rat denom = rising_factorial(theta + 1, n - 1, Rat(1));
    for (int k = 1; k <= n; ++k) {
      v[n - 1][k - 1] = rising_factorial(theta + alpha.value(), k - 1, alpha.value()) / denom;
    }
  }
  return v;
}

VRecursionCheck verify_v_recursion(const std::vector<std::vector<Rat>>& v, const Alpha& alpha,
                                   int max_n) {
  if (static_cast<int>(v.size()) < max_n) {
    throw std::invalid_argument("verify_v_recursion: array shorter than max_n");
  }
  if (v[0].empty() || v[0][0] != 1) return {false, 1, 1};
  for (int n = 1; n < max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      Rat expected = gamma_coeff(n, k, alpha) * v[n][k - 1] + v[n][k];
      if (v[n - 1][k - 1] != expected) return {false, n, k};
    }
  }
  return {};
}

void KDistribution::validate() const {
  if (static_cast<int>(probs.size()) != n) throw std::logic_error("KDistribution: size mismatch");
  Rat total(0);
  for (const Rat& p : probs) {
    if (p < 0) throw std::logic_error("KDistribution: negative mass");
    total += p;
  }
  if (total != 1) throw std::logic_error("KDistribution: masses sum to " + rat_str(total));
}

KDistribution block_count_distribution(const Alpha& alpha, const Rat& theta, int n) {
  const auto v = v_array(alpha, theta, n);
  const StirlingTable table(alpha, n);
  KDistribution dist;
  dist.n = n;
  dist.probs.resize(n);
  for (int k = 1; k <= n; ++k) {
    dist.probs[k - 1] = v[n - 1][k - 1] * table.at(n, k);
    if (dist.probs[k - 1] < 0) {
      throw std::domain_error("block_count_distribution: (alpha,theta) gives negative mass at k=" +
                              std::to_string(k));
    }
  }
  dist.validate();
  return dist;
}

}  // namespace gibbsfrag
