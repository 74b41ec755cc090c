#include "gibbsfrag/records.hpp"

#include <algorithm>

namespace gibbsfrag {

namespace {

// Visits every k-subset of {0,..,width-1} as a bitmask, ascending.
// Requires 0 <= k <= width <= 63.
template <typename Fn>
void for_each_k_subset(int width, int k, Fn&& fn) {
  if (width < 0 || width > 63 || k < 0 || k > width) {
    throw std::invalid_argument("for_each_k_subset: bad (width, k)");
  }
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << width;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  while (mask < limit) {
    fn(mask);
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace

RecordVector::RecordVector(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
  if (n < 1 || n > max_n) {
    throw std::invalid_argument("RecordVector: n must be in [1, " + std::to_string(max_n) + "]");
  }
  if (n < 64 && (bits >> n) != 0) {
    throw std::invalid_argument("RecordVector: bits beyond position n");
  }
}

RecordVector RecordVector::from_bitstring(std::string_view text) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("RecordVector: bitstring must be over {0,1}");
    }
  }
  return RecordVector(static_cast<int>(text.size()), bits);
}

std::string RecordVector::bitstring() const {
  std::string s(n, '0');
  for (int i = 1; i <= n; ++i) {
    if (get(i)) s[i - 1] = '1';
  }
  return s;
}

bool covers(const RecordVector& lo, const RecordVector& hi) {
  return lo.n == hi.n && hi.ones() == lo.ones() + 1 && (lo.bits & ~hi.bits) == 0;
}

std::string state_name(const RecordVector& b) { return b.bitstring(); }

std::vector<Rat> poisson_binomial_pmf(const std::vector<Rat>& p) {
  for (const Rat& pi : p) {
    if (pi < 0 || pi > 1) throw std::invalid_argument("poisson_binomial_pmf: p_i outside [0,1]");
  }
  std::vector<Rat> pmf{Rat(1)};
  for (const Rat& pi : p) {
    std::vector<Rat> next(pmf.size() + 1, Rat(0));
    const Rat qi = Rat(1) - pi;
    for (std::size_t j = 0; j < pmf.size(); ++j) {
      if (pmf[j] == 0) continue;
      next[j] += pmf[j] * qi;
      next[j + 1] += pmf[j] * pi;
    }
    pmf = std::move(next);
  }
  return pmf;
}

LayerDistribution<RecordVector> conditional_bernoulli(const std::vector<Rat>& p, int k) {
  const int n = static_cast<int>(p.size());
  if (n < 1 || n > 63) throw std::invalid_argument("conditional_bernoulli: need 1 <= n <= 63");
  if (k < 0 || k > n) throw std::invalid_argument("conditional_bernoulli: k out of range");
  const auto pmf = poisson_binomial_pmf(p);
  if (pmf[k] == 0) {
    throw std::domain_error("conditional_bernoulli: conditioning on zero-probability event");
  }

  LayerDistribution<RecordVector> layer;
  layer.level = k;
  for_each_k_subset(n, k, [&](std::uint64_t mask) {
    Rat mass(1);
    for (int i = 0; i < n && mass != 0; ++i) {
      mass *= ((mask >> i) & 1u) ? p[i] : Rat(1) - p[i];
    }
    if (mass != 0) {
      layer.states.emplace_back(n, mask);
      layer.probs.push_back(mass / pmf[k]);
    }
  });
  layer.validate();
  return layer;
}

LayerDistribution<RecordVector> record_law(const StirlingTable& table, int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("record_law: need 1 <= k <= n");
  if (n > 63) throw std::invalid_argument("record_law: need n <= 63");
  if (table.max_n() < n) throw std::invalid_argument("record_law: table too small");
  const Alpha& alpha = table.alpha();

  LayerDistribution<RecordVector> layer;
  layer.level = k;
  const Rat& normalizer = table.at(n, k);

  // b_1 = 1 always; the remaining k-1 ones range over positions 2..n.
  for_each_k_subset(n - 1, k - 1, [&](std::uint64_t sub) {
    const std::uint64_t mask = (sub << 1) | 1u;
    Rat weight(1);
    int level = 1;
    for (int i = 1; i < n; ++i) {
      if ((mask >> i) & 1u) {
        ++level;
      } else {
        weight *= gamma_coeff(i, level, alpha);
      }
    }
    layer.states.emplace_back(n, mask);
    layer.probs.push_back(weight / normalizer);
  });
  layer.validate();
  return layer;
}

LayerDistribution<RecordVector> record_law(const Alpha& alpha, int n, int k) {
  return record_law(StirlingTable(alpha, n), n, k);
}

Rat p_record_last(const StirlingTable& table, int n, int k) {
  if (n < 2 || k < 1 || k > n) {
    throw std::invalid_argument("p_record_last: need 1 <= k <= n, n >= 2");
  }
  if (table.max_n() < n) throw std::invalid_argument("p_record_last: table too small");
  return table.at(n - 1, k - 1) / table.at(n, k);
}

Rat p_record_last(const Alpha& alpha, int n, int k) {
  return p_record_last(StirlingTable(alpha, n), n, k);
}

KDistribution threshold_law(const StirlingTable& table, int n) {
  if (n < 2) throw std::invalid_argument("threshold_law: need n >= 2");
  KDistribution dist;
  dist.n = n;
  dist.probs.resize(n);
  Rat prev(0);
  for (int k = 1; k <= n; ++k) {
    Rat cdf = p_record_last(table, n, k);
    if (cdf < prev) {
      throw monotonicity_error("threshold_law: CDF decreases at n=" + std::to_string(n) +
                               ", k=" + std::to_string(k));
    }
    dist.probs[k - 1] = cdf - prev;
    prev = std::move(cdf);
  }
  if (prev != 1) throw std::logic_error("threshold_law: CDF does not end at 1");
  dist.validate();
  return dist;
}

KDistribution threshold_law(const Alpha& alpha, int n) {
  return threshold_law(StirlingTable(alpha, n), n);
}

UpSet UpSet::closure(int n, const std::vector<std::uint64_t>& generators) {
  if (n < 1 || n > 63) throw std::invalid_argument("UpSet: need 1 <= n <= 63");
  UpSet up;
  up.n = n;
  std::vector<std::uint64_t> stack(generators);
  while (!stack.empty()) {
    const std::uint64_t m = stack.back();
    stack.pop_back();
    if (!up.masks.insert(m).second) continue;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t raised = m | (std::uint64_t{1} << i);
      if (raised != m) stack.push_back(raised);
    }
  }
  return up;
}

bool UpSet::is_upward_closed() const {
  for (const std::uint64_t m : masks) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t raised = m | (std::uint64_t{1} << i);
      if (raised != m && !contains(raised)) return false;
    }
  }
  return true;
}

bool efron_check(const std::vector<Rat>& p, const UpSet& upset, int k) {
  const int n = static_cast<int>(p.size());
  if (upset.n != n) throw std::invalid_argument("efron_check: length mismatch");
  if (!upset.is_upward_closed()) {
    throw std::invalid_argument("efron_check: set is not upward closed");
  }
  auto mass_in = [&](int level) {
    const auto layer = conditional_bernoulli(p, level);
    Rat total(0);
    for (int i = 0; i < layer.size(); ++i) {
      if (upset.contains(layer.states[i].bits)) total += layer.probs[i];
    }
    return total;
  };
  return mass_in(k) <= mass_in(k + 1);
}

}  // namespace gibbsfrag
