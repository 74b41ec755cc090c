#include "gibbsfrag/rng.hpp"

#include <stdexcept>

namespace gibbsfrag {

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be >= 1");
  const std::uint64_t max64 = ~std::uint64_t{0};
  const std::uint64_t cutoff = max64 - max64 % bound;  // largest multiple of bound
  while (true) {
    const std::uint64_t r = next_u64();
    if (r < cutoff) return r % bound;
  }
}

Int SplitMix64::next_int_below(const Int& bound) {
  if (bound <= 0) throw std::invalid_argument("next_int_below: bound must be >= 1");
  if (mpz_fits_ulong_p(bound.get_mpz_t()) && bound.get_ui() <= ~std::uint64_t{0}) {
    return Int(static_cast<unsigned long>(next_below(bound.get_ui())));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  while (true) {
    Int r(0);
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t v = next_u64();
      Int word;
      mpz_import(word.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
      mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
      r += word;
    }
    // keep exactly `bits` bits so the rejection rate stays below 1/2
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
    if (r < bound) return r;
  }
}

int SplitMix64::pick(const std::vector<Rat>& probs) {
  if (probs.empty()) throw std::invalid_argument("pick: empty distribution");
  const Int denom = common_denominator(probs);
  std::vector<Int> cumulative(probs.size());
  Int total(0);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0) throw std::invalid_argument("pick: negative mass");
    total += Int(probs[i].get_num() * (denom / probs[i].get_den()));
    cumulative[i] = total;
  }
  if (total == 0) throw std::invalid_argument("pick: zero total mass");
  const Int draw = next_int_below(total);
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    if (draw < cumulative[i]) return static_cast<int>(i);
  }
  throw std::logic_error("pick: draw out of range");
}

Rat SplitMix64::random_probability(int max_den) {
  if (max_den < 1) throw std::invalid_argument("random_probability: max_den must be >= 1");
  const std::uint64_t den = 1 + next_below(static_cast<std::uint64_t>(max_den));
  const std::uint64_t num = 1 + next_below(den);
  Rat p(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  p.canonicalize();
  return p;
}

}  // namespace gibbsfrag
