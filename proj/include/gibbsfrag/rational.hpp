#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gibbsfrag {

// Exact arithmetic carriers. mpq_class keeps values in canonical form
// (gcd-reduced, positive denominator) through all arithmetic operators;
// values built with the two-argument constructor must be canonical already
// (standard mpq contract) or go through parse_rational.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws
// std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

// Canonical string form: "p/q", or plain "p" when the denominator is 1.
// Round-trips through parse_rational.
std::string rat_str(const Rat& value);

double rat_double(const Rat& value);

// lcm of the denominators; 1 for an empty list.
Int common_denominator(const std::vector<Rat>& values);

inline const Rat& rat_zero() {
  static const Rat zero(0);
  return zero;
}

inline const Rat& rat_one() {
  static const Rat one(1);
  return one;
}

}  // namespace gibbsfrag
