#include "gibbsfrag/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gibbsfrag {

namespace {

bool looks_like_rational(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = 0;
  auto integer_part = [&]() {
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    return digits > 0;
  };
  if (!integer_part()) return false;
  if (i == text.size()) return true;
  if (text[i] != '/') return false;
  ++i;
  if (!integer_part()) return false;
  return i == text.size();
}

}  // namespace

Rat parse_rational(std::string_view text) {
  if (!looks_like_rational(text)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  Rat value;
  if (mpq_set_str(value.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string rat_str(const Rat& value) { return value.get_str(); }

double rat_double(const Rat& value) { return value.get_d(); }

Int common_denominator(const std::vector<Rat>& values) {
  Int denom(1);
  for (const Rat& v : values) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den_mpz_t());
  }
  return denom;
}

}  // namespace gibbsfrag
