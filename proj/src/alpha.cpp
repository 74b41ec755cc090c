#include "gibbsfrag/alpha.hpp"

#include <stdexcept>

namespace gibbsfrag {

Alpha Alpha::rational(Rat value) {
  if (value >= 1) {
    throw std::invalid_argument("alpha must be < 1, got " + rat_str(value));
  }
  return Alpha(std::optional<Rat>(std::move(value)));
}

Alpha Alpha::parse(std::string_view text) {
  if (text == "-inf" || text == "-infinity") return neg_inf();
  return rational(parse_rational(text));
}

const Rat& Alpha::value() const {
  if (!value_) throw std::logic_error("alpha is -inf, no rational value");
  return *value_;
}

std::string Alpha::str() const { return value_ ? rat_str(*value_) : "-inf"; }

WeightSystem::WeightSystem(Alpha alpha, std::optional<Rat> theta)
    : alpha_(std::move(alpha)), theta_(std::move(theta)) {
  if (theta_ && alpha_.finite() && !(*theta_ > -alpha_.value())) {
    throw std::invalid_argument("theta must exceed -alpha: theta=" + rat_str(*theta_) +
                                ", alpha=" + alpha_.str());
  }
}

Rat WeightSystem::weight(int j) const {
  if (j < 1) throw std::invalid_argument("block size must be >= 1");
  Rat w(1);
  if (!alpha_.finite()) return w;
  for (int t = 1; t < j; ++t) w *= Rat(t) - alpha_.value();
  return w;
}

std::vector<Rat> WeightSystem::weights(int n) const {
  std::vector<Rat> w;
  w.reserve(n);
  Rat acc(1);
  w.push_back(acc);
  for (int j = 2; j <= n; ++j) {
    if (alpha_.finite()) acc *= Rat(j - 1) - alpha_.value();
    w.push_back(acc);
  }
  return w;
}

}  // namespace gibbsfrag
