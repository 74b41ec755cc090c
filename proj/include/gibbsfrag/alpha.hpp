#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gibbsfrag/rational.hpp"

namespace gibbsfrag {

// Weight-sequence parameter: a rational strictly below 1, or negative
// infinity (tagged, never a numeric sentinel). alpha = -inf means the
// block-size weights are identically 1.
class Alpha {
 public:
  static Alpha neg_inf() { return Alpha(std::nullopt); }
  static Alpha rational(Rat value);
  static Alpha zero() { return rational(Rat(0)); }

  // Accepts "-inf" (also "-infinity") or anything parse_rational takes.
  static Alpha parse(std::string_view text);

  bool finite() const { return value_.has_value(); }
  const Rat& value() const;  // requires finite()
  std::string str() const;

  bool operator==(const Alpha& other) const = default;

 private:
  explicit Alpha(std::optional<Rat> value) : value_(std::move(value)) {}
  std::optional<Rat> value_;
};

// (alpha, theta) weight system. theta enters only v-arrays and
// unconditioned laws; every conditioned law depends on alpha alone.
class WeightSystem {
 public:
  explicit WeightSystem(Alpha alpha, std::optional<Rat> theta = std::nullopt);

  const Alpha& alpha() const { return alpha_; }
  const std::optional<Rat>& theta() const { return theta_; }

  // w_j: product of (t - alpha) for t = 1..j-1; identically 1 at alpha = -inf.
  Rat weight(int j) const;
  std::vector<Rat> weights(int n) const;  // w_1..w_n

 private:
  Alpha alpha_;
  std::optional<Rat> theta_;
};

}  // namespace gibbsfrag
