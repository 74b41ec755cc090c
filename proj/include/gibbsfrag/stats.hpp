#pragma once

#include <vector>

#include "gibbsfrag/rational.hpp"

namespace gibbsfrag {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Pearson chi-square of observed counts against exact cell probabilities.
// Cells with zero probability must have zero counts (throws otherwise).
ChiSquareResult chi_square_test(const std::vector<long>& counts, const std::vector<Rat>& probs);

}  // namespace gibbsfrag
