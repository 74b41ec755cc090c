#include "gibbsfrag/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <stdexcept>

namespace gibbsfrag {

ChiSquareResult chi_square_test(const std::vector<long>& counts, const std::vector<Rat>& probs) {
  if (counts.size() != probs.size()) throw std::invalid_argument("chi_square_test: size mismatch");
  long total = 0;
  for (long c : counts) total += c;
  if (total <= 0) throw std::invalid_argument("chi_square_test: no observations");

  ChiSquareResult result;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (probs[i] == 0) {
      if (counts[i] != 0) {
        throw std::invalid_argument("chi_square_test: observation in a zero-probability cell");
      }
      continue;
    }
    const double expected = rat_double(probs[i]) * static_cast<double>(total);
    const double diff = static_cast<double>(counts[i]) - expected;
    result.statistic += diff * diff / expected;
    ++result.dof;
  }
  --result.dof;  // cells minus one
  if (result.dof <= 0) {
    result.p_value = 1.0;
    return result;
  }
  const boost::math::chi_squared dist(result.dof);
  result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  return result;
}

}  // namespace gibbsfrag
