#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gibbsfrag/rational.hpp"

namespace gibbsfrag {

// Exact law over the states of one layer (fixed record count or block
// count). States are kept distinct, in canonical ascending order, with
// strictly matching probability vector.
template <typename State>
struct LayerDistribution {
  int level = 0;
  std::vector<State> states;
  std::vector<Rat> probs;

  int size() const { return static_cast<int>(states.size()); }

  int index_of(const State& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || !(*it == s)) return -1;
    return static_cast<int>(it - states.begin());
  }

  void validate() const {
    if (states.size() != probs.size()) {
      throw std::logic_error("layer: states/probs size mismatch");
    }
    if (states.empty()) throw std::logic_error("layer: empty support");
    Rat total(0);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (i > 0 && !(states[i - 1] < states[i])) {
        throw std::logic_error("layer: states not in strictly ascending canonical order");
      }
      if (probs[i] < 0) throw std::logic_error("layer: negative mass");
      if (state_level(states[i]) != level) throw std::logic_error("layer: state level mismatch");
      total += probs[i];
    }
    if (total != 1) throw std::logic_error("layer: masses sum to " + rat_str(total));
  }

  bool operator==(const LayerDistribution&) const = default;
};

}  // namespace gibbsfrag
