#pragma once

#include <span>
#include <vector>

#include "zslab/game.hpp"

namespace zslab {

// One player's bookkeeping: cumulative payoff vector plus the step size.
struct LearnerState {
  std::vector<double> y;
  double eta = 0.0;

  int n() const { return static_cast<int>(y.size()); }
  void validate() const;  // throws std::invalid_argument on n < 2, eta <= 0, non-finite y
};

// Indices that receive positive (or boundary-zero) mass when maximizing
// y.x - ||x||^2/(2*eta) over the simplex: start from all indices and greedily
// drop the minimum-payoff one while its assigned mass would be negative.
// Ties pick the lowest index. The result always contains argmax(y) and is
// returned sorted ascending.
std::vector<int> support_set(std::span<const double> y, double eta);

// The maximizer itself: x_j = eta*(y_j - mean(y over S)) + 1/|S| on the
// support, 0 elsewhere. Output sums to 1 (within roundoff) and every
// component is >= 0, with dropped components exactly 0.
std::vector<double> gd_strategy(std::span<const double> y, double eta);

// Two-action specialization used in the simulation loop; identical arithmetic
// to gd_strategy for n = 2 (same mean subtraction, same drop rule), so results
// agree bitwise. Saturated outputs are exactly {0,1}.
Vec2 gd_strategy2(const Vec2& y, double eta);

}  // namespace zslab
