#pragma once

#include <cstdint>
#include <vector>

#include "zslab/game.hpp"

namespace zslab {

// Forward-Euler integration of the payoff flow dy1/dt = A x2(y2),
// dy2/dt = -A^T x1(y1), with strategies recomputed every substep. At dt = 1
// the arithmetic is identical to the discrete simulator, so the sampled
// states match it bitwise; shrinking dt approaches the energy-conserving
// continuous flow, so the recorded drift shrinks with dt.
struct ContinuousRun {
  double dt = 1.0;
  double eta = 0.0;
  double lambda1 = 0.0, lambda2 = 0.0;
  std::vector<double> time;    // substep times 0, dt, 2dt, ...
  std::vector<double> y11, y21;
  std::vector<double> energy;  // total piecewise energy at each sample

  double drift() const { return energy.empty() ? 0.0 : energy.back() - energy.front(); }
};

// Integrates over [0, horizon] with substeps of length dt (0 < dt <= 1;
// horizon must be a whole multiple of dt within roundoff).
ContinuousRun integrate(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0,
                        double eta, double horizon, double dt);

}  // namespace zslab
