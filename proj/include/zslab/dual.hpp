#pragma once

#include <span>
#include <utility>

#include "zslab/game.hpp"

namespace zslab {

// Rescaled dual coordinates: z_i = scale_i * y_i1 + 1/2 maps the fully mixed
// range of player i's first-action probability onto (0, 1). Assumes y_i lies
// on the player's invariant dual line (second coordinate = slope_i * first).
struct ZPoint {
  double z1 = 0.0;
  double z2 = 0.0;
};

struct DualTransform {
  double slope1 = 0.0;  // (c-d)/(a-b): direction of player 1's dual line
  double slope2 = 0.0;  // (b-d)/(a-c): direction of player 2's dual line
  double scale1 = 0.0;  // eta*(1-slope1)/2, positive for canonical games
  double scale2 = 0.0;
  double eta = 0.0;

  static DualTransform make(const PayoffMatrix2x2& m, double eta);

  double z1(double y11) const { return scale1 * y11 + 0.5; }
  double z2(double y21) const { return scale2 * y21 + 0.5; }
};

// Offsets lambda_i such that y_i - lambda_i*(1,1) satisfies the player's dual
// line constraint ([d-c, a-b].y1 = 0 and [d-b, a-c].y2 = 0).
std::pair<double, double> dual_offsets(const PayoffMatrix2x2& m, const Vec2& y1, const Vec2& y2);

// The offset-corrected initial vectors themselves. Strategies are unchanged by
// this correction (the update ignores all-ones shifts), so it only fixes the
// coordinate system for z and energy.
std::pair<Vec2, Vec2> project_initial(const PayoffMatrix2x2& m, const Vec2& y1_0, const Vec2& y2_0);

// z coordinates of on-line dual vectors given their first components.
ZPoint to_z(const PayoffMatrix2x2& m, double eta, double y11, double y21);

// First-action probabilities read straight off z: clamp to [0,1].
std::pair<double, double> strategy_from_z(const ZPoint& z);

// Value of the regularized best response: max_x y.x - ||x||^2/(2*eta) over the
// simplex. Piecewise quadratic in y; not convex across support changes.
double conjugate_energy(std::span<const double> y, double eta);
double conjugate_energy(const Vec2& y, double eta);

// Per-player energy in z coordinates, piecewise in z:
//   z <= 0:        alpha0*z - beta0     (alpha0 < 0)
//   0 <= z <= 1:   gamma*z^2 + alpha*z - beta   (gamma = 1/eta > 0)
//   z >= 1:        alpha1*z - beta1     (alpha1 > 0)
// Continuous at both breakpoints.
struct PlayerEnergyCoeffs {
  double alpha0 = 0.0, beta0 = 0.0;
  double alpha1 = 0.0, beta1 = 0.0;
  double gamma = 0.0, alpha = 0.0, beta = 0.0;

  double eval(double z) const {
    if (z <= 0.0) return alpha0 * z - beta0;
    if (z >= 1.0) return alpha1 * z - beta1;
    return (gamma * z + alpha) * z - beta;
  }
};

struct PiecewiseEnergy {
  PlayerEnergyCoeffs p1, p2;
};

PiecewiseEnergy energy_coefficients(const PayoffMatrix2x2& m, double eta);

// player is 1 or 2.
double piecewise_energy(const PiecewiseEnergy& pe, double z, int player);

inline double total_energy(const PiecewiseEnergy& pe, const ZPoint& z) {
  return pe.p1.eval(z.z1) + pe.p2.eval(z.z2);
}

}  // namespace zslab
