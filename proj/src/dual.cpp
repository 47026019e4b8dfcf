#include "zslab/dual.hpp"

#include <cmath>
#include <stdexcept>

#include "zslab/projection.hpp"

namespace zslab {

DualTransform DualTransform::make(const PayoffMatrix2x2& m, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("DualTransform: eta must be positive");
  DualTransform t;
  t.eta = eta;
  t.slope1 = (m.c - m.d) / (m.a - m.b);
  t.slope2 = (m.b - m.d) / (m.a - m.c);
  t.scale1 = eta * (1.0 - t.slope1) / 2.0;
  t.scale2 = eta * (1.0 - t.slope2) / 2.0;
  return t;
}

std::pair<double, double> dual_offsets(const PayoffMatrix2x2& m, const Vec2& y1, const Vec2& y2) {
  const double denom = m.denom();
  if (denom == 0.0) throw DegenerateGameError("dual_offsets: a + d - b - c is zero");
  const double l1 = ((m.d - m.c) * y1[0] + (m.a - m.b) * y1[1]) / denom;
  const double l2 = ((m.d - m.b) * y2[0] + (m.a - m.c) * y2[1]) / denom;
  return {l1, l2};
}

std::pair<Vec2, Vec2> project_initial(const PayoffMatrix2x2& m, const Vec2& y1_0, const Vec2& y2_0) {
  const auto [l1, l2] = dual_offsets(m, y1_0, y2_0);
  return {Vec2{y1_0[0] - l1, y1_0[1] - l1}, Vec2{y2_0[0] - l2, y2_0[1] - l2}};
}

ZPoint to_z(const PayoffMatrix2x2& m, double eta, double y11, double y21) {
  const DualTransform t = DualTransform::make(m, eta);
  return {t.z1(y11), t.z2(y21)};
}

std::pair<double, double> strategy_from_z(const ZPoint& z) {
  auto clamp01 = [](double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); };
  return {clamp01(z.z1), clamp01(z.z2)};
}

double conjugate_energy(std::span<const double> y, double eta) {
  const std::vector<double> x = gd_strategy(y, eta);
  double value = 0.0, norm2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    value += y[i] * x[i];
    norm2 += x[i] * x[i];
  }
  return value - norm2 / (2.0 * eta);
}

double conjugate_energy(const Vec2& y, double eta) {
  const Vec2 x = gd_strategy2(y, eta);
  return y[0] * x[0] + y[1] * x[1] - (x[0] * x[0] + x[1] * x[1]) / (2.0 * eta);
}

PiecewiseEnergy energy_coefficients(const PayoffMatrix2x2& m, double eta) {
  const DualTransform t = DualTransform::make(m, eta);
  if (!(t.scale1 > 0.0) || !(t.scale2 > 0.0)) {
    throw AssumptionError("energy_coefficients: dual line slopes must be negative (canonical game)");
  }

  auto player = [eta](double slope, double scale) {
    PlayerEnergyCoeffs c;
    // On the dual line y = (u, slope*u) with z = scale*u + 1/2, substituting
    // into the conjugate gives one quadratic and two affine pieces.
    const double rho = (1.0 + slope) / (1.0 - slope);
    c.gamma = 1.0 / eta;
    c.alpha = (rho - 1.0) / eta;
    c.beta = rho / (2.0 * eta);
    c.alpha1 = 1.0 / scale;                               // saturated at x = (1,0): value y_1 - 1/(2 eta)
    c.beta1 = 1.0 / (2.0 * scale) + 1.0 / (2.0 * eta);
    c.alpha0 = slope / scale;                             // saturated at x = (0,1): value y_2 - 1/(2 eta)
    c.beta0 = slope / (2.0 * scale) + 1.0 / (2.0 * eta);
    return c;
  };

  return {player(t.slope1, t.scale1), player(t.slope2, t.scale2)};
}

double piecewise_energy(const PiecewiseEnergy& pe, double z, int player) {
  if (player == 1) return pe.p1.eval(z);
  if (player == 2) return pe.p2.eval(z);
  throw std::invalid_argument("piecewise_energy: player must be 1 or 2");
}

}  // namespace zslab
