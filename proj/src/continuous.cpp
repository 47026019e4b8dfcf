#include "zslab/continuous.hpp"

#include <cmath>
#include <stdexcept>

#include "zslab/dual.hpp"
#include "zslab/projection.hpp"

namespace zslab {

ContinuousRun integrate(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0,
                        double eta, double horizon, double dt) {
  if (!(dt > 0.0) || dt > 1.0) throw std::invalid_argument("integrate: need 0 < dt <= 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("integrate: horizon must be positive");
  const double steps_exact = horizon / dt;
  const std::uint64_t steps = static_cast<std::uint64_t>(std::llround(steps_exact));
  if (std::fabs(steps_exact - static_cast<double>(steps)) > 1e-9) {
    throw std::invalid_argument("integrate: horizon must be a whole multiple of dt");
  }

  const PayoffMatrix2x2& m = game.matrix;
  const DualTransform tr = DualTransform::make(m, eta);
  const PiecewiseEnergy pe = energy_coefficients(m, eta);
  const auto [l1, l2] = dual_offsets(m, y1_0, y2_0);

  ContinuousRun run;
  run.dt = dt;
  run.eta = eta;
  run.lambda1 = l1;
  run.lambda2 = l2;
  run.time.reserve(steps + 1);
  run.y11.reserve(steps + 1);
  run.y21.reserve(steps + 1);
  run.energy.reserve(steps + 1);

  Vec2 y1 = y1_0, y2 = y2_0;
  for (std::uint64_t s = 0;; ++s) {
    run.time.push_back(static_cast<double>(s) * dt);
    run.y11.push_back(y1[0]);
    run.y21.push_back(y2[0]);
    run.energy.push_back(total_energy(pe, {tr.z1(y1[0] - l1), tr.z2(y2[0] - l2)}));
    if (s == steps) break;

    const Vec2 x1 = gd_strategy2(y1, eta);
    const Vec2 x2 = gd_strategy2(y2, eta);
    const Vec2 gain1 = m.row_payoffs(x2);
    const Vec2 loss2 = m.col_payoffs(x1);
    y1[0] += dt * gain1[0];
    y1[1] += dt * gain1[1];
    y2[0] -= dt * loss2[0];
    y2[1] -= dt * loss2[1];
  }
  return run;
}

}  // namespace zslab
