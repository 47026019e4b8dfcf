#include "zslab/sim.hpp"

#include <stdexcept>

namespace zslab {

StepResult step(const LearnerState& s1, const LearnerState& s2, const PayoffMatrix2x2& m) {
  s1.validate();
  s2.validate();
  if (s1.n() != 2 || s2.n() != 2) {
    throw std::invalid_argument("step: 2x2 payoff matrix requires two actions per player");
  }
  const Vec2 y1{s1.y[0], s1.y[1]};
  const Vec2 y2{s2.y[0], s2.y[1]};
  const Vec2 x1 = gd_strategy2(y1, s1.eta);
  const Vec2 x2 = gd_strategy2(y2, s2.eta);
  const Vec2 gain1 = m.row_payoffs(x2);
  const Vec2 loss2 = m.col_payoffs(x1);

  StepResult r;
  r.s1 = LearnerState{{y1[0] + gain1[0], y1[1] + gain1[1]}, s1.eta};
  r.s2 = LearnerState{{y2[0] - loss2[0], y2[1] - loss2[1]}, s2.eta};
  r.x1 = {x1[0], x1[1]};
  r.x2 = {x2[0], x2[1]};
  return r;
}

Simulator::Simulator(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0, double eta)
    : matrix_(game.matrix),
      eta_(eta),
      transform_(DualTransform::make(game.matrix, eta)),
      coeffs_(energy_coefficients(game.matrix, eta)),
      y1_(y1_0),
      y2_(y2_0) {
  if (!(eta > 0.0)) throw std::invalid_argument("Simulator: eta must be positive");
  const auto [l1, l2] = dual_offsets(matrix_, y1_0, y2_0);
  lambda1_ = l1;
  lambda2_ = l2;
  x1_ = gd_strategy2(y1_, eta_);
  x2_ = gd_strategy2(y2_, eta_);
}

void Simulator::advance() {
  const Vec2 gain1 = matrix_.row_payoffs(x2_);
  const Vec2 loss2 = matrix_.col_payoffs(x1_);
  y1_[0] += gain1[0];
  y1_[1] += gain1[1];
  y2_[0] -= loss2[0];
  y2_[1] -= loss2[1];
  x1_ = gd_strategy2(y1_, eta_);
  x2_ = gd_strategy2(y2_, eta_);
  ++t_;
}

ZPoint Trajectory::z_at(std::size_t t) const {
  const DualTransform tr = DualTransform::make(game.matrix, eta);
  return {tr.z1(y11[t] - lambda1), tr.z2(y21[t] - lambda2)};
}

Trajectory simulate(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0,
                    double eta, std::uint64_t iterations) {
  Simulator sim(game, y1_0, y2_0, eta);
  Trajectory traj;
  traj.game = game;
  traj.eta = eta;
  traj.lambda1 = sim.lambda1();
  traj.lambda2 = sim.lambda2();
  const std::size_t count = static_cast<std::size_t>(iterations) + 1;
  traj.y11.reserve(count);
  traj.y12.reserve(count);
  traj.y21.reserve(count);
  traj.y22.reserve(count);
  traj.x11.reserve(count);
  traj.x21.reserve(count);
  traj.utility.reserve(count);

  for (std::uint64_t t = 0;; ++t) {
    traj.y11.push_back(sim.y1()[0]);
    traj.y12.push_back(sim.y1()[1]);
    traj.y21.push_back(sim.y2()[0]);
    traj.y22.push_back(sim.y2()[1]);
    traj.x11.push_back(sim.x1()[0]);
    traj.x21.push_back(sim.x2()[0]);
    traj.utility.push_back(sim.utility());
    if (t == iterations) break;
    sim.advance();
  }
  return traj;
}

}  // namespace zslab
