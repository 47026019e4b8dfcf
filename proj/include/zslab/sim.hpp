#pragma once

#include <cstdint>
#include <vector>

#include "zslab/dual.hpp"
#include "zslab/game.hpp"
#include "zslab/projection.hpp"

namespace zslab {

struct StepResult {
  LearnerState s1, s2;
  std::vector<double> x1, x2;
};

// One simultaneous round: both players respond to their current vectors, then
// both vectors absorb the resulting payoffs. x's are the strategies *played*
// this round (computed from the pre-update y's).
StepResult step(const LearnerState& s1, const LearnerState& s2, const PayoffMatrix2x2& m);

// Recorded run: index t ranges over 0..iterations, so size() == iterations+1.
// y is kept in the caller's raw coordinates; lambda1/lambda2 are the constant
// dual offsets of the run (z_i derives from y_i1 - lambda_i).
struct Trajectory {
  NormalizedGame game;
  double eta = 0.0;
  double lambda1 = 0.0, lambda2 = 0.0;
  std::vector<double> y11, y12, y21, y22;
  std::vector<double> x11, x21;
  std::vector<double> utility;  // instantaneous x1.A x2

  std::size_t size() const { return y11.size(); }
  ZPoint z_at(std::size_t t) const;
};

// Streaming simulator for long horizons where storing a Trajectory is not an
// option; advances one round at a time and exposes the current record.
class Simulator {
 public:
  Simulator(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0, double eta);

  void advance();

  std::uint64_t t() const { return t_; }
  const Vec2& y1() const { return y1_; }
  const Vec2& y2() const { return y2_; }
  const Vec2& x1() const { return x1_; }
  const Vec2& x2() const { return x2_; }
  double utility() const { return dot(x1_, matrix_.row_payoffs(x2_)); }
  ZPoint z() const { return {transform_.z1(y1_[0] - lambda1_), transform_.z2(y2_[0] - lambda2_)}; }
  double energy() const { return total_energy(coeffs_, z()); }
  bool both_fully_mixed() const {
    return x1_[0] > 0.0 && x1_[0] < 1.0 && x2_[0] > 0.0 && x2_[0] < 1.0;
  }

  const PayoffMatrix2x2& matrix() const { return matrix_; }
  const DualTransform& transform() const { return transform_; }
  const PiecewiseEnergy& coeffs() const { return coeffs_; }
  double lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }

 private:
  PayoffMatrix2x2 matrix_;
  double eta_;
  DualTransform transform_;
  PiecewiseEnergy coeffs_;
  double lambda1_, lambda2_;
  Vec2 y1_, y2_, x1_, x2_;
  std::uint64_t t_ = 0;
};

// Runs `iterations` rounds and records every index 0..iterations.
Trajectory simulate(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0,
                    double eta, std::uint64_t iterations);

}  // namespace zslab
