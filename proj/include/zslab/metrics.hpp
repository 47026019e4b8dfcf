#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "zslab/game.hpp"
#include "zslab/sim.hpp"

namespace zslab {

// Cumulative comparison against the best fixed action in hindsight, one entry
// per recorded index. regret[t] = best_fixed[t] - realized[t].
struct RegretSeries {
  std::vector<double> best_fixed;
  std::vector<double> realized;
  std::vector<double> regret;
};

// Incremental regret bookkeeping for both players at once. The per-action
// cumulative payoffs are exactly the y-vector increments, so after observing
// rounds 0..t this reproduces max_j (y_i^{t+1} - y_i^0)_j versus realized play.
class RegretTracker {
 public:
  void observe(const PayoffMatrix2x2& m, const Vec2& x1, const Vec2& x2) {
    const Vec2 gain1 = m.row_payoffs(x2);
    const Vec2 loss2 = m.col_payoffs(x1);
    cum1_[0] += gain1[0];
    cum1_[1] += gain1[1];
    cum2_[0] -= loss2[0];
    cum2_[1] -= loss2[1];
    realized_ += dot(x1, gain1);
  }

  double realized_utility() const { return realized_; }
  double regret1() const { return std::max(cum1_[0], cum1_[1]) - realized_; }
  double regret2() const { return std::max(cum2_[0], cum2_[1]) + realized_; }
  double regret(int player) const { return player == 1 ? regret1() : regret2(); }

 private:
  Vec2 cum1_{0.0, 0.0};
  Vec2 cum2_{0.0, 0.0};
  double realized_ = 0.0;
};

// Running mean of the played strategies.
class AverageTracker {
 public:
  void observe(const Vec2& x1, const Vec2& x2) {
    sum11_ += x1[0];
    sum21_ += x2[0];
    ++count_;
  }
  std::uint64_t count() const { return count_; }
  double mean_x11() const { return sum11_ / static_cast<double>(count_); }
  double mean_x21() const { return sum21_ / static_cast<double>(count_); }

  // L-infinity distance of the averaged profile from an equilibrium point.
  double gap(const NashPoint& ne) const;

 private:
  double sum11_ = 0.0, sum21_ = 0.0;
  std::uint64_t count_ = 0;
};

// Full series for a stored trajectory (player is 1 or 2).
RegretSeries regret(const Trajectory& traj, int player);

// Mean strategies over records 0..t_max inclusive.
std::pair<Vec2, Vec2> time_average(const Trajectory& traj, std::uint64_t t_max);

// Distance of the time-averaged profile from the stage game's equilibrium.
double nash_gap(const Trajectory& traj, std::uint64_t t_max);

// First index after which no record has both players fully mixed: one past the
// last fully mixed record, or 0 if there is none. Empty when the run ends
// inside a fully mixed stretch (the entry point is then beyond the horizon).
std::optional<std::uint64_t> boundary_entry_index(const Trajectory& traj);

}  // namespace zslab
