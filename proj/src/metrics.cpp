#include "zslab/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace zslab {

namespace {

void require_in_range(const Trajectory& traj, std::uint64_t t_max, const char* who) {
  if (t_max >= traj.size()) throw std::out_of_range(std::string(who) + ": index beyond trajectory");
}

}  // namespace

double AverageTracker::gap(const NashPoint& ne) const {
  const double d11 = std::fabs(mean_x11() - ne.x1[0]);
  const double d21 = std::fabs(mean_x21() - ne.x2[0]);
  // Second components mirror the first (both profiles sum to 1 per player).
  return std::max(d11, d21);
}

RegretSeries regret(const Trajectory& traj, int player) {
  if (player != 1 && player != 2) throw std::invalid_argument("regret: player must be 1 or 2");
  RegretSeries out;
  out.best_fixed.reserve(traj.size());
  out.realized.reserve(traj.size());
  out.regret.reserve(traj.size());

  RegretTracker tracker;
  const PayoffMatrix2x2& m = traj.game.matrix;
  for (std::size_t t = 0; t < traj.size(); ++t) {
    const Vec2 x1{traj.x11[t], 1.0 - traj.x11[t]};
    const Vec2 x2{traj.x21[t], 1.0 - traj.x21[t]};
    tracker.observe(m, x1, x2);
    const double realized = player == 1 ? tracker.realized_utility() : -tracker.realized_utility();
    out.realized.push_back(realized);
    out.best_fixed.push_back(tracker.regret(player) + realized);
    out.regret.push_back(tracker.regret(player));
  }
  return out;
}

std::pair<Vec2, Vec2> time_average(const Trajectory& traj, std::uint64_t t_max) {
  require_in_range(traj, t_max, "time_average");
  AverageTracker avg;
  for (std::uint64_t t = 0; t <= t_max; ++t) {
    avg.observe({traj.x11[t], 1.0 - traj.x11[t]}, {traj.x21[t], 1.0 - traj.x21[t]});
  }
  const double m11 = avg.mean_x11();
  const double m21 = avg.mean_x21();
  return {Vec2{m11, 1.0 - m11}, Vec2{m21, 1.0 - m21}};
}

double nash_gap(const Trajectory& traj, std::uint64_t t_max) {
  require_in_range(traj, t_max, "nash_gap");
  const NashPoint ne = nash_equilibrium(traj.game.matrix);
  const auto [x1bar, x2bar] = time_average(traj, t_max);
  double gap = 0.0;
  for (int j = 0; j < 2; ++j) {
    gap = std::max(gap, std::fabs(x1bar[j] - ne.x1[j]));
    gap = std::max(gap, std::fabs(x2bar[j] - ne.x2[j]));
  }
  return gap;
}

std::optional<std::uint64_t> boundary_entry_index(const Trajectory& traj) {
  std::optional<std::uint64_t> last_mixed;
  for (std::size_t t = 0; t < traj.size(); ++t) {
    const double p = traj.x11[t];
    const double q = traj.x21[t];
    if (p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0) last_mixed = t;
  }
  if (!last_mixed) return 0;
  if (*last_mixed + 1 >= traj.size()) return std::nullopt;  // still mixed at the horizon
  return *last_mixed + 1;
}

}  // namespace zslab
