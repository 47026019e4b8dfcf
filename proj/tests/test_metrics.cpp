#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "zslab/game.hpp"
#include "zslab/metrics.hpp"
#include "zslab/pennies.hpp"
#include "zslab/sim.hpp"

using namespace zslab;

namespace {
Trajectory pennies_run(std::uint64_t iterations) {
  const NormalizedGame game = normalize(matching_pennies());
  return simulate(game, {1.0, 0.0}, {1.0, 0.0}, 1.0, iterations);
}
}  // namespace

TEST_CASE("regret of the rotating pure run matches the closed form") {
  const Trajectory traj = pennies_run(20);
  const RegretSeries r1 = regret(traj, 1);
  REQUIRE(r1.regret.size() == traj.size());
  CHECK(r1.regret[0] == 0.0);
  CHECK(r1.regret[4] == 2.0);
  CHECK(r1.regret[10] == 2.0);
  for (std::size_t t = 0; t < traj.size(); ++t) {
    CHECK(r1.regret[t] == static_cast<double>(pennies::exact_regret(t)));
    CHECK(r1.realized[t] == static_cast<double>(pennies::exact_cumulative_utility(t)));
    CHECK(r1.regret[t] == r1.best_fixed[t] - r1.realized[t]);
  }
}

TEST_CASE("incremental tracker reproduces the series builder") {
  const NormalizedGame game = normalize(matching_pennies());
  const Trajectory traj = pennies_run(40);
  RegretTracker tracker;
  const RegretSeries r1 = regret(traj, 1);
  const RegretSeries r2 = regret(traj, 2);
  for (std::size_t t = 0; t < traj.size(); ++t) {
    tracker.observe(game.matrix, {traj.x11[t], 1.0 - traj.x11[t]},
                    {traj.x21[t], 1.0 - traj.x21[t]});
    CHECK(tracker.regret1() == doctest::Approx(r1.regret[t]).epsilon(1e-12));
    CHECK(tracker.regret2() == doctest::Approx(r2.regret[t]).epsilon(1e-12));
    CHECK(tracker.regret(1) == tracker.regret1());
    CHECK(tracker.regret(2) == tracker.regret2());
  }
  CHECK(tracker.realized_utility() == doctest::Approx(static_cast<double>(pennies::exact_cumulative_utility(40))).epsilon(1e-12));
}

TEST_CASE("time averages of constant equilibrium play sit at the equilibrium") {
  const NormalizedGame game = normalize(matching_pennies());
  const Trajectory traj = simulate(game, {0.0, 0.0}, {0.0, 0.0}, 0.5, 50);
  const auto [avg1, avg2] = time_average(traj, 50);
  CHECK(avg1[0] == 0.5);
  CHECK(avg2[0] == 0.5);
  CHECK(nash_gap(traj, 50) == 0.0);

  AverageTracker avg;
  for (std::size_t t = 0; t < traj.size(); ++t) {
    avg.observe({traj.x11[t], 1.0 - traj.x11[t]}, {traj.x21[t], 1.0 - traj.x21[t]});
  }
  CHECK(avg.count() == 51);
  CHECK(avg.mean_x11() == 0.5);
  CHECK(avg.gap(nash_equilibrium(game.matrix)) == 0.0);
}

TEST_CASE("averaged play of the rotating run drifts toward the equilibrium") {
  const Trajectory traj = pennies_run(4000);
  // One full rotation of the pure cycle averages close to (1/2, 1/2); the
  // residual shrinks as the horizon grows.
  const double early = nash_gap(traj, 400);
  const double late = nash_gap(traj, 4000);
  CHECK(early < 0.2);
  CHECK(late < early);

  const auto [avg1, avg2] = time_average(traj, 4000);
  const double direct = std::max(std::fabs(avg1[0] - 0.5), std::fabs(avg2[0] - 0.5));
  CHECK(late == doctest::Approx(direct).epsilon(1e-12));
  CHECK(avg1[0] + avg1[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(avg2[0] + avg2[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("boundary entry is found and stays pure afterwards") {
  // The rotating run is pure from the very first record.
  CHECK(boundary_entry_index(pennies_run(100)) == 0);

  // Constant fully mixed play never leaves the interior.
  const NormalizedGame game = normalize(matching_pennies());
  const Trajectory fixed = simulate(game, {0.0, 0.0}, {0.0, 0.0}, 0.5, 100);
  CHECK_FALSE(boundary_entry_index(fixed).has_value());

  // A small-step interior start reaches the boundary in finite time and the
  // tail has no fully mixed joint records.
  const Trajectory traj = simulate(game, {0.2, -0.2}, {-0.3, 0.3}, 0.15, 5000);
  const auto entry = boundary_entry_index(traj);
  REQUIRE(entry.has_value());
  CHECK(*entry > 0);
  CHECK(*entry < traj.size());
  for (std::uint64_t t = *entry; t < traj.size(); ++t) {
    const bool mixed1 = traj.x11[t] > 0.0 && traj.x11[t] < 1.0;
    const bool mixed2 = traj.x21[t] > 0.0 && traj.x21[t] < 1.0;
    CHECK_FALSE((mixed1 && mixed2));
  }
}
