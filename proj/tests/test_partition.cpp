#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "zslab/dual.hpp"
#include "zslab/game.hpp"
#include "zslab/metrics.hpp"
#include "zslab/partition.hpp"
#include "zslab/pennies.hpp"
#include "zslab/sim.hpp"

using namespace zslab;

TEST_CASE("classification of representative points") {
  CHECK(classify({0.5, 1.5}) == Region::Z0);
  CHECK(classify({1.5, 0.5}) == Region::Z1);
  CHECK(classify({0.5, -0.5}) == Region::Z2);
  CHECK(classify({-0.5, -0.5}) == Region::Z3);
  CHECK(classify({0.5, 0.5}) == Region::Interior);

  CHECK(std::string(region_name(Region::Z0)) == "Z0");
  CHECK(std::string(region_name(Region::Interior)) == "Interior");
  CHECK(region_index(Region::Z0) == 0);
  CHECK(region_index(Region::Z3) == 3);
  CHECK(region_index(Region::Interior) == -1);
}

TEST_CASE("regions tile the plane without overlap") {
  const double grid[] = {-0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5};
  for (const double z1 : grid) {
    for (const double z2 : grid) {
      const bool in0 = z1 < 1.0 && z2 >= 1.0;
      const bool in1 = z1 >= 1.0 && z2 > 0.0;
      const bool in2 = z1 > 0.0 && z2 <= 0.0;
      const bool in3 = z1 <= 0.0 && z2 < 1.0;
      const bool open_square = z1 > 0.0 && z1 < 1.0 && z2 > 0.0 && z2 < 1.0;
      const int hits = int(in0) + int(in1) + int(in2) + int(in3) + int(open_square);
      CHECK(hits == 1);
      const Region r = classify({z1, z2});
      if (in0) CHECK(r == Region::Z0);
      if (in1) CHECK(r == Region::Z1);
      if (in2) CHECK(r == Region::Z2);
      if (in3) CHECK(r == Region::Z3);
      if (open_square) CHECK(r == Region::Interior);
    }
  }
}

TEST_CASE("break points mark entry and every region change") {
  const std::vector<ZPoint> series{
      {0.5, 0.5},    // interior
      {0.5, 1.5},    // Z0  <- entry
      {0.6, 1.2},    // Z0
      {1.5, 0.5},    // Z1
      {0.5, -0.5},   // Z2
      {0.2, -0.1},   // Z2
      {-0.5, 0.5},   // Z3
  };
  const auto bp = break_points(series, 0);
  REQUIRE(bp.has_value());
  CHECK(bp->entry == 1);
  CHECK(bp->t == std::vector<std::uint64_t>{1, 3, 4, 6});
  CHECK(bp->regions ==
        std::vector<Region>{Region::Z0, Region::Z1, Region::Z2, Region::Z3});
  CHECK(bp->sentinel == series.size());
  CHECK(bp->t[0] == bp->entry);

  // Starting past the only occurrence means no entry at all.
  CHECK_FALSE(break_points(series, 3).has_value());

  const std::vector<ZPoint> never{{1.5, 0.5}, {0.5, -0.5}};
  CHECK_FALSE(break_points(never, 0).has_value());
}

TEST_CASE("the rotating pure run produces arithmetic partitions") {
  const NormalizedGame game = normalize(matching_pennies());
  const Trajectory traj = simulate(game, {1.0, 0.0}, {1.0, 0.0}, 1.0, 1274);
  std::vector<ZPoint> z(traj.size());
  for (std::size_t t = 0; t < traj.size(); ++t) z[t] = traj.z_at(t);

  const auto bp = break_points(z, 0);
  REQUIRE(bp.has_value());
  // Blocks 0, 1, 2 land in Z1, Z2, Z3; the first Z0 block is the fourth one.
  CHECK(bp->entry == 6);

  const std::vector<PartitionRow> rows = partition_stats(traj, *bp);
  REQUIRE(rows.size() == 47);  // blocks 3 through 49
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const std::uint64_t n = 3 + j;
    CHECK(rows[j].index == j);
    CHECK(rows[j].t_start == n * (n + 1) / 2);
    CHECK(rows[j].length == n + 1);
    CHECK(region_index(rows[j].region) == static_cast<int>((n + 1) % 4));
    CHECK(rows[j].r_start == static_cast<double>(n));
    CHECK_FALSE(rows[j].skipped);
    if (j + 1 < rows.size()) {
      CHECK(rows[j].delta_r == 1.0);
      CHECK(rows[j].strategy_changes == 1);
    } else {
      CHECK(std::isnan(rows[j].delta_r));
    }
  }
}

TEST_CASE("streaming tracker matches the batch pipeline") {
  const NormalizedGame game = normalize(matching_pennies());
  const double eta = 0.15;
  const Trajectory traj = simulate(game, {0.2, -0.2}, {-0.3, 0.3}, eta, 5000);
  const PiecewiseEnergy pe = energy_coefficients(game.matrix, eta);

  PartitionTracker tracker;
  for (std::size_t t = 0; t < traj.size(); ++t) {
    const ZPoint z = traj.z_at(t);
    tracker.observe(t, z, {traj.x11[t], 1.0 - traj.x11[t]},
                    {traj.x21[t], 1.0 - traj.x21[t]}, total_energy(pe, z));
  }
  tracker.finalize();
  REQUIRE(tracker.entered());

  std::vector<ZPoint> z(traj.size());
  for (std::size_t t = 0; t < traj.size(); ++t) z[t] = traj.z_at(t);
  const auto entry_hint = boundary_entry_index(traj);
  REQUIRE(entry_hint.has_value());
  const auto bp = break_points(z, *entry_hint);
  REQUIRE(bp.has_value());
  CHECK(tracker.entry() == bp->entry);
  CHECK(tracker.boundary() == *entry_hint);

  const std::vector<PartitionRow> batch = partition_stats(traj, *bp);
  const std::vector<PartitionRow>& stream = tracker.rows();
  REQUIRE(stream.size() == batch.size());
  REQUIRE(stream.size() > 10);
  CHECK(tracker.closed_count() == stream.size() - 1);
  for (std::size_t j = 0; j < batch.size(); ++j) {
    CHECK(stream[j].index == batch[j].index);
    CHECK(stream[j].t_start == batch[j].t_start);
    CHECK(stream[j].length == batch[j].length);
    CHECK(stream[j].region == batch[j].region);
    CHECK(stream[j].r_start == batch[j].r_start);
    CHECK(stream[j].strategy_changes == batch[j].strategy_changes);
    CHECK(stream[j].skipped == batch[j].skipped);
    CHECK_FALSE(stream[j].skipped);
    if (std::isnan(batch[j].delta_r)) {
      CHECK(std::isnan(stream[j].delta_r));
    } else {
      CHECK(stream[j].delta_r == batch[j].delta_r);
    }
  }
}

TEST_CASE("largest per-partition strategy-change count") {
  CHECK(max_strategy_changes({}) == 0);
  std::vector<PartitionRow> rows(3);
  rows[0].strategy_changes = 3;
  rows[1].strategy_changes = 7;
  rows[2].strategy_changes = 2;
  CHECK(max_strategy_changes(rows) == 7);
}
