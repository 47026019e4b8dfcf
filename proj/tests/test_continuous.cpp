#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "zslab/continuous.hpp"
#include "zslab/game.hpp"
#include "zslab/sim.hpp"

using namespace zslab;

TEST_CASE("unit substeps reproduce the discrete run exactly") {
  const NormalizedGame game = normalize(matching_pennies());
  const Vec2 y1_0{0.2, -0.2};
  const Vec2 y2_0{-0.3, 0.3};
  const double eta = 0.15;

  const ContinuousRun cr = integrate(game, y1_0, y2_0, eta, 512.0, 1.0);
  const Trajectory traj = simulate(game, y1_0, y2_0, eta, 512);
  REQUIRE(cr.y11.size() == traj.size());
  for (std::size_t t = 0; t < traj.size(); ++t) {
    CHECK(cr.time[t] == static_cast<double>(t));
    CHECK(cr.y11[t] == traj.y11[t]);
    CHECK(cr.y21[t] == traj.y21[t]);
  }
  CHECK(cr.lambda1 == traj.lambda1);
  CHECK(cr.lambda2 == traj.lambda2);
}

TEST_CASE("the equilibrium point is a fixed point of the flow") {
  const NormalizedGame game = normalize(matching_pennies());
  for (const double dt : {1.0, 0.25, 0.0625}) {
    const ContinuousRun cr = integrate(game, {0.0, 0.0}, {0.0, 0.0}, 0.5, 64.0, dt);
    for (const double v : cr.y11) CHECK(v == 0.0);
    for (const double v : cr.y21) CHECK(v == 0.0);
    CHECK(cr.drift() == 0.0);
  }
}

TEST_CASE("energy drift shrinks as the substep shrinks") {
  const NormalizedGame game = normalize(matching_pennies());
  const Vec2 y1_0{0.2, -0.2};
  const Vec2 y2_0{-0.3, 0.3};
  const double eta = 0.15;
  const double horizon = 256.0;

  double prev = std::numeric_limits<double>::infinity();
  for (const double dt : {1.0, 0.5, 0.25, 0.125, 0.0625}) {
    const ContinuousRun cr = integrate(game, y1_0, y2_0, eta, horizon, dt);
    const double d = cr.drift();
    // Forward Euler only ever gains energy on this flow.
    CHECK(d >= -1e-9);
    CHECK(d <= prev + 1e-9);
    prev = d;
  }
}

TEST_CASE("integration rejects bad step sizes and horizons") {
  const NormalizedGame game = normalize(matching_pennies());
  CHECK_THROWS(integrate(game, {0.0, 0.0}, {0.0, 0.0}, 1.0, 8.0, 0.0));
  CHECK_THROWS(integrate(game, {0.0, 0.0}, {0.0, 0.0}, 1.0, 8.0, -0.5));
  CHECK_THROWS(integrate(game, {0.0, 0.0}, {0.0, 0.0}, 1.0, 8.0, 2.0));
  CHECK_THROWS(integrate(game, {0.0, 0.0}, {0.0, 0.0}, 1.0, 8.3, 0.5));
  CHECK_NOTHROW(integrate(game, {0.0, 0.0}, {0.0, 0.0}, 1.0, 8.0, 0.5));
}
