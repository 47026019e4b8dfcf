#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "zslab/game.hpp"
#include "zslab/metrics.hpp"
#include "zslab/pennies.hpp"
#include "zslab/sim.hpp"

using namespace zslab;
using namespace zslab::pennies;

TEST_CASE("triangular indexing splits iterations into blocks") {
  CHECK(triangular_index(0).n == 0);
  CHECK(triangular_index(0).k == 0);
  CHECK(triangular_index(9).n == 3);
  CHECK(triangular_index(9).k == 3);
  CHECK(triangular_index(10).n == 4);
  CHECK(triangular_index(10).k == 0);

  // Round trip: t = n(n+1)/2 + k with 0 <= k <= n.
  std::uint64_t t = 0;
  for (std::uint64_t n = 0; t < 100000; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k, ++t) {
      const TriangularIndex idx = triangular_index(t);
      CHECK(idx.n == n);
      CHECK(idx.k == k);
    }
  }
}

TEST_CASE("closed-form payoff vectors at small iterations") {
  const PayoffPair p0 = exact_payoff_vectors(0);
  CHECK(p0.y1 == std::array<std::int64_t, 2>{1, 0});
  CHECK(p0.y2 == std::array<std::int64_t, 2>{1, 0});

  const PayoffPair p1 = exact_payoff_vectors(1);
  CHECK(p1.y1 == std::array<std::int64_t, 2>{2, -1});
  CHECK(p1.y2 == std::array<std::int64_t, 2>{0, 1});

  const PayoffPair p3 = exact_payoff_vectors(3);
  CHECK(p3.y1 == std::array<std::int64_t, 2>{0, 1});
  CHECK(p3.y2 == std::array<std::int64_t, 2>{-2, 3});

  const PayoffPair p10 = exact_payoff_vectors(10);
  CHECK(p10.y1 == std::array<std::int64_t, 2>{1, 0});
  CHECK(p10.y2 == std::array<std::int64_t, 2>{5, -4});
}

TEST_CASE("closed-form utility and regret at small iterations") {
  CHECK(exact_cumulative_utility(0) == 1);
  CHECK(exact_cumulative_utility(4) == 1);
  CHECK(exact_cumulative_utility(6) == 1);
  CHECK(exact_regret(0) == 0);
  CHECK(exact_regret(2) == 2);
  CHECK(exact_regret(4) == 2);
  CHECK(exact_regret(10) == 2);
}

TEST_CASE("closed forms are internally consistent") {
  for (std::uint64_t t = 0; t < 5000; ++t) {
    // Utility moves by exactly one unit per round.
    if (t > 0) {
      const std::int64_t step = exact_cumulative_utility(t) - exact_cumulative_utility(t - 1);
      CHECK((step == 1 || step == -1));
    }
    // Regret equals best cumulative action payoff minus realized utility,
    // with action payoffs read off the score-vector increments.
    const PayoffPair next = exact_payoff_vectors(t + 1);
    const std::int64_t best = std::max(next.y1[0] - 1, next.y1[1]);
    CHECK(exact_regret(t) == best - exact_cumulative_utility(t));
    CHECK(exact_regret(t) >= 0);
  }
}

TEST_CASE("regret grows like the square root of time") {
  for (const std::uint64_t t : {10ull, 100ull, 1000ull, 10000ull, 100000ull}) {
    const double ratio = static_cast<double>(exact_regret(t)) / std::sqrt(static_cast<double>(t));
    CHECK(ratio >= 0.2);
    CHECK(ratio <= 1.2);
  }
}

TEST_CASE("the simulator reproduces the closed forms bit for bit") {
  const NormalizedGame game = normalize(matching_pennies());
  Simulator sim(game, {1.0, 0.0}, {1.0, 0.0}, 1.0);
  RegretTracker tracker;
  for (std::uint64_t t = 0; t <= 1275; ++t) {
    const PayoffPair p = exact_payoff_vectors(t);
    CHECK(sim.y1()[0] == static_cast<double>(p.y1[0]));
    CHECK(sim.y1()[1] == static_cast<double>(p.y1[1]));
    CHECK(sim.y2()[0] == static_cast<double>(p.y2[0]));
    CHECK(sim.y2()[1] == static_cast<double>(p.y2[1]));
    // Play stays pure the whole way.
    CHECK((sim.x1()[0] == 0.0 || sim.x1()[0] == 1.0));
    CHECK((sim.x2()[0] == 0.0 || sim.x2()[0] == 1.0));
    tracker.observe(game.matrix, sim.x1(), sim.x2());
    CHECK(tracker.realized_utility() == static_cast<double>(exact_cumulative_utility(t)));
    CHECK(tracker.regret1() == static_cast<double>(exact_regret(t)));
    sim.advance();
  }
}
