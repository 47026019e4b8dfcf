#pragma once

#include <cstdint>
#include <utility>

#include "zslab/game.hpp"

namespace zslab {

// Closed forms for the [[1,-1],[-1,1]] game at eta = 1 started from
// y1 = y2 = (1, 0): every iterate is integer-valued, play is always pure, and
// the run decomposes into blocks n = 0, 1, 2, ... of length n+1. All values
// are exact; the simulator must reproduce them bit for bit.
namespace pennies {

struct TriangularIndex {
  std::uint64_t n = 0;  // block number; block n starts at t = n(n+1)/2
  std::uint64_t k = 0;  // offset within the block, 0 <= k <= n
};

TriangularIndex triangular_index(std::uint64_t t);

struct PayoffPair {
  std::array<std::int64_t, 2> y1;
  std::array<std::int64_t, 2> y2;
};

// The cumulative payoff vectors at iteration t.
PayoffPair exact_payoff_vectors(std::uint64_t t);

// Realized cumulative utility of the row player through iteration t
// (i.e. summed over rounds 0..t).
std::int64_t exact_cumulative_utility(std::uint64_t t);

// Row player's regret through iteration t: cumulative payoff of the best
// fixed action minus realized cumulative utility. Always a whole number here.
std::int64_t exact_regret(std::uint64_t t);

}  // namespace pennies
}  // namespace zslab
