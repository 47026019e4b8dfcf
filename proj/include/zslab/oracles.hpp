#pragma once

#include <span>
#include <vector>

namespace zslab::oracles {

// Independent reference implementations used by the verification suites and
// tests. Deliberately different algorithms from the production projection:
// numeric optimization and brute-force enumeration instead of greedy removal.

// Euclidean projection onto the probability simplex via sorted water-filling.
std::vector<double> project_to_simplex(std::vector<double> v);

// Maximizes y.x - ||x||^2/(2*eta) over the simplex by projected gradient
// ascent (contraction 1/2 per iteration, so ~60 iterations reach roundoff).
std::vector<double> qp_strategy(std::span<const double> y, double eta, int iterations = 200);

// Brute force over all non-empty index subsets: assign each subset its
// stationary masses, keep the feasible ones, return the subset with the best
// objective value (largest subset on ties). Sorted ascending.
std::vector<int> best_support(std::span<const double> y, double eta);

}  // namespace zslab::oracles
