#pragma once

#include <cstdint>
#include <string>

namespace zslab::verify {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::uint64_t checks = 0;  // individual comparisons performed
  std::string detail;        // first failure, or a short summary when passing
};

// Exact reproduction of the Matching Pennies closed form at eta = 1:
// payoff vectors, cumulative utility, and regret equal at every t <= t_max,
// with a wall-clock budget of 1 second.
CheckResult pennies_exact(std::uint64_t t_max);

// gd_strategy vs numeric maximization (1e-8) and support_set vs brute-force
// subset search (exact) over random (y, eta) with 2..4 actions; 30 s budget.
CheckResult projection_oracles(std::uint64_t samples, std::uint64_t seed);

// Piecewise energy: coefficient signs, continuity at z in {0,1} (1e-12), and
// agreement with the definition-level conjugate on random on-line points (1e-9).
CheckResult energy_shape();

// Energy never drops along simulated runs (per-step tolerance 1e-9) and stays
// constant while both z coordinates remain inside one affine piece.
CheckResult energy_monotone(std::uint64_t iterations);

// The three long-horizon checks that share one pass over the same runs:
// bounded regret/sqrt(t) (max <= 3x median over [1e3, T], 5 min budget),
// a finite boundary-entry index with no fully mixed round after it, and
// the time-average Nash gap envelope (max over (T/4, T]) shrinking >= 1.5x
// per quadrupling of T.
struct LongRunChecks {
  CheckResult regret_ratio;
  CheckResult boundary;
  CheckResult average_gap;
};
LongRunChecks long_runs(std::uint64_t iterations);

// Partition sequence over >= min_partitions partitions per run: strategy-change
// counts show no growth trend, entry energies fit r ~ j and entry times fit
// t ~ j^2 with R^2 >= 0.99 after a 10-partition burn-in.
CheckResult partition_structure(std::uint64_t min_partitions);

// Forward-Euler reference: dt = 1 matches the discrete run within 1e-12 and
// the one-rotation energy drift is non-increasing across four dt halvings.
CheckResult continuous_limit();

// Reproduces the standard single-run plot set (eta = 0.15, T = 5000) into
// outdir and checks the three SVGs exist and max-so-far regret^2 is linear in
// t (R^2 >= 0.95).
CheckResult plot_outputs(const std::string& outdir);

}  // namespace zslab::verify
