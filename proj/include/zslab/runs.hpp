#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zslab/config.hpp"
#include "zslab/game.hpp"
#include "zslab/partition.hpp"
#include "zslab/sim.hpp"

namespace zslab {

// Number of workers parallel sections may use: OpenMP's default capped by the
// ZSLAB_THREADS environment variable (values < 1 or unparsable mean 1).
int worker_count();

// Deterministic on-line starting vectors: first components uniform in [-2, 2]
// from the seeded generator, second components placed on each player's dual
// line so no offset correction is needed.
std::pair<Vec2, Vec2> random_online_y0(const PayoffMatrix2x2& normalized, double eta,
                                       std::uint64_t seed);

// The default start used when a run config names neither y0 nor seed.
std::pair<Vec2, Vec2> default_y0();

// Full single-run pipeline: simulate, then write trajectory.csv, regret.csv,
// average.csv, partitions.csv, orbit.svg, regret.svg, regret2.svg (and
// continuous.csv when configured) into cfg.outputs.
void run_simulate(const RunConfig& cfg);

// One grid cell of a sweep; on failure `error` is set and the numeric fields
// are NaN where meaningless.
struct SweepRow {
  std::string game;
  double eta = 0.0;
  std::uint64_t seed = 0;
  double final_regret = 0.0;
  double max_regret_ratio = 0.0;  // max over t in [1000, T] of regret(t)/sqrt(t)
  double kappa = 0.0;             // largest per-partition strategy-change count
  double energy_slope = 0.0;      // fit of partition entry energy vs partition index
  double energy_r2 = 0.0;
  double steps_r2 = 0.0;          // fit of partition entry time vs index^2
  std::string error;
};

// Runs the grid (parallel across cells), sorted by (game, eta, seed).
// Per-cell failures are recorded in the row and do not abort the sweep.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// Writes rows to <outputs>/summary.csv (header only for an empty grid).
void write_summary(const std::string& outputs_dir, const std::vector<SweepRow>& rows);

// Streaming per-run analysis shared by sweeps and the verification suites.
struct StreamStats {
  double final_regret1 = 0.0;
  double final_regret2 = 0.0;
  double max_ratio1 = 0.0;            // over t in [ratio_lo, T]
  double max_ratio2 = 0.0;
  std::vector<float> ratio1_samples;  // kept only when keep_ratio_samples
  std::uint64_t last_mixed_t = 0;     // last index with both players fully mixed
  bool any_mixed = false;
  bool mixed_at_horizon = false;
  double max_energy_drop = 0.0;       // most negative single-step energy change
  double max_linear_wobble = 0.0;     // |energy change| while both z stay in one affine piece
  std::vector<PartitionRow> partitions;
  bool entered_partitions = false;
  // Largest nash gap over (T/4, T] per requested scale T (phase-robust trend).
  std::vector<double> gap_at;
};

struct StreamOptions {
  std::uint64_t ratio_lo = 1000;
  bool keep_ratio_samples = false;
  bool track_energy = false;
  bool track_partitions = true;
  std::vector<std::uint64_t> gap_checkpoints;
};

StreamStats stream_run(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0,
                       double eta, std::uint64_t iterations, const StreamOptions& opt);

// Least-squares structure of a partition sequence after a burn-in: entry
// energy against index and entry time against squared index. NaN fields when
// fewer than burn_in + 3 partitions are available.
struct PartitionFits {
  double energy_slope, energy_r2, steps_r2;
};
PartitionFits fit_partitions(std::span<const PartitionRow> rows, std::size_t burn_in = 10);

}  // namespace zslab
