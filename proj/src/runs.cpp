#include "zslab/runs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zslab/continuous.hpp"
#include "zslab/csv.hpp"
#include "zslab/metrics.hpp"
#include "zslab/stats.hpp"
#include "zslab/svg.hpp"

namespace zslab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::filesystem::path prepare_outputs(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw ConfigError("cannot create outputs directory '" + dir + "': " + ec.message());
  return p;
}

}  // namespace

int worker_count() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("ZSLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    const long cap = (end == env || *end != '\0' || v < 1) ? 1 : v;
    n = static_cast<int>(std::min<long>(n, cap));
  }
  return std::max(1, n);
}

std::pair<Vec2, Vec2> random_online_y0(const PayoffMatrix2x2& normalized, double eta,
                                       std::uint64_t seed) {
  const DualTransform tr = DualTransform::make(normalized, eta);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double u1 = dist(gen);
  const double u2 = dist(gen);
  return {Vec2{u1, tr.slope1 * u1}, Vec2{u2, tr.slope2 * u2}};
}

std::pair<Vec2, Vec2> default_y0() { return {Vec2{0.2, -0.2}, Vec2{-0.3, 0.3}}; }

StreamStats stream_run(const NormalizedGame& game, const Vec2& y1_0, const Vec2& y2_0,
                       double eta, std::uint64_t iterations, const StreamOptions& opt) {
  for (std::uint64_t cp : opt.gap_checkpoints) {
    if (cp > iterations) throw std::invalid_argument("stream_run: gap checkpoint beyond horizon");
  }

  Simulator sim(game, y1_0, y2_0, eta);
  RegretTracker reg;
  AverageTracker avg;
  PartitionTracker part;
  const NashPoint ne = nash_equilibrium(game.matrix);

  StreamStats stats;
  if (opt.keep_ratio_samples && iterations >= opt.ratio_lo) {
    stats.ratio1_samples.reserve(iterations - opt.ratio_lo + 1);
  }

  const bool need_z = opt.track_energy || opt.track_partitions;
  double prev_energy = 0.0;
  ZPoint prev_z{};
  bool have_prev = false;
  std::vector<double> gap_env(opt.gap_checkpoints.size(), 0.0);

  for (std::uint64_t t = 0;; ++t) {
    const Vec2& x1 = sim.x1();
    const Vec2& x2 = sim.x2();
    reg.observe(sim.matrix(), x1, x2);
    avg.observe(x1, x2);

    if (sim.both_fully_mixed()) {
      stats.last_mixed_t = t;
      stats.any_mixed = true;
    }

    if (need_z) {
      const ZPoint z = sim.z();
      const double energy = total_energy(sim.coeffs(), z);
      if (opt.track_energy && have_prev) {
        stats.max_energy_drop = std::max(stats.max_energy_drop, prev_energy - energy);
        const bool z1_affine = (prev_z.z1 <= 0.0 && z.z1 <= 0.0) || (prev_z.z1 >= 1.0 && z.z1 >= 1.0);
        const bool z2_affine = (prev_z.z2 <= 0.0 && z.z2 <= 0.0) || (prev_z.z2 >= 1.0 && z.z2 >= 1.0);
        if (z1_affine && z2_affine) {
          stats.max_linear_wobble = std::max(stats.max_linear_wobble, std::fabs(energy - prev_energy));
        }
      }
      if (opt.track_partitions) part.observe(t, z, x1, x2, energy);
      prev_energy = energy;
      prev_z = z;
      have_prev = true;
    }

    if (t >= opt.ratio_lo && t >= 1) {
      const double rt = std::sqrt(static_cast<double>(t));
      const double ratio1 = reg.regret1() / rt;
      stats.max_ratio1 = std::max(stats.max_ratio1, ratio1);
      stats.max_ratio2 = std::max(stats.max_ratio2, reg.regret2() / rt);
      if (opt.keep_ratio_samples) stats.ratio1_samples.push_back(static_cast<float>(ratio1));
    }

    // Gap envelope per scale: the average-strategy distance to equilibrium
    // oscillates within each rotation (it touches ~0 twice per turn), so a
    // single-instant sample is phase luck. The max over (T/4, T] tracks the
    // decay trend independent of phase.
    if (!gap_env.empty()) {
      double gap = -1.0;
      for (std::size_t k = 0; k < gap_env.size(); ++k) {
        const std::uint64_t cp = opt.gap_checkpoints[k];
        if (t > cp / 4 && t <= cp) {
          if (gap < 0.0) gap = avg.gap(ne);
          gap_env[k] = std::max(gap_env[k], gap);
        }
      }
    }

    if (t == iterations) break;
    sim.advance();
  }

  stats.final_regret1 = reg.regret1();
  stats.final_regret2 = reg.regret2();
  stats.gap_at = std::move(gap_env);
  stats.mixed_at_horizon = stats.any_mixed && stats.last_mixed_t == iterations;
  if (opt.track_partitions) {
    part.finalize();
    stats.partitions = part.rows();
    stats.entered_partitions = part.entered();
  }
  return stats;
}

PartitionFits fit_partitions(std::span<const PartitionRow> rows, std::size_t burn_in) {
  PartitionFits fits{kNaN, kNaN, kNaN};
  if (rows.size() < burn_in + 3) return fits;
  std::vector<double> j, r, t, j2;
  j.reserve(rows.size() - burn_in);
  for (std::size_t i = burn_in; i < rows.size(); ++i) {
    const double idx = static_cast<double>(i);
    j.push_back(idx);
    j2.push_back(idx * idx);
    r.push_back(rows[i].r_start);
    t.push_back(static_cast<double>(rows[i].t_start));
  }
  const LinearFit energy = fit_linear(j, r);
  const LinearFit steps = fit_linear(j2, t);
  fits.energy_slope = energy.slope;
  fits.energy_r2 = energy.r2;
  fits.steps_r2 = steps.r2;
  return fits;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  struct Cell {
    const GameSpec* game;
    double eta;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const GameSpec& g : cfg.games) {
    for (double eta : cfg.etas) {
      for (std::uint64_t seed : cfg.seeds) cells.push_back({&g, eta, seed});
    }
  }

  std::vector<SweepRow> rows(cells.size());
  const int workers = worker_count();

#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
    const Cell& cell = cells[static_cast<std::size_t>(i)];
    SweepRow row;
    row.game = cell.game->label;
    row.eta = cell.eta;
    row.seed = cell.seed;
    try {
      const NormalizedGame game = normalize(cell.game->matrix);
      const auto [y1_0, y2_0] = random_online_y0(game.matrix, cell.eta, cell.seed);
      StreamOptions opt;
      opt.track_partitions = true;
      const StreamStats stats = stream_run(game, y1_0, y2_0, cell.eta, cfg.iterations, opt);
      row.final_regret = stats.final_regret1;
      row.max_regret_ratio = cfg.iterations >= opt.ratio_lo ? stats.max_ratio1 : kNaN;
      row.kappa = static_cast<double>(max_strategy_changes(stats.partitions));
      const PartitionFits fits = fit_partitions(stats.partitions);
      row.energy_slope = fits.energy_slope;
      row.energy_r2 = fits.energy_r2;
      row.steps_r2 = fits.steps_r2;
    } catch (const std::exception& e) {
      row.final_regret = row.max_regret_ratio = row.kappa = kNaN;
      row.energy_slope = row.energy_r2 = row.steps_r2 = kNaN;
      row.error = e.what();
    }
    rows[static_cast<std::size_t>(i)] = std::move(row);
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.game != b.game) return a.game < b.game;
    if (a.eta != b.eta) return a.eta < b.eta;
    return a.seed < b.seed;
  });
  return rows;
}

void write_summary(const std::string& outputs_dir, const std::vector<SweepRow>& rows) {
  const std::filesystem::path dir = prepare_outputs(outputs_dir);
  CsvWriter w((dir / "summary.csv").string(),
              {"game", "eta", "seed", "final_regret", "max_regret_ratio", "kappa", "energy_slope",
               "energy_r2", "tj_j2_r2", "error"});
  for (const SweepRow& r : rows) {
    // The csv format has no quoting, so commas inside error messages would
    // produce ragged rows.
    std::string error = r.error;
    std::replace(error.begin(), error.end(), ',', ';');
    w.row(r.game, r.eta, r.seed, r.final_regret, r.max_regret_ratio, r.kappa, r.energy_slope,
          r.energy_r2, r.steps_r2, error);
  }
  w.flush();
}

void run_simulate(const RunConfig& cfg) {
  const std::filesystem::path dir = prepare_outputs(cfg.outputs);
  const NormalizedGame game = normalize(cfg.game.matrix);

  auto [y1_0, y2_0] = default_y0();
  if (cfg.y0) {
    y1_0 = cfg.y0->first;
    y2_0 = cfg.y0->second;
  } else if (cfg.seed) {
    std::tie(y1_0, y2_0) = random_online_y0(game.matrix, cfg.eta, *cfg.seed);
  }

  const Trajectory traj = simulate(game, y1_0, y2_0, cfg.eta, cfg.iterations);
  const DualTransform tr = DualTransform::make(game.matrix, cfg.eta);
  const PiecewiseEnergy pe = energy_coefficients(game.matrix, cfg.eta);

  std::vector<ZPoint> z(traj.size());
  for (std::size_t t = 0; t < traj.size(); ++t) {
    z[t] = {tr.z1(traj.y11[t] - traj.lambda1), tr.z2(traj.y21[t] - traj.lambda2)};
  }

  {
    CsvWriter w((dir / "trajectory.csv").string(),
                {"t", "y11", "y12", "y21", "y22", "x11", "x21", "z1", "z2", "utility", "energy",
                 "region"});
    for (std::size_t t = 0; t < traj.size(); ++t) {
      w.row(static_cast<std::uint64_t>(t), traj.y11[t], traj.y12[t], traj.y21[t], traj.y22[t],
            traj.x11[t], traj.x21[t], z[t].z1, z[t].z2, traj.utility[t],
            total_energy(pe, z[t]), region_name(classify(z[t])));
    }
    w.flush();
  }

  const RegretSeries reg = regret(traj, 1);
  {
    CsvWriter w((dir / "regret.csv").string(), {"t", "regret", "regret2", "regret_over_sqrt_t"});
    for (std::size_t t = 0; t < traj.size(); ++t) {
      const double r = reg.regret[t];
      const double ratio = t == 0 ? 0.0 : r / std::sqrt(static_cast<double>(t));
      w.row(static_cast<std::uint64_t>(t), r, r * r, ratio);
    }
    w.flush();
  }

  {
    const NashPoint ne = nash_equilibrium(game.matrix);
    AverageTracker avg;
    CsvWriter w((dir / "average.csv").string(), {"t", "avg_x11", "avg_x21", "nash_gap"});
    for (std::size_t t = 0; t < traj.size(); ++t) {
      avg.observe({traj.x11[t], 1.0 - traj.x11[t]}, {traj.x21[t], 1.0 - traj.x21[t]});
      w.row(static_cast<std::uint64_t>(t), avg.mean_x11(), avg.mean_x21(), avg.gap(ne));
    }
    w.flush();
  }

  {
    CsvWriter w((dir / "partitions.csv").string(),
                {"j", "t_j", "region", "length", "r_j", "delta_r", "strategy_changes", "skipped"});
    const auto entry = boundary_entry_index(traj);
    if (entry) {
      if (const auto bp = break_points(z, *entry)) {
        for (const PartitionRow& row : partition_stats(traj, *bp)) {
          w.row(row.index, row.t_start, region_name(row.region), row.length, row.r_start,
                row.delta_r, row.strategy_changes, static_cast<int>(row.skipped));
        }
      }
    }
    w.flush();
  }

  {
    svg::Series strategies;
    strategies.x = traj.x11;
    strategies.y = traj.x21;
    strategies.points_only = true;
    strategies.square_markers = true;
    strategies.color = "#d97706";
    strategies.label = "played strategies";
    svg::Series zpoints;
    zpoints.x.reserve(z.size());
    zpoints.y.reserve(z.size());
    for (const ZPoint& p : z) {
      zpoints.x.push_back(p.z1);
      zpoints.y.push_back(p.z2);
    }
    zpoints.points_only = true;
    zpoints.marker_size = 1.5;
    zpoints.color = "#1f6feb";
    zpoints.label = "dual z points";
    svg::PlotOptions opts;
    opts.x_label = "x11 / z1";
    opts.y_label = "x21 / z2";
    opts.unit_square_guides = true;
    const svg::Series series[] = {zpoints, strategies};
    svg::write_plot((dir / "orbit.svg").string(), series, opts);
  }

  {
    std::vector<double> t(traj.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i);
    svg::Series line;
    line.x = t;
    line.y = reg.regret;
    svg::PlotOptions opts;
    opts.x_label = "t";
    opts.y_label = "regret";
    svg::write_plot((dir / "regret.svg").string(), std::span(&line, 1), opts);

    svg::Series sq;
    sq.x = t;
    sq.y.reserve(t.size());
    for (double r : reg.regret) sq.y.push_back(r * r);
    opts.y_label = "regret^2";
    svg::write_plot((dir / "regret2.svg").string(), std::span(&sq, 1), opts);
  }

  if (cfg.continuous_dt) {
    const double horizon = cfg.continuous_horizon
                               ? *cfg.continuous_horizon
                               : static_cast<double>(std::min<std::uint64_t>(cfg.iterations, 200));
    const ContinuousRun run = integrate(game, y1_0, y2_0, cfg.eta, horizon, *cfg.continuous_dt);
    CsvWriter w((dir / "continuous.csv").string(), {"t", "y11", "y21", "energy", "drift"});
    for (std::size_t i = 0; i < run.time.size(); ++i) {
      w.row(run.time[i], run.y11[i], run.y21[i], run.energy[i], run.energy[i] - run.energy[0]);
    }
    w.flush();
  }
}

}  // namespace zslab
