#include "zslab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "zslab/config.hpp"
#include "zslab/continuous.hpp"
#include "zslab/csv.hpp"
#include "zslab/metrics.hpp"
#include "zslab/oracles.hpp"
#include "zslab/partition.hpp"
#include "zslab/pennies.hpp"
#include "zslab/runs.hpp"
#include "zslab/stats.hpp"

namespace zslab::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void fail(CheckResult& r, const std::string& detail) {
  if (r.pass) {
    r.pass = false;
    r.detail = detail;
  }
}

void enforce_budget(CheckResult& r, double elapsed, double budget) {
  std::ostringstream os;
  os.precision(3);
  os << elapsed << "s";
  if (elapsed > budget) {
    fail(r, "over time budget: " + os.str() + " > " + format_double(budget) + "s");
  } else if (r.pass) {
    r.detail = r.detail.empty() ? os.str() : r.detail + "; " + os.str();
  }
}

// Two fixed companion games, already in canonical form (singular, positive
// diagonal dominating the off-diagonal), with asymmetric equilibria.
const PayoffMatrix2x2 kDiagHeavy{2.0, -1.0, -1.0, 0.5};
const PayoffMatrix2x2 kOffHeavy{1.5, -2.0, -0.5, 2.0 / 3.0};

struct NamedGame {
  const char* name;
  PayoffMatrix2x2 matrix;
};

std::vector<NamedGame> study_games() {
  return {{"matching-pennies", matching_pennies()},
          {"diag-heavy", kDiagHeavy},
          {"off-heavy", kOffHeavy}};
}

PayoffMatrix2x2 random_canonical_game(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> diag(0.3, 3.0);
  std::uniform_real_distribution<double> spread(-1.0, 1.0);
  const double a = diag(gen);
  const double d = diag(gen);
  const double r = std::exp(spread(gen));
  const double s = std::sqrt(a * d);
  return {a, -s * r, -s / r, d};  // off-diagonal product equals a*d: singular
}

const double kEtaGrid[] = {0.05, 0.15, 0.5, 1.0};

}  // namespace

CheckResult pennies_exact(std::uint64_t t_max) {
  CheckResult result{"matching pennies closed form, exact equality", true, 0, ""};
  const auto start = Clock::now();

  const NormalizedGame game = normalize(matching_pennies());
  Simulator sim(game, {1.0, 0.0}, {1.0, 0.0}, 1.0);
  RegretTracker reg;
  double cumulative = 0.0;

  for (std::uint64_t t = 0; t <= t_max; ++t) {
    const auto expect = pennies::exact_payoff_vectors(t);
    if (sim.y1()[0] != static_cast<double>(expect.y1[0]) ||
        sim.y1()[1] != static_cast<double>(expect.y1[1]) ||
        sim.y2()[0] != static_cast<double>(expect.y2[0]) ||
        sim.y2()[1] != static_cast<double>(expect.y2[1])) {
      fail(result, "payoff vectors diverge at t=" + std::to_string(t));
      break;
    }
    const Vec2& x1 = sim.x1();
    const Vec2& x2 = sim.x2();
    if ((x1[0] != 0.0 && x1[0] != 1.0) || (x2[0] != 0.0 && x2[0] != 1.0)) {
      fail(result, "play is not pure at t=" + std::to_string(t));
      break;
    }
    reg.observe(sim.matrix(), x1, x2);
    cumulative += sim.utility();
    if (cumulative != static_cast<double>(pennies::exact_cumulative_utility(t))) {
      fail(result, "cumulative utility diverges at t=" + std::to_string(t));
      break;
    }
    if (reg.regret1() != static_cast<double>(pennies::exact_regret(t))) {
      fail(result, "regret diverges at t=" + std::to_string(t));
      break;
    }
    result.checks += 4;
    if (t < t_max) sim.advance();
  }

  enforce_budget(result, seconds_since(start), 1.0);
  return result;
}

CheckResult projection_oracles(std::uint64_t samples, std::uint64_t seed) {
  CheckResult result{"projection vs numeric and brute-force oracles", true, 0, ""};
  const auto start = Clock::now();

  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> action_count(2, 4);
  std::uniform_real_distribution<double> payoff(-5.0, 5.0);
  std::uniform_real_distribution<double> log_eta(std::log(0.05), std::log(2.0));

  for (std::uint64_t s = 0; s < samples && result.pass; ++s) {
    const int n = action_count(gen);
    const double eta = std::exp(log_eta(gen));
    std::vector<double> y(static_cast<std::size_t>(n));
    for (double& v : y) v = payoff(gen);

    const std::vector<double> x = gd_strategy(y, eta);
    const std::vector<double> qp = oracles::qp_strategy(y, eta);
    for (int i = 0; i < n; ++i) {
      if (std::fabs(x[static_cast<std::size_t>(i)] - qp[static_cast<std::size_t>(i)]) > 1e-8) {
        fail(result, "strategy differs from numeric maximizer at sample " + std::to_string(s));
        break;
      }
    }
    if (support_set(y, eta) != oracles::best_support(y, eta)) {
      fail(result, "support set differs from brute-force search at sample " + std::to_string(s));
    }
    if (n == 2) {
      const Vec2 fast = gd_strategy2({y[0], y[1]}, eta);
      if (fast[0] != x[0] || fast[1] != x[1]) {
        fail(result, "two-action fast path differs from general path at sample " + std::to_string(s));
      }
    }
    result.checks += 2;
  }

  enforce_budget(result, seconds_since(start), 30.0);
  return result;
}

CheckResult energy_shape() {
  CheckResult result{"piecewise energy: signs, continuity, conjugate agreement", true, 0, ""};

  struct Case {
    PayoffMatrix2x2 m;
    double eta;
  };
  std::vector<Case> cases;
  for (double eta : kEtaGrid) cases.push_back({matching_pennies(), eta});
  std::mt19937_64 gen(92821);
  std::uniform_real_distribution<double> eta_dist(0.05, 1.0);
  for (int i = 0; i < 100; ++i) cases.push_back({random_canonical_game(gen), eta_dist(gen)});

  for (std::size_t ci = 0; ci < cases.size() && result.pass; ++ci) {
    const auto& [m, eta] = cases[ci];
    const PiecewiseEnergy pe = energy_coefficients(m, eta);
    for (const PlayerEnergyCoeffs* p : {&pe.p1, &pe.p2}) {
      if (!(p->gamma > 0.0)) fail(result, "quadratic coefficient not positive in case " + std::to_string(ci));
      if (!(p->alpha0 < 0.0)) fail(result, "left slope not negative in case " + std::to_string(ci));
      if (!(p->alpha1 > 0.0)) fail(result, "right slope not positive in case " + std::to_string(ci));
      const double at0 = std::fabs((-p->beta0) - (-p->beta));
      const double at1 = std::fabs((p->alpha1 - p->beta1) - (p->gamma + p->alpha - p->beta));
      if (at0 > 1e-12 || at1 > 1e-12) {
        fail(result, "piece mismatch at a breakpoint in case " + std::to_string(ci));
      }
      result.checks += 5;
    }
  }

  // Pinned values for the symmetric game at eta = 1.
  const PiecewiseEnergy mp = energy_coefficients(matching_pennies(), 1.0);
  if (mp.p1.eval(0.5) != -0.25 || mp.p1.eval(1.0) != 0.0 || mp.p1.eval(1.5) != 0.5) {
    fail(result, "pinned symmetric-game energy values are off");
  }
  result.checks += 3;

  // Agreement with the definition-level conjugate on on-line points.
  std::uniform_real_distribution<double> z_dist(-4.0, 5.0);
  for (std::uint64_t s = 0; s < 100000 && result.pass; ++s) {
    const auto& [m, eta] = cases[s % cases.size()];
    const DualTransform tr = DualTransform::make(m, eta);
    const PiecewiseEnergy pe = energy_coefficients(m, eta);
    const bool second = (s & 1) != 0;
    const double slope = second ? tr.slope2 : tr.slope1;
    const double scale = second ? tr.scale2 : tr.scale1;
    const double u = (z_dist(gen) - 0.5) / scale;
    const Vec2 y{u, slope * u};
    const double z = second ? tr.z2(u) : tr.z1(u);
    const double direct = conjugate_energy(y, eta);
    const double pieced = second ? pe.p2.eval(z) : pe.p1.eval(z);
    if (std::fabs(direct - pieced) > 1e-9) {
      fail(result, "piecewise value differs from conjugate at sample " + std::to_string(s));
    }
    ++result.checks;
  }

  return result;
}

CheckResult energy_monotone(std::uint64_t iterations) {
  CheckResult result{"energy non-decreasing; constant on affine segments", true, 0, ""};
  const NormalizedGame game = normalize(matching_pennies());

  int seed = 7;
  for (double eta : kEtaGrid) {
    std::vector<std::pair<Vec2, Vec2>> starts{default_y0(),
                                              random_online_y0(game.matrix, eta, static_cast<std::uint64_t>(seed++))};
    for (const auto& [y1_0, y2_0] : starts) {
      StreamOptions opt;
      opt.track_energy = true;
      opt.track_partitions = false;
      const StreamStats stats = stream_run(game, y1_0, y2_0, eta, iterations, opt);
      if (stats.max_energy_drop > 1e-9) {
        fail(result, "energy dropped by " + format_double(stats.max_energy_drop) +
                         " in a step at eta=" + format_double(eta));
      }
      if (stats.max_linear_wobble > 1e-9) {
        fail(result, "energy moved by " + format_double(stats.max_linear_wobble) +
                         " inside an affine segment at eta=" + format_double(eta));
      }
      result.checks += 2 * iterations;
    }
  }
  return result;
}

LongRunChecks long_runs(std::uint64_t iterations) {
  LongRunChecks out{
      {"regret/sqrt(t) bounded over the long horizon", true, 0, ""},
      {"boundary entry is reached and final", true, 0, ""},
      {"time-average strategies approach equilibrium", true, 0, ""},
  };
  const auto start = Clock::now();

  struct Run {
    std::string label;
    const NamedGame* game;
    double eta;
    std::uint64_t seed;
    double max_ratio = 0.0;
    double med_ratio = 0.0;
    bool any_mixed = false;
    bool mixed_at_horizon = false;
    std::vector<double> gaps;
    std::string error;
  };

  const std::vector<NamedGame> games = study_games();
  std::vector<Run> runs;
  for (const NamedGame& g : games) {
    for (double eta : kEtaGrid) {
      for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Run r;
        r.label = std::string(g.name) + " eta=" + format_double(eta) + " seed=" + std::to_string(seed);
        r.game = &g;
        r.eta = eta;
        r.seed = seed;
        runs.push_back(std::move(r));
      }
    }
  }

  const int workers = worker_count();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(runs.size()); ++i) {
    Run& r = runs[static_cast<std::size_t>(i)];
    try {
      const NormalizedGame game = normalize(r.game->matrix);
      const auto [y1_0, y2_0] = random_online_y0(game.matrix, r.eta, r.seed);
      StreamOptions opt;
      opt.track_partitions = false;
      opt.keep_ratio_samples = true;
      opt.gap_checkpoints = {10000, 40000, 160000, 640000};
      StreamStats stats = stream_run(game, y1_0, y2_0, r.eta, iterations, opt);
      r.max_ratio = stats.max_ratio1;
      r.med_ratio = median(stats.ratio1_samples);
      r.any_mixed = stats.any_mixed;
      r.mixed_at_horizon = stats.mixed_at_horizon;
      r.gaps = stats.gap_at;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  }

  double worst_spread = 0.0;
  std::string worst_spread_label;
  double worst_shrink = 1e300;
  std::string worst_shrink_label;

  for (const Run& r : runs) {
    if (!r.error.empty()) {
      fail(out.regret_ratio, r.label + ": " + r.error);
      fail(out.boundary, r.label + ": " + r.error);
      fail(out.average_gap, r.label + ": " + r.error);
      continue;
    }

    if (!std::isfinite(r.max_ratio) || !(r.med_ratio > 0.0) || r.max_ratio > 3.0 * r.med_ratio) {
      fail(out.regret_ratio, r.label + ": max " + format_double(r.max_ratio) + " vs median " +
                                 format_double(r.med_ratio));
    }
    if (r.med_ratio > 0.0 && r.max_ratio / r.med_ratio > worst_spread) {
      worst_spread = r.max_ratio / r.med_ratio;
      worst_spread_label = r.label;
    }
    ++out.regret_ratio.checks;

    if (r.mixed_at_horizon) {
      fail(out.boundary, r.label + ": still fully mixed at the horizon");
    }
    ++out.boundary.checks;

    bool gap_ok = r.gaps.size() == 4;
    for (std::size_t k = 0; gap_ok && k + 1 < r.gaps.size(); ++k) {
      const double shrink = r.gaps[k + 1] > 0.0 ? r.gaps[k] / r.gaps[k + 1] : 1e300;
      if (shrink < worst_shrink) {
        worst_shrink = shrink;
        worst_shrink_label = r.label;
      }
      if (!(r.gaps[k] > r.gaps[k + 1]) || r.gaps[k] < 1.5 * r.gaps[k + 1]) gap_ok = false;
    }
    if (!gap_ok) {
      std::string gaps;
      for (double g : r.gaps) gaps += (gaps.empty() ? "" : ", ") + format_double(g);
      fail(out.average_gap, r.label + ": gaps [" + gaps + "]");
    }
    out.average_gap.checks += 3;
  }

  if (out.regret_ratio.pass) {
    out.regret_ratio.detail = "worst max/median " + format_double(worst_spread) + " (" + worst_spread_label + ")";
  }
  if (out.average_gap.pass && worst_shrink < 1e300) {
    out.average_gap.detail = "worst shrink factor " + format_double(worst_shrink) + " (" + worst_shrink_label + ")";
  }
  enforce_budget(out.regret_ratio, seconds_since(start), 300.0);
  return out;
}

CheckResult partition_structure(std::uint64_t min_partitions) {
  CheckResult result{"partition sequence: stable kappa, linear energy, quadratic times", true, 0, ""};

  struct Setup {
    std::string label;
    PayoffMatrix2x2 m;
    double eta;
    std::uint64_t seed;  // 0 means the default start
  };
  std::vector<Setup> setups;
  for (double eta : kEtaGrid) {
    setups.push_back({"matching-pennies eta=" + format_double(eta), matching_pennies(), eta, 0});
  }
  setups.push_back({"diag-heavy eta=0.15", kDiagHeavy, 0.15, 1});
  setups.push_back({"off-heavy eta=0.15", kOffHeavy, 0.15, 1});

  for (const Setup& s : setups) {
    const NormalizedGame game = normalize(s.m);
    auto [y1_0, y2_0] = default_y0();
    if (s.seed != 0) std::tie(y1_0, y2_0) = random_online_y0(game.matrix, s.eta, s.seed);

    Simulator sim(game, y1_0, y2_0, s.eta);
    PartitionTracker part;
    const std::uint64_t target = min_partitions + 10;
    const std::uint64_t cap = 50'000'000;
    std::uint64_t t = 0;
    while (part.closed_count() < target && t <= cap) {
      part.observe(t, sim.z(), sim.x1(), sim.x2(), sim.energy());
      sim.advance();
      ++t;
    }
    part.finalize();

    const auto& rows = part.rows();
    if (part.closed_count() < target) {
      fail(result, s.label + ": only " + std::to_string(part.closed_count()) + " partitions in " +
                       std::to_string(t) + " iterations");
      continue;
    }

    // No growth trend: compare the largest strategy-change count in the first
    // and last tenth of the completed partitions.
    const std::size_t closed = static_cast<std::size_t>(part.closed_count());
    const std::size_t tenth = std::max<std::size_t>(1, closed / 10);
    const auto head = std::span(rows).subspan(0, tenth);
    const auto tail = std::span(rows).subspan(closed - tenth, tenth);
    const std::uint64_t head_max = max_strategy_changes(head);
    const std::uint64_t tail_max = max_strategy_changes(tail);
    if (tail_max > head_max + 1) {
      fail(result, s.label + ": changes per partition grew from " + std::to_string(head_max) +
                       " to " + std::to_string(tail_max));
    }

    const PartitionFits fits = fit_partitions(std::span(rows).subspan(0, closed));
    if (!(fits.energy_r2 >= 0.99)) {
      fail(result, s.label + ": energy-vs-index fit R2 " + format_double(fits.energy_r2));
    }
    if (!(fits.steps_r2 >= 0.99)) {
      fail(result, s.label + ": time-vs-index^2 fit R2 " + format_double(fits.steps_r2));
    }
    result.checks += 3;
  }
  return result;
}

CheckResult continuous_limit() {
  CheckResult result{"Euler reference: dt=1 equals discrete; drift shrinks with dt", true, 0, ""};
  const NormalizedGame game = normalize(matching_pennies());
  const auto [y1_0, y2_0] = default_y0();
  const double eta = 0.15;

  const std::uint64_t t_check = 512;
  const Trajectory traj = simulate(game, y1_0, y2_0, eta, t_check);
  const ContinuousRun unit = integrate(game, y1_0, y2_0, eta, static_cast<double>(t_check), 1.0);
  for (std::uint64_t t = 0; t <= t_check; ++t) {
    if (std::fabs(unit.y11[t] - traj.y11[t]) > 1e-12 || std::fabs(unit.y21[t] - traj.y21[t]) > 1e-12) {
      fail(result, "dt=1 differs from the discrete run at t=" + std::to_string(t));
      break;
    }
    ++result.checks;
  }

  // One full rotation: from the partition entry to four region changes later.
  const Trajectory probe = simulate(game, y1_0, y2_0, eta, 4000);
  std::vector<ZPoint> z(probe.size());
  for (std::size_t t = 0; t < probe.size(); ++t) z[t] = probe.z_at(t);
  const auto entry = boundary_entry_index(probe);
  const auto bp = entry ? break_points(z, *entry) : std::nullopt;
  if (!bp || bp->t.size() < 6) {
    fail(result, "probe run produced too few partitions for a rotation window");
    return result;
  }
  const double horizon = static_cast<double>(bp->t[5]);

  double prev_drift = 0.0;
  bool first = true;
  for (double dt : {1.0, 0.5, 0.25, 0.125, 0.0625}) {
    const ContinuousRun run = integrate(game, y1_0, y2_0, eta, horizon, dt);
    const double drift = run.drift();
    if (drift < -1e-9) {
      fail(result, "negative energy drift " + format_double(drift) + " at dt=" + format_double(dt));
    }
    if (!first && drift > prev_drift + 1e-9) {
      fail(result, "drift increased from " + format_double(prev_drift) + " to " + format_double(drift) +
                       " when halving dt to " + format_double(dt));
    }
    prev_drift = drift;
    first = false;
    ++result.checks;
  }
  if (result.pass) result.detail = "residual drift " + format_double(prev_drift) + " at dt=1/16";
  return result;
}

CheckResult plot_outputs(const std::string& outdir) {
  CheckResult result{"single-run plot set: files present, squared envelope linear", true, 0, ""};

  RunConfig cfg;
  cfg.game = preset_game("matching-pennies");
  cfg.eta = 0.15;
  cfg.iterations = 5000;
  cfg.outputs = outdir;
  cfg.y0 = default_y0();
  run_simulate(cfg);

  const std::filesystem::path dir(outdir);
  for (const char* name : {"orbit.svg", "regret.svg", "regret2.svg", "trajectory.csv",
                           "regret.csv", "average.csv", "partitions.csv"}) {
    std::error_code ec;
    const auto size = std::filesystem::file_size(dir / name, ec);
    if (ec || size == 0) {
      fail(result, std::string("missing or empty output: ") + name);
    }
    ++result.checks;
  }
  if (!result.pass) return result;

  const CsvTable reg = CsvTable::read_file((dir / "regret.csv").string());
  const std::vector<double> regret = reg.numeric_column("regret");
  std::vector<double> t(regret.size()), env_sq(regret.size());
  double run_max = 0.0;
  for (std::size_t i = 0; i < regret.size(); ++i) {
    run_max = std::max(run_max, regret[i]);
    t[i] = static_cast<double>(i);
    env_sq[i] = run_max * run_max;
  }
  const LinearFit fit = fit_linear(t, env_sq);
  if (!(fit.r2 >= 0.95)) {
    fail(result, "squared regret envelope fit R2 " + format_double(fit.r2));
  } else {
    result.detail = "envelope fit R2 " + format_double(fit.r2);
  }
  ++result.checks;
  return result;
}

}  // namespace zslab::verify
