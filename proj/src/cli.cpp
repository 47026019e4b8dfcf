#include "zslab/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zslab/config.hpp"
#include "zslab/csv.hpp"
#include "zslab/runs.hpp"
#include "zslab/svg.hpp"
#include "zslab/verify.hpp"

namespace zslab {
namespace {

bool print_result(const verify::CheckResult& r) {
  if (r.pass) {
    std::printf("[PASS] %s — %llu checks%s%s\n", r.name.c_str(),
                static_cast<unsigned long long>(r.checks), r.detail.empty() ? "" : "; ",
                r.detail.c_str());
  } else {
    std::printf("[FAIL] %s: %s\n", r.name.c_str(), r.detail.c_str());
  }
  std::fflush(stdout);
  return r.pass;
}

struct SimulateArgs {
  std::string config;
  std::string game;
  double eta = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  std::string out;
  double continuous_dt = 0.0;
  double continuous_horizon = 0.0;
};

int do_simulate(const CLI::App& cmd, const SimulateArgs& a) {
  RunConfig cfg;
  if (!a.config.empty()) {
    cfg = load_run_config(a.config);
  } else {
    cfg.game = preset_game("matching-pennies");
  }
  if (cmd.count("--game") != 0u) cfg.game = preset_game(a.game);
  if (cmd.count("--eta") != 0u) cfg.eta = a.eta;
  if (cmd.count("--iterations") != 0u) cfg.iterations = a.iterations;
  if (cmd.count("--seed") != 0u) cfg.seed = a.seed;
  if (cmd.count("--out") != 0u) cfg.outputs = a.out;
  if (cmd.count("--continuous-dt") != 0u) cfg.continuous_dt = a.continuous_dt;
  if (cmd.count("--continuous-horizon") != 0u) cfg.continuous_horizon = a.continuous_horizon;
  if (cfg.eta <= 0.0) throw ConfigError("eta must be positive");
  if (cfg.iterations == 0) throw ConfigError("iterations must be at least 1");

  run_simulate(cfg);
  std::printf("simulate: %s, eta=%s, %llu iterations -> %s\n", cfg.game.label.c_str(),
              format_double(cfg.eta).c_str(), static_cast<unsigned long long>(cfg.iterations),
              cfg.outputs.c_str());
  return 0;
}

int do_sweep(const CLI::App& cmd, const std::string& config, const std::string& out) {
  SweepConfig cfg = load_sweep_config(config);
  if (cmd.count("--out") != 0u) cfg.outputs = out;

  const std::vector<SweepRow> rows = run_sweep(cfg);
  write_summary(cfg.outputs, rows);

  std::size_t failed = 0;
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) {
      ++failed;
      std::fprintf(stderr, "sweep cell failed: %s eta=%s seed=%llu: %s\n", r.game.c_str(),
                   format_double(r.eta).c_str(), static_cast<unsigned long long>(r.seed),
                   r.error.c_str());
    }
  }
  std::printf("sweep: %zu cells (%zu failed) -> %s/summary.csv\n", rows.size(), failed,
              cfg.outputs.c_str());
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::uint64_t t_max = 20100;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20240817;
  std::uint64_t iterations = 1000000;
  std::uint64_t min_partitions = 1000;
  std::string out = "verify-out";
};

int do_verify(const VerifyArgs& a) {
  std::vector<std::string> suites = a.suites;
  if (suites.empty()) suites = {"pennies", "projection", "energy", "partitions", "continuous"};
  if (std::find(suites.begin(), suites.end(), "all") != suites.end()) {
    suites = {"pennies", "projection", "energy", "partitions", "continuous", "long-runs", "plots"};
  }

  bool ok = true;
  for (const std::string& s : suites) {
    if (s == "pennies") {
      ok &= print_result(verify::pennies_exact(a.t_max));
    } else if (s == "projection") {
      ok &= print_result(verify::projection_oracles(a.samples, a.seed));
    } else if (s == "energy") {
      ok &= print_result(verify::energy_shape());
      ok &= print_result(verify::energy_monotone(a.iterations));
    } else if (s == "partitions") {
      ok &= print_result(verify::partition_structure(a.min_partitions));
    } else if (s == "continuous") {
      ok &= print_result(verify::continuous_limit());
    } else if (s == "long-runs") {
      const verify::LongRunChecks lr = verify::long_runs(a.iterations);
      ok &= print_result(lr.regret_ratio);
      ok &= print_result(lr.boundary);
      ok &= print_result(lr.average_gap);
    } else if (s == "plots") {
      ok &= print_result(verify::plot_outputs(a.out));
    }
  }
  return ok ? 0 : 2;
}

int do_plot(const std::string& csv_path, const std::string& kind, const std::string& out) {
  const CsvTable table = CsvTable::read_file(csv_path);
  std::vector<svg::Series> series;
  svg::PlotOptions opt;

  if (kind == "orbit") {
    svg::Series z;
    z.x = table.numeric_column("z1");
    z.y = table.numeric_column("z2");
    z.points_only = true;
    z.label = "dual z points";
    series.push_back(std::move(z));
    if (std::find(table.columns.begin(), table.columns.end(), "x11") != table.columns.end() &&
        std::find(table.columns.begin(), table.columns.end(), "x21") != table.columns.end()) {
      svg::Series x;
      x.x = table.numeric_column("x11");
      x.y = table.numeric_column("x21");
      x.points_only = true;
      x.square_markers = true;
      x.color = "#d97706";
      x.label = "played strategies";
      series.push_back(std::move(x));
    }
    opt.x_label = "x11 / z1";
    opt.y_label = "x21 / z2";
    opt.unit_square_guides = true;
  } else if (kind.rfind("line:", 0) == 0) {
    const std::string column = kind.substr(5);
    if (column.empty()) throw ConfigError("plot kind line: needs a column name");
    svg::Series s;
    s.x = table.numeric_column(table.columns.at(0));
    s.y = table.numeric_column(column);
    s.label = column;
    series.push_back(std::move(s));
    opt.x_label = table.columns.at(0);
    opt.y_label = column;
  } else {
    throw ConfigError("unknown plot kind '" + kind + "' (expected orbit or line:COLUMN)");
  }

  svg::write_plot(out, series, opt);
  std::printf("plot: %s (%s) -> %s\n", csv_path.c_str(), kind.c_str(), out.c_str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"zero-sum gradient-descent lab: simulate, sweep, verify, plot"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run one game and write csv/svg outputs");
  simulate->add_option("--config", sim.config, "run config json")->check(CLI::ExistingFile);
  simulate->add_option("--game", sim.game, "preset game name");
  simulate->add_option("--eta", sim.eta, "learning rate");
  simulate->add_option("--iterations", sim.iterations, "number of steps");
  simulate->add_option("--seed", sim.seed, "seed for a random on-line start");
  simulate->add_option("--out", sim.out, "output directory");
  simulate->add_option("--continuous-dt", sim.continuous_dt, "also run the Euler reference at this dt");
  simulate->add_option("--continuous-horizon", sim.continuous_horizon, "horizon for the Euler reference");

  std::string sweep_config, sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "run a grid of games/etas/seeds into summary.csv");
  sweep->add_option("--config", sweep_config, "sweep config json")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_out, "output directory");

  VerifyArgs ver;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run self-verification suites");
  verify_cmd->add_option("suites", ver.suites, "suites to run (default: fast set)")
      ->check(CLI::IsMember({"pennies", "projection", "energy", "partitions", "continuous",
                             "long-runs", "plots", "all"}));
  verify_cmd->add_option("--t-max", ver.t_max, "closed-form horizon for the pennies suite");
  verify_cmd->add_option("--samples", ver.samples, "random samples for the projection suite");
  verify_cmd->add_option("--seed", ver.seed, "seed for randomized suites");
  verify_cmd->add_option("--iterations", ver.iterations, "horizon for energy/long-run suites");
  verify_cmd->add_option("--min-partitions", ver.min_partitions, "partitions per run for the partition suite");
  verify_cmd->add_option("--out", ver.out, "output directory for the plots suite");

  std::uint64_t pennies_t_max = 20100;
  CLI::App* verify_pennies =
      app.add_subcommand("verify-pennies", "shortcut for `verify pennies`");
  verify_pennies->add_option("--t-max", pennies_t_max, "closed-form horizon");

  std::string plot_csv, plot_kind, plot_out;
  CLI::App* plot = app.add_subcommand("plot", "render a csv file to svg");
  plot->add_option("--csv", plot_csv, "input csv")->required()->check(CLI::ExistingFile);
  plot->add_option("--kind", plot_kind, "orbit or line:COLUMN")->required();
  plot->add_option("--out", plot_out, "output svg path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(simulate)) return do_simulate(*simulate, sim);
    if (app.got_subcommand(sweep)) return do_sweep(*sweep, sweep_config, sweep_out);
    if (app.got_subcommand(verify_cmd)) return do_verify(ver);
    if (app.got_subcommand(verify_pennies)) {
      return print_result(verify::pennies_exact(pennies_t_max)) ? 0 : 2;
    }
    if (app.got_subcommand(plot)) return do_plot(plot_csv, plot_kind, plot_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "zslab: error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace zslab
