#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "zslab/cli.hpp"
#include "zslab/config.hpp"
#include "zslab/csv.hpp"
#include "zslab/game.hpp"
#include "zslab/runs.hpp"
#include "zslab/svg.hpp"

using namespace zslab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path("unit-io") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"zslab"};
  argv.insert(argv.end(), args.begin(), args.end());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("doubles print in shortest round-trip form") {
  CHECK(format_double(0.15) == "0.15");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.5) == "-0.5");
  for (const double v : {0.1 + 0.2, 1.0 / 3.0, 1e-20, 123456.789, -2.0 / 3.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("csv files round-trip through the reader") {
  const fs::path dir = fresh_dir("csv");
  const std::string path = (dir / "table.csv").string();
  CsvWriter w(path, {"t", "value", "name"});
  w.row(std::uint64_t{0}, 0.15, "alpha");
  w.row(std::uint64_t{1}, -2.5, std::string("beta"));
  CHECK_THROWS_AS(w.row(1.0), CsvError);
  w.flush();

  const CsvTable table = CsvTable::read_file(path);
  CHECK(table.columns == std::vector<std::string>{"t", "value", "name"});
  REQUIRE(table.rows.size() == 2);
  CHECK(table.column_index("name") == 2);
  CHECK(table.numeric_column("value") == std::vector<double>{0.15, -2.5});
  CHECK(table.rows[1][2] == "beta");
  try {
    table.numeric_column("missing");
    FAIL("expected an error for the missing column");
  } catch (const CsvError& e) {
    CHECK(std::string(e.what()).find("missing") != std::string::npos);
  }
}

TEST_CASE("the reader rejects ragged, empty, and absent files") {
  const fs::path dir = fresh_dir("bad-csv");
  {
    std::ofstream out(dir / "ragged.csv");
    out << "a,b\n1,2\n3\n";
  }
  CHECK_THROWS_AS(CsvTable::read_file((dir / "ragged.csv").string()), CsvError);
  { std::ofstream out(dir / "empty.csv"); }
  CHECK_THROWS_AS(CsvTable::read_file((dir / "empty.csv").string()), CsvError);
  CHECK_THROWS_AS(CsvTable::read_file((dir / "nope.csv").string()), CsvError);
}

TEST_CASE("simulation outputs are deterministic and complete") {
  const fs::path a = fresh_dir("run-a");
  const fs::path b = fresh_dir("run-b");
  RunConfig cfg;
  cfg.game = preset_game("matching-pennies");
  cfg.eta = 0.15;
  cfg.iterations = 400;
  cfg.outputs = a.string();
  run_simulate(cfg);
  cfg.outputs = b.string();
  run_simulate(cfg);

  for (const char* name : {"trajectory.csv", "regret.csv", "average.csv", "partitions.csv"}) {
    const std::string left = slurp(a / name);
    CHECK(left == slurp(b / name));
    CHECK(!left.empty());
  }
  for (const char* name : {"orbit.svg", "regret.svg", "regret2.svg"}) {
    CHECK(slurp(a / name).find("<svg") != std::string::npos);
  }

  const CsvTable traj = CsvTable::read_file((a / "trajectory.csv").string());
  CHECK(traj.rows.size() == 401);
  CHECK(traj.columns.size() == 12);

  const CsvTable reg = CsvTable::read_file((a / "regret.csv").string());
  CHECK(reg.columns ==
        std::vector<std::string>{"t", "regret", "regret2", "regret_over_sqrt_t"});
  const std::vector<double> r = reg.numeric_column("regret");
  const std::vector<double> r2 = reg.numeric_column("regret2");
  REQUIRE(r.size() == 401);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(r2[i] == r[i] * r[i]);
}

TEST_CASE("a one-iteration run still writes every file") {
  const fs::path dir = fresh_dir("tiny");
  RunConfig cfg;
  cfg.game = preset_game("matching-pennies");
  cfg.eta = 0.5;
  cfg.iterations = 1;
  cfg.outputs = dir.string();
  cfg.y0 = std::make_pair(Vec2{1.0, 0.0}, Vec2{1.0, 0.0});
  run_simulate(cfg);
  const CsvTable traj = CsvTable::read_file((dir / "trajectory.csv").string());
  CHECK(traj.rows.size() == 2);
  CHECK(fs::exists(dir / "partitions.csv"));
  CHECK(fs::exists(dir / "orbit.svg"));
}

TEST_CASE("a configured substep writes the flow comparison file") {
  const fs::path dir = fresh_dir("flow");
  RunConfig cfg;
  cfg.game = preset_game("matching-pennies");
  cfg.iterations = 64;
  cfg.outputs = dir.string();
  cfg.continuous_dt = 0.5;
  cfg.continuous_horizon = 32.0;
  run_simulate(cfg);
  const CsvTable flow = CsvTable::read_file((dir / "continuous.csv").string());
  CHECK(flow.columns == std::vector<std::string>{"t", "y11", "y21", "energy", "drift"});
  CHECK(flow.rows.size() == 65);
  CHECK(flow.numeric_column("drift").front() == 0.0);
}

TEST_CASE("sweeps record per-cell failures without aborting") {
  const fs::path dir = fresh_dir("sweep");
  SweepConfig cfg;
  cfg.games.push_back(preset_game("matching-pennies"));
  cfg.games.push_back(GameSpec{"degenerate", {1.0, 1.0, 1.0, 1.0}});
  cfg.etas = {0.5};
  cfg.seeds = {1};
  cfg.iterations = 2000;
  cfg.outputs = dir.string();

  const std::vector<SweepRow> rows = run_sweep(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].game == "degenerate");
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[1].game == "matching-pennies");
  CHECK(rows[1].error.empty());
  CHECK(rows[1].final_regret > 0.0);
  CHECK(rows[1].max_regret_ratio > 0.0);
  CHECK(rows[1].kappa >= 1.0);

  write_summary(dir.string(), rows);
  const CsvTable summary = CsvTable::read_file((dir / "summary.csv").string());
  CHECK(summary.rows.size() == 2);
}

TEST_CASE("an empty sweep grid writes a header-only summary") {
  const fs::path dir = fresh_dir("sweep-empty");
  SweepConfig cfg;
  cfg.games.push_back(preset_game("matching-pennies"));
  cfg.seeds = {1};
  cfg.iterations = 100;
  cfg.outputs = dir.string();
  const std::vector<SweepRow> rows = run_sweep(cfg);
  CHECK(rows.empty());
  write_summary(dir.string(), rows);
  const CsvTable summary = CsvTable::read_file((dir / "summary.csv").string());
  CHECK(summary.rows.empty());
  CHECK(summary.columns.size() == 10);
}

TEST_CASE("run configs load with validation") {
  const fs::path dir = fresh_dir("config");
  const fs::path good = dir / "run.json";
  {
    std::ofstream out(good);
    out << R"({"game": {"a": 2, "b": -1, "c": -2, "d": 4},
               "eta": 0.25, "iterations": 50, "outputs": "out",
               "y0": [[0.2, -0.2], [-0.3, 0.3]],
               "continuous": {"dt": 0.25, "horizon": 16}})";
  }
  const RunConfig cfg = load_run_config(good.string());
  CHECK(cfg.game.matrix == PayoffMatrix2x2{2.0, -1.0, -2.0, 4.0});
  CHECK(cfg.game.label == "a=2;b=-1;c=-2;d=4");
  CHECK(cfg.eta == 0.25);
  CHECK(cfg.iterations == 50);
  REQUIRE(cfg.y0.has_value());
  CHECK(cfg.y0->first[1] == -0.2);
  CHECK(cfg.y0->second[0] == -0.3);
  REQUIRE(cfg.continuous_dt.has_value());
  CHECK(*cfg.continuous_dt == 0.25);
  REQUIRE(cfg.continuous_horizon.has_value());
  CHECK(*cfg.continuous_horizon == 16.0);
  CHECK_FALSE(cfg.seed.has_value());

  const fs::path bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << R"({"game": "matching-pennies", "eta": 0.5, "outputs": "x"})";
  }
  try {
    load_run_config(bad.string());
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("iterations") != std::string::npos);
  }

  const fs::path neg = dir / "neg.json";
  {
    std::ofstream out(neg);
    out << R"({"game": "matching-pennies", "eta": -0.5, "iterations": 10, "outputs": "x"})";
  }
  CHECK_THROWS_AS(load_run_config(neg.string()), ConfigError);
  CHECK_THROWS_AS(load_run_config((dir / "missing.json").string()), ConfigError);
  {
    std::ofstream out(dir / "syntax.json");
    out << "{not json";
  }
  CHECK_THROWS_AS(load_run_config((dir / "syntax.json").string()), ConfigError);
  CHECK_THROWS_AS(preset_game("unknown"), ConfigError);
}

TEST_CASE("sweep configs expand seed counts") {
  const fs::path dir = fresh_dir("sweep-config");
  const fs::path path = dir / "sweep.json";
  {
    std::ofstream out(path);
    out << R"({"games": ["matching-pennies", {"a": 2, "b": -1, "c": -2, "d": 4}],
               "etas": [0.15, 0.5], "seeds": 3, "iterations": 100, "outputs": "x"})";
  }
  const SweepConfig cfg = load_sweep_config(path.string());
  CHECK(cfg.games.size() == 2);
  CHECK(cfg.etas == std::vector<double>{0.15, 0.5});
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(cfg.iterations == 100);

  const fs::path bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << R"({"games": ["matching-pennies"], "etas": "nope", "iterations": 5, "outputs": "x"})";
  }
  try {
    load_sweep_config(bad.string());
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("etas") != std::string::npos);
  }
}

TEST_CASE("plots embed guides, labels, and markers") {
  const fs::path dir = fresh_dir("svg");
  svg::Series s;
  s.x = {0.0, 0.5, 1.0};
  s.y = {0.25, 0.75, 0.5};
  s.points_only = true;
  s.label = "dual z points";
  svg::PlotOptions opts;
  opts.x_label = "x11 / z1";
  opts.y_label = "x21 / z2";
  opts.unit_square_guides = true;
  const std::string path = (dir / "orbit.svg").string();
  svg::write_plot(path, std::span(&s, 1), opts);
  const std::string text = slurp(path);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("stroke-dasharray") != std::string::npos);
  CHECK(text.find("dual z points") != std::string::npos);
  CHECK(text.find("x21 / z2") != std::string::npos);
}

TEST_CASE("the command line reports usage and verification outcomes") {
  CHECK(cli({"simulate", "--config", "does-not-exist.json"}) == 1);
  CHECK(cli({"bogus-subcommand"}) == 1);
  CHECK(cli({"verify-pennies", "--t-max", "100"}) == 0);

  const fs::path dir = fresh_dir("cli-run");
  const std::string out = dir.string();
  CHECK(cli({"simulate", "--iterations", "50", "--out", out.c_str()}) == 0);
  CHECK(fs::exists(dir / "trajectory.csv"));

  const std::string csvpath = (dir / "trajectory.csv").string();
  const std::string orbit = (dir / "replot.svg").string();
  CHECK(cli({"plot", "--csv", csvpath.c_str(), "--kind", "orbit", "--out", orbit.c_str()}) == 0);
  CHECK(slurp(orbit).find("<svg") != std::string::npos);

  const std::string regpath = (dir / "regret.csv").string();
  const std::string line = (dir / "regret2-line.svg").string();
  CHECK(cli({"plot", "--csv", regpath.c_str(), "--kind", "line:regret2", "--out", line.c_str()}) == 0);
  CHECK(slurp(line).find("<svg") != std::string::npos);
  CHECK(cli({"plot", "--csv", regpath.c_str(), "--kind", "line:nope", "--out", line.c_str()}) == 1);
}
