#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zslab/game.hpp"

namespace zslab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A payoff matrix plus the label it carries through outputs ("matching-pennies"
// for the preset, a compact entry list otherwise).
struct GameSpec {
  std::string label;
  PayoffMatrix2x2 matrix;
};

GameSpec preset_game(const std::string& name);  // throws ConfigError on unknown preset

struct RunConfig {
  GameSpec game;
  double eta = 0.15;
  std::optional<std::pair<Vec2, Vec2>> y0;
  std::optional<std::uint64_t> seed;  // used to draw y0 when y0 is absent
  std::uint64_t iterations = 5000;
  std::string outputs = ".";
  // Optional continuous-limit companion run (writes continuous.csv).
  std::optional<double> continuous_dt;
  std::optional<double> continuous_horizon;
};

struct SweepConfig {
  std::vector<GameSpec> games;
  std::vector<double> etas;
  std::vector<std::uint64_t> seeds;
  std::uint64_t iterations = 100000;
  std::string outputs = ".";
};

// Both throw ConfigError with the offending field named.
RunConfig load_run_config(const std::string& path);
SweepConfig load_sweep_config(const std::string& path);

}  // namespace zslab
