#include "zslab/config.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "zslab/csv.hpp"

namespace zslab {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
}

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw ConfigError("config field '" + field + "' must be a number");
  }
  return j[field].get<double>();
}

GameSpec parse_game(const json& j) {
  if (j.is_string()) return preset_game(j.get<std::string>());
  if (j.is_object()) {
    PayoffMatrix2x2 m{require_number(j, "a"), require_number(j, "b"),
                      require_number(j, "c"), require_number(j, "d")};
    std::string label = "a=" + format_double(m.a) + ";b=" + format_double(m.b) +
                        ";c=" + format_double(m.c) + ";d=" + format_double(m.d);
    return {std::move(label), m};
  }
  throw ConfigError("config field 'game' must be a preset name or an {a,b,c,d} object");
}

std::uint64_t parse_iterations(const json& j) {
  if (!j.contains("iterations")) throw ConfigError("config field 'iterations' is required");
  if (!j["iterations"].is_number_unsigned() || j["iterations"].get<std::uint64_t>() < 1) {
    throw ConfigError("config field 'iterations' must be a positive integer");
  }
  return j["iterations"].get<std::uint64_t>();
}

double parse_eta(const json& j) {
  const double eta = require_number(j, "eta");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw ConfigError("config field 'eta' must be positive");
  return eta;
}

std::string parse_outputs(const json& j) {
  if (!j.contains("outputs")) throw ConfigError("config field 'outputs' is required");
  if (!j["outputs"].is_string()) throw ConfigError("config field 'outputs' must be a string path");
  return j["outputs"].get<std::string>();
}

}  // namespace

GameSpec preset_game(const std::string& name) {
  if (name == "matching-pennies") return {"matching-pennies", matching_pennies()};
  throw ConfigError("unknown game preset '" + name + "' (available: matching-pennies)");
}

RunConfig load_run_config(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object()) throw ConfigError("config root must be an object: " + path);

  RunConfig cfg;
  if (!j.contains("game")) throw ConfigError("config field 'game' is required");
  cfg.game = parse_game(j["game"]);
  cfg.eta = parse_eta(j);
  cfg.iterations = parse_iterations(j);
  cfg.outputs = parse_outputs(j);

  if (j.contains("y0")) {
    const json& y = j["y0"];
    if (!y.is_array() || y.size() != 2 || !y[0].is_array() || y[0].size() != 2 ||
        !y[1].is_array() || y[1].size() != 2) {
      throw ConfigError("config field 'y0' must be [[y11,y12],[y21,y22]]");
    }
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        if (!y[i][k].is_number()) throw ConfigError("config field 'y0' entries must be numbers");
      }
    }
    cfg.y0 = {Vec2{y[0][0].get<double>(), y[0][1].get<double>()},
              Vec2{y[1][0].get<double>(), y[1][1].get<double>()}};
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ConfigError("config field 'seed' must be a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("continuous")) {
    const json& c = j["continuous"];
    if (!c.is_object()) throw ConfigError("config field 'continuous' must be an object");
    const double dt = require_number(c, "dt");
    if (!(dt > 0.0) || dt > 1.0) throw ConfigError("config field 'continuous.dt' must be in (0, 1]");
    cfg.continuous_dt = dt;
    if (c.contains("horizon")) {
      const double h = require_number(c, "horizon");
      if (!(h > 0.0)) throw ConfigError("config field 'continuous.horizon' must be positive");
      cfg.continuous_horizon = h;
    }
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object()) throw ConfigError("config root must be an object: " + path);

  SweepConfig cfg;
  if (j.contains("games")) {
    if (!j["games"].is_array()) throw ConfigError("config field 'games' must be an array");
    for (const json& g : j["games"]) cfg.games.push_back(parse_game(g));
  } else if (j.contains("game")) {
    cfg.games.push_back(parse_game(j["game"]));
  } else {
    throw ConfigError("sweep config needs 'game' or 'games'");
  }

  if (!j.contains("etas") || !j["etas"].is_array()) {
    throw ConfigError("config field 'etas' must be an array of step sizes");
  }
  for (const json& e : j["etas"]) {
    if (!e.is_number() || !(e.get<double>() > 0.0)) {
      throw ConfigError("config field 'etas' entries must be positive numbers");
    }
    cfg.etas.push_back(e.get<double>());
  }

  if (j.contains("seeds")) {
    const json& s = j["seeds"];
    if (s.is_array()) {
      for (const json& v : s) {
        if (!v.is_number_unsigned()) throw ConfigError("config field 'seeds' entries must be non-negative integers");
        cfg.seeds.push_back(v.get<std::uint64_t>());
      }
    } else if (s.is_number_unsigned()) {
      for (std::uint64_t i = 1; i <= s.get<std::uint64_t>(); ++i) cfg.seeds.push_back(i);
    } else {
      throw ConfigError("config field 'seeds' must be an array or a count");
    }
  } else {
    cfg.seeds.push_back(1);
  }

  cfg.iterations = parse_iterations(j);
  cfg.outputs = parse_outputs(j);
  return cfg;
}

}  // namespace zslab
