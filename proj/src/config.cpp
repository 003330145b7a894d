// Copyright 2026 The qotto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qotto/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace qotto {

namespace pt = boost::property_tree;

namespace {

// Lowercase with '-' and '_' dropped, so "Time_Averaged-Norm" matches.
std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '-' && c != '_' && !std::isspace(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (auto t = trim(item); !t.empty())
      out.push_back(t);
  return out;
}

double parse_double(const std::string &key, const std::string &raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError(key + ": cannot parse '" + raw + "' as a number");
  return v;
}

int parse_int(const std::string &key, const std::string &raw) {
  const std::string s = trim(raw);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError(key + ": cannot parse '" + raw + "' as an integer");
  return v;
}

std::vector<double> parse_doubles(const std::string &key, const std::string &raw) {
  std::vector<double> out;
  for (const auto &item : split_list(raw))
    out.push_back(parse_double(key, item));
  return out;
}

template <class F> auto with_key(const std::string &key, F &&f) {
  try {
    return f();
  } catch (const std::invalid_argument &e) {
    throw ConfigError(key + ": " + e.what());
  }
}

const std::set<std::string> kEngineKeys = {
    "bx_hz",   "nu_z_max_hz",     "tau_us",            "mode",
    "n_steps", "cost_functional", "thermalization_us", "heating"};
const std::set<std::string> kBathKeys = {"kT_cold_peV", "kT_hot_peV"};
const std::set<std::string> kSweepKeys = {"tau_start_us", "tau_stop_us", "tau_step_us",
                                          "tau_list_us",  "hot_peV",     "modes",
                                          "format",       "out"};

pt::ptree read_ini(std::istream &in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  for (const auto &[section, body] : tree) {
    const std::set<std::string> *keys = nullptr;
    if (section == "engine")
      keys = &kEngineKeys;
    else if (section == "bath")
      keys = &kBathKeys;
    else if (section == "sweep")
      keys = &kSweepKeys;
    if (body.empty() && !body.data().empty())
      throw ConfigError("unknown key '" + section + "' outside any section");
    if (!keys)
      throw ConfigError("unknown section '" + section + "'");
    for (const auto &[key, value] : body)
      if (!keys->count(key))
        throw ConfigError("unknown key '" + section + "." + key + "'");
  }
  return tree;
}

EngineConfig engine_from_tree(const pt::ptree &tree) {
  EngineConfig cfg;
  auto get = [&](const std::string &path) { return tree.get_optional<std::string>(path); };

  if (auto v = get("engine.bx_hz"))
    cfg.bx = parse_double("engine.bx_hz", *v);
  if (auto v = get("engine.nu_z_max_hz"))
    cfg.nu_z_max = parse_double("engine.nu_z_max_hz", *v);
  if (auto v = get("engine.tau_us"))
    cfg.tau = parse_double("engine.tau_us", *v) * 1e-6;
  if (auto v = get("engine.mode"))
    cfg.mode = with_key("engine.mode", [&] { return parse_mode(*v); });
  if (auto v = get("engine.n_steps"))
    cfg.n_steps = parse_int("engine.n_steps", *v);
  if (auto v = get("engine.cost_functional"))
    cfg.cost_functional =
        with_key("engine.cost_functional", [&] { return parse_cost_functional(*v); });
  if (auto v = get("engine.thermalization_us"))
    cfg.cycle_time_rule = CycleTimeRule::two_tau_plus_thermalization(
        parse_double("engine.thermalization_us", *v) * 1e-6);
  if (auto v = get("engine.heating")) {
    const std::string h = normalize(*v);
    if (h == "reset")
      cfg.heating = HeatingModel::Reset;
    else if (h == "swap")
      cfg.heating = HeatingModel::Swap;
    else
      throw ConfigError("engine.heating: expected reset or swap, got '" + *v + "'");
  }
  if (auto v = get("bath.kT_cold_peV"))
    cfg.kT_cold = parse_double("bath.kT_cold_peV", *v);
  if (auto v = get("bath.kT_hot_peV"))
    cfg.kT_hot = parse_double("bath.kT_hot_peV", *v);
  return cfg;
}

SweepSpec sweep_from_tree(const pt::ptree &tree) {
  SweepSpec spec = SweepSpec::defaults();
  spec.base = engine_from_tree(tree);
  spec.cold_temperature = spec.base.kT_cold;
  if (tree.get_optional<std::string>("bath.kT_hot_peV"))
    spec.hot_temperatures = {spec.base.kT_hot};

  auto get = [&](const std::string &path) { return tree.get_optional<std::string>(path); };
  const auto start = get("sweep.tau_start_us");
  const auto stop = get("sweep.tau_stop_us");
  const auto step = get("sweep.tau_step_us");
  if (start || stop || step) {
    if (!(start && stop && step))
      throw ConfigError("sweep.tau_start_us: tau_start_us, tau_stop_us and "
                        "tau_step_us must be given together");
    const double a = parse_double("sweep.tau_start_us", *start);
    const double b = parse_double("sweep.tau_stop_us", *stop);
    const double h = parse_double("sweep.tau_step_us", *step);
    if (!(h > 0.0) || !(b >= a))
      throw ConfigError("sweep.tau_step_us: need step > 0 and stop >= start");
    spec.tau_grid.clear();
    // Integer index keeps grid points free of accumulated rounding.
    const long n = static_cast<long>(std::floor((b - a) / h + 1e-9));
    for (long i = 0; i <= n; ++i)
      spec.tau_grid.push_back((a + i * h) * 1e-6);
  }
  if (auto v = get("sweep.tau_list_us")) {
    spec.tau_grid.clear();
    for (double us : parse_doubles("sweep.tau_list_us", *v))
      spec.tau_grid.push_back(us * 1e-6);
  }
  if (auto v = get("sweep.hot_peV"))
    spec.hot_temperatures = parse_doubles("sweep.hot_peV", *v);
  if (auto v = get("sweep.modes")) {
    spec.modes.clear();
    for (const auto &m : split_list(*v))
      spec.modes.push_back(with_key("sweep.modes", [&] { return parse_mode(m); }));
  }
  if (auto v = get("sweep.format"))
    spec.format = with_key("sweep.format", [&] { return parse_format(*v); });
  if (auto v = get("sweep.out"))
    spec.output_path = trim(*v);
  return spec;
}

std::ifstream open_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read config file '" + path + "'");
  return in;
}

} // namespace

TemperaturePreset temperature_preset(std::string_view name) {
  const std::string n = normalize(name);
  if (n == "standard")
    return {1.9, {6.45, 8.45}};
  if (n == "scaled")
    return {11.94, {40.54, 53.11}};
  throw std::invalid_argument("unknown preset '" + std::string(name) +
                              "' (expected standard or scaled)");
}

EngineMode parse_mode(std::string_view s) {
  const std::string n = normalize(s);
  if (n == "idealadiabatic" || n == "ideal" || n == "adiabatic")
    return EngineMode::IdealAdiabatic;
  if (n == "na" || n == "nonadiabatic")
    return EngineMode::NA;
  if (n == "sta")
    return EngineMode::STA;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

CostFunctional parse_cost_functional(std::string_view s) {
  const std::string n = normalize(s);
  if (n == "timeaveragednorm")
    return CostFunctional::TimeAveragedNorm;
  if (n == "timeintegratednorm")
    return CostFunctional::TimeIntegratedNorm;
  if (n == "stateweighted")
    return CostFunctional::StateWeighted;
  throw std::invalid_argument("unknown cost functional '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s) {
  const std::string n = normalize(s);
  if (n == "csv")
    return OutputFormat::csv;
  if (n == "json")
    return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

EngineConfig parse_engine_config(const std::string &text) {
  std::istringstream in(text);
  return engine_from_tree(read_ini(in));
}

SweepSpec parse_sweep_spec(const std::string &text) {
  std::istringstream in(text);
  return sweep_from_tree(read_ini(in));
}

EngineConfig load_engine_config(const std::string &path) {
  auto in = open_config(path);
  return engine_from_tree(read_ini(in));
}

SweepSpec load_sweep_spec(const std::string &path) {
  auto in = open_config(path);
  return sweep_from_tree(read_ini(in));
}

} // namespace qotto
