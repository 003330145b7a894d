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

// qotto: single cycles, driving-time sweeps and the property suite of the
// Landau-Zener quantum Otto engine.
//
// Exit codes: 0 success, 1 internal or I/O error, 2 configuration error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "qotto/config.hpp"
#include "qotto/sweep.hpp"
#include "qotto/validate.hpp"

namespace {

using namespace qotto;
using json = nlohmann::ordered_json;

constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;

struct Overrides {
  std::optional<int> steps;
  std::optional<std::string> cost_functional;
  std::optional<std::string> preset;
};

void apply(EngineConfig &cfg, const Overrides &o) {
  if (o.steps)
    cfg.n_steps = *o.steps;
  if (o.cost_functional)
    cfg.cost_functional = parse_cost_functional(*o.cost_functional);
  if (o.preset) {
    const TemperaturePreset p = temperature_preset(*o.preset);
    cfg.kT_cold = p.kT_cold;
    cfg.kT_hot = p.kT_hot.front();
  }
}

json number(double v) {
  if (!std::isfinite(v))
    return nullptr;
  return v;
}

json to_json(const EngineConfig &cfg) {
  return {{"bx_hz", cfg.bx},
          {"nu_z_max_hz", cfg.nu_z_max},
          {"tau_s", cfg.tau},
          {"kT_cold_peV", cfg.kT_cold},
          {"kT_hot_peV", cfg.kT_hot},
          {"mode", to_string(cfg.mode)},
          {"n_steps", cfg.n_steps},
          {"cost_functional", to_string(cfg.cost_functional)},
          {"thermalization_s", cfg.cycle_time_rule.thermalization_s},
          {"heating", cfg.heating == HeatingModel::Swap ? "swap" : "reset"}};
}

json to_json(const CycleMetrics &m) {
  return {{"W2_peV", number(m.W2)},
          {"W4_peV", number(m.W4)},
          {"Q1_peV", number(m.Q1)},
          {"Q3_peV", number(m.Q3)},
          {"cost2_peV", number(m.cost2)},
          {"cost4_peV", number(m.cost4)},
          {"eta_A", number(m.eta_A)},
          {"eta1_STA", number(m.eta1_STA)},
          {"eta2_STA", number(m.eta2_STA)},
          {"P_A", number(m.P_A)},
          {"P_STA", number(m.P_STA)},
          {"P_STA_raw", number(m.P_STA_raw)},
          {"tau_cycle_s", number(m.tau_cycle)},
          {"fidelity_tracking", number(m.fidelity_tracking)},
          {"flags", flags_to_string(m.flags)}};
}

// Writes to `path`, or stdout when empty. Throws std::runtime_error if the
// file cannot be written.
template <class F> void emit(const std::string &path, F &&write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing '" + path + "'");
}

std::string per_hot_path(const std::string &path, double kT_hot) {
  std::filesystem::path p(path);
  const std::string stem = p.stem().string() + "_kT" + format_value(kT_hot);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

int cmd_run(const std::string &config, const std::string &out, const Overrides &o) {
  EngineConfig cfg = config.empty() ? EngineConfig{} : load_engine_config(config);
  apply(cfg, o);
  const CycleMetrics m = run_cycle(cfg);
  json doc;
  doc["schema"] = "qotto-run/1";
  doc["config"] = to_json(cfg);
  doc["metrics"] = to_json(m);
  doc["otto_limit"] = otto_limit(cfg.nu_i(), cfg.nu_f());
  doc["carnot_limit"] = carnot_limit(cfg.kT_cold, cfg.kT_hot);
  emit(out, [&](std::ostream &os) { os << doc.dump(2) << '\n'; });
  return 0;
}

int cmd_sweep(const std::string &config, std::string out, const std::string &format,
              const Overrides &o, bool split_by_hot) {
  SweepSpec spec = config.empty() ? SweepSpec::defaults() : load_sweep_spec(config);
  apply(spec.base, {o.steps, o.cost_functional, std::nullopt});
  if (o.preset) {
    const TemperaturePreset p = temperature_preset(*o.preset);
    spec.cold_temperature = p.kT_cold;
    spec.hot_temperatures = p.kT_hot;
  }
  if (!format.empty())
    spec.format = parse_format(format);
  if (!out.empty())
    spec.output_path = out;
  validate(spec);

  const std::vector<SweepRow> rows = sweep_parallel(spec);
  auto write = [&](const std::vector<SweepRow> &subset) {
    return [&subset, &spec](std::ostream &os) {
      spec.format == OutputFormat::csv ? write_csv(os, subset) : write_json(os, subset);
    };
  };
  if (split_by_hot && !spec.output_path.empty()) {
    std::vector<double> hots;
    for (const auto &r : rows)
      if (hots.empty() || hots.back() != r.kT_hot)
        hots.push_back(r.kT_hot);
    for (double hot : hots) {
      std::vector<SweepRow> subset;
      for (const auto &r : rows)
        if (r.kT_hot == hot)
          subset.push_back(r);
      emit(per_hot_path(spec.output_path, hot), write(subset));
    }
  } else {
    emit(spec.output_path, write(rows));
  }
  std::cerr << rows.size() << " rows\n";
  return 0;
}

int cmd_validate(double cd_gain) {
  ValidationOptions opts;
  opts.cd_gain = cd_gain;
  const ValidationReport report = run_validation(opts);
  print_report(std::cout, report);
  return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Landau-Zener quantum Otto engine: cycles, sweeps and validation"};
  app.require_subcommand(1);

  std::string config, out, format;
  Overrides overrides;
  bool split_by_hot = false;
  double cd_gain = 1.0;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--config", config, "INI configuration file")->check(CLI::ExistingFile);
    cmd->add_option("--out", out, "output path (default stdout)");
    cmd->add_option("--steps", overrides.steps, "time steps per stroke")
        ->check(CLI::Range(2, kMaxSteps));
    cmd->add_option("--cost-functional", overrides.cost_functional,
                    "time-averaged-norm | time-integrated-norm | state-weighted");
    cmd->add_option("--preset", overrides.preset, "standard | scaled temperature set");
  };

  auto *run = app.add_subcommand("run", "run one engine cycle and print its metrics as JSON");
  add_common(run);
  auto *sweep = app.add_subcommand("sweep", "sweep driving time, hot temperature and mode");
  add_common(sweep);
  sweep->add_option("--format", format, "csv | json");
  sweep->add_flag("--split-by-hot", split_by_hot, "one output file per hot temperature");
  auto *validate_cmd = app.add_subcommand("validate", "run the property suite");
  validate_cmd->add_option("--cd-gain", cd_gain,
                           "scale the counter-adiabatic field in the tracking check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run)
      return cmd_run(config, out, overrides);
    if (*sweep)
      return cmd_sweep(config, out, format, overrides, split_by_hot);
    return cmd_validate(cd_gain);
  } catch (const ConfigError &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
