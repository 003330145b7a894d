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

#include "doctest.h"

#include <cmath>

#include "qotto/config.hpp"

using namespace qotto;

TEST_CASE("engine config") {
  const EngineConfig cfg = parse_engine_config(R"(
[engine]
bx_hz = 1200
nu_z_max_hz = 3000
tau_us = 750
mode = sta
n_steps = 2048
cost_functional = state-weighted
thermalization_us = 100
heating = SWAP

[bath]
kT_cold_peV = 2.0
kT_hot_peV = 9
)");
  CHECK(cfg.bx == 1200.0);
  CHECK(cfg.nu_z_max == 3000.0);
  CHECK(cfg.tau == doctest::Approx(750e-6));
  CHECK(cfg.mode == EngineMode::STA);
  CHECK(cfg.n_steps == 2048);
  CHECK(cfg.cost_functional == CostFunctional::StateWeighted);
  CHECK(cfg.cycle_time_rule.thermalization_s == doctest::Approx(100e-6));
  CHECK(cfg.heating == HeatingModel::Swap);
  CHECK(cfg.kT_cold == 2.0);
  CHECK(cfg.kT_hot == 9.0);
}

TEST_CASE("missing keys keep defaults") {
  const EngineConfig cfg = parse_engine_config("[engine]\nmode = NA\n");
  const EngineConfig d;
  CHECK(cfg.mode == EngineMode::NA);
  CHECK(cfg.bx == d.bx);
  CHECK(cfg.tau == d.tau);
  CHECK(cfg.n_steps == kDefaultSteps);
  CHECK(cfg.cost_functional == CostFunctional::TimeAveragedNorm);
}

TEST_CASE("unknown keys and bad values name the offending key") {
  auto message = [](const std::string &text) {
    try {
      parse_engine_config(text);
    } catch (const ConfigError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("[engine]\nbx = 1000\n").find("engine.bx") != std::string::npos);
  CHECK(message("[physics]\nx = 1\n").find("physics") != std::string::npos);
  CHECK(message("[engine]\ntau_us = fast\n").find("engine.tau_us") != std::string::npos);
  CHECK(message("[engine]\nn_steps = 2.5\n").find("engine.n_steps") != std::string::npos);
  CHECK(message("[engine]\nmode = turbo\n").find("engine.mode") != std::string::npos);
  CHECK(message("[engine]\nheating = bath\n").find("engine.heating") != std::string::npos);
  CHECK(message("[engine]\ncost_functional = l2\n").find("engine.cost_functional") !=
        std::string::npos);
  CHECK_THROWS_AS(load_engine_config("/nonexistent/qotto.ini"), ConfigError);
}

TEST_CASE("sweep config") {
  SUBCASE("range") {
    const SweepSpec spec = parse_sweep_spec(R"(
[bath]
kT_cold_peV = 1.9
[sweep]
tau_start_us = 200
tau_stop_us = 400
tau_step_us = 100
hot_peV = 8.45, 6.45
modes = NA, STA
format = json
out = rows.json
)");
    REQUIRE(spec.tau_grid.size() == 3);
    CHECK(spec.tau_grid[2] == doctest::Approx(400e-6));
    CHECK(spec.hot_temperatures == std::vector<double>{8.45, 6.45});
    CHECK(spec.modes == std::vector<EngineMode>{EngineMode::NA, EngineMode::STA});
    CHECK(spec.format == OutputFormat::json);
    CHECK(spec.output_path == "rows.json");
    CHECK_NOTHROW(validate(spec));
  }

  SUBCASE("default grid ends exactly on 2250 us") {
    const SweepSpec spec =
        parse_sweep_spec("[sweep]\ntau_start_us=200\ntau_stop_us=2250\ntau_step_us=50\n");
    CHECK(spec.tau_grid.size() == 42);
    CHECK(spec.tau_grid.back() == doctest::Approx(2250e-6).epsilon(1e-15));
  }

  SUBCASE("explicit list") {
    const SweepSpec spec = parse_sweep_spec("[sweep]\ntau_list_us = 300, 200\n");
    CHECK(spec.tau_grid.size() == 2);
  }

  SUBCASE("empty mode list is rejected at validation") {
    const SweepSpec spec = parse_sweep_spec("[sweep]\nmodes =\n");
    CHECK(spec.modes.empty());
    CHECK_THROWS_AS(validate(spec), ConfigError);
  }

  CHECK_THROWS_AS(parse_sweep_spec("[sweep]\ntau_start_us = 200\n"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_spec("[sweep]\ntau_start_us=400\ntau_stop_us=200\ntau_step_us=50\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_spec("[sweep]\nformat = xml\n"), ConfigError);
}

TEST_CASE("presets and name parsing") {
  const TemperaturePreset standard = temperature_preset("standard");
  CHECK(standard.kT_cold == 1.9);
  CHECK(standard.kT_hot == std::vector<double>{6.45, 8.45});
  const TemperaturePreset scaled = temperature_preset("scaled");
  CHECK(scaled.kT_cold == 11.94);
  CHECK(scaled.kT_hot == std::vector<double>{40.54, 53.11});
  // both sets sit on the same side of the working condition
  CHECK(scaled.kT_hot[0] / scaled.kT_cold == doctest::Approx(standard.kT_hot[0] / standard.kT_cold).epsilon(1e-3));
  CHECK_THROWS_AS(temperature_preset("hot"), std::invalid_argument);

  CHECK(parse_mode("ideal_adiabatic") == EngineMode::IdealAdiabatic);
  CHECK(parse_mode("IdealAdiabatic") == EngineMode::IdealAdiabatic);
  CHECK(parse_mode("na") == EngineMode::NA);
  CHECK(parse_cost_functional("TimeIntegratedNorm") == CostFunctional::TimeIntegratedNorm);
  CHECK(parse_format("CSV") == OutputFormat::csv);
}
