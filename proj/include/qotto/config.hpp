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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qotto/engine.hpp"
#include "qotto/sweep.hpp"

namespace qotto {

// Flat INI configuration. Sections and keys:
//
//   [engine]  bx_hz, nu_z_max_hz, tau_us, mode, n_steps, cost_functional,
//             thermalization_us, heating
//   [bath]    kT_cold_peV, kT_hot_peV
//   [sweep]   tau_start_us, tau_stop_us, tau_step_us, tau_list_us,
//             hot_peV, modes, format, out
//
// A run config may carry a [sweep] section; run ignores it.
// Lists are comma separated. Unknown keys and unparsable values raise
// ConfigError naming the key as "section.key".

struct TemperaturePreset {
  double kT_cold;
  std::vector<double> kT_hot;
};

// "standard" (1.9 / 6.45, 8.45 peV) or "scaled" (11.94 / 40.54, 53.11 peV), the
// same temperatures multiplied by about 2 pi.
TemperaturePreset temperature_preset(std::string_view name);

EngineMode parse_mode(std::string_view s);
CostFunctional parse_cost_functional(std::string_view s);
OutputFormat parse_format(std::string_view s);

EngineConfig load_engine_config(const std::string &path);
// Engine and bath sections seed spec.base; [sweep] fills the grids.
SweepSpec load_sweep_spec(const std::string &path);

// Same parsers applied to in-memory text, for tests.
EngineConfig parse_engine_config(const std::string &text);
SweepSpec parse_sweep_spec(const std::string &text);

} // namespace qotto
