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

#include "qotto/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include "json.hpp"
#include <omp.h>

namespace qotto {

namespace {

const char *const kColumns[] = {
    "tau_s",    "kT_hot_peV", "mode",     "W2_peV", "W4_peV",   "Q1_peV",
    "Q3_peV",   "cost2_peV",  "cost4_peV", "eta_A", "eta1_STA", "eta2_STA",
    "P_A",      "P_STA",      "fidelity_tracking", "flags"};

std::vector<double> numeric_fields(const SweepRow &r) {
  const auto &m = r.metrics;
  return {r.tau,   r.kT_hot,   m.W2,       m.W4,       m.Q1,  m.Q3,
          m.cost2, m.cost4,    m.eta_A,    m.eta1_STA, m.eta2_STA,
          m.P_A,   m.P_STA,    m.fidelity_tracking};
}

} // namespace

SweepSpec SweepSpec::defaults() {
  SweepSpec s;
  for (int us = 200; us <= 2250; us += 50)
    s.tau_grid.push_back(us * 1e-6);
  s.hot_temperatures = {6.45, 8.45};
  s.modes = {EngineMode::IdealAdiabatic, EngineMode::NA, EngineMode::STA};
  return s;
}

void validate(const SweepSpec &spec) {
  if (spec.tau_grid.empty())
    throw ConfigError("sweep: tau grid is empty");
  if (spec.hot_temperatures.empty())
    throw ConfigError("sweep: hot temperature list is empty");
  if (spec.modes.empty())
    throw ConfigError("sweep: mode list is empty");
  for (const EngineConfig &cfg : expand_grid(spec))
    validate(cfg);
}

std::vector<EngineConfig> expand_grid(const SweepSpec &spec) {
  auto taus = spec.tau_grid;
  auto hots = spec.hot_temperatures;
  auto modes = spec.modes;
  std::sort(taus.begin(), taus.end());
  std::sort(hots.begin(), hots.end());
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());

  std::vector<EngineConfig> out;
  out.reserve(taus.size() * hots.size() * modes.size());
  for (double hot : hots)
    for (EngineMode mode : modes)
      for (double tau : taus) {
        EngineConfig cfg = spec.base;
        cfg.tau = tau;
        cfg.kT_hot = hot;
        cfg.kT_cold = spec.cold_temperature;
        cfg.mode = mode;
        out.push_back(cfg);
      }
  return out;
}

std::vector<SweepRow> sweep_serial(const SweepSpec &spec) {
  validate(spec);
  std::vector<SweepRow> rows;
  for (const EngineConfig &cfg : expand_grid(spec))
    rows.push_back({cfg.tau, cfg.kT_hot, cfg.mode, run_cycle(cfg)});
  return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepSpec &spec, int threads) {
  validate(spec);
  const std::vector<EngineConfig> configs = expand_grid(spec);
  std::vector<SweepRow> rows(configs.size());
  const int n = static_cast<int>(configs.size());
  const int workers = threads > 0 ? threads : resolve_threads();

  // Each worker writes only its own slot; I/O stays with the caller.
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int i = 0; i < n; ++i) {
    const EngineConfig &cfg = configs[i];
    rows[i] = {cfg.tau, cfg.kT_hot, cfg.mode, run_cycle(cfg)};
  }
  return rows;
}

int resolve_threads() {
  if (const char *env = std::getenv("QOTTO_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

std::string format_value(double v) {
  if (std::isnan(v))
    return "nan";
  return fmt::format("{:.12g}", v);
}

void write_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
  os << "# schema: " << kSweepSchema << '\n';
  for (std::size_t i = 0; i < std::size(kColumns); ++i)
    os << (i ? "," : "") << kColumns[i];
  os << '\n';
  for (const auto &r : rows) {
    const auto v = numeric_fields(r);
    os << format_value(v[0]) << ',' << format_value(v[1]) << ',' << to_string(r.mode);
    for (std::size_t i = 2; i < v.size(); ++i)
      os << ',' << format_value(v[i]);
    os << ',' << flags_to_string(r.metrics.flags) << '\n';
  }
}

void write_json(std::ostream &os, const std::vector<SweepRow> &rows) {
  // Round-trip through the 12-digit text so JSON and CSV carry the same values.
  auto num = [](double v) -> nlohmann::ordered_json {
    if (!std::isfinite(v))
      return nullptr;
    return std::stod(format_value(v));
  };
  nlohmann::ordered_json doc;
  doc["schema"] = kSweepSchema;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto &r : rows) {
    const auto v = numeric_fields(r);
    nlohmann::ordered_json row;
    row[kColumns[0]] = num(v[0]);
    row[kColumns[1]] = num(v[1]);
    row[kColumns[2]] = to_string(r.mode);
    for (std::size_t i = 2; i < v.size(); ++i)
      row[kColumns[i + 1]] = num(v[i]);
    row["flags"] = flags_to_string(r.metrics.flags);
    doc["rows"].push_back(std::move(row));
  }
  os << doc.dump(2) << '\n';
}

} // namespace qotto
