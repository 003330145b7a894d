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

#include <iosfwd>
#include <string>
#include <vector>

#include "qotto/engine.hpp"

namespace qotto {

inline constexpr const char *kSweepSchema = "qotto-sweep/1";

enum class OutputFormat { csv, json };

struct SweepSpec {
  std::vector<double> tau_grid;        // s
  std::vector<double> hot_temperatures; // peV
  double cold_temperature = 1.9;        // peV
  std::vector<EngineMode> modes;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  // Field, step and cost settings shared by every row; its tau, kT and mode
  // are overwritten per row.
  EngineConfig base;

  // 200..2250 us in 50 us steps, kT_hot in {6.45, 8.45}, all three modes.
  static SweepSpec defaults();
};

// Throws ConfigError for empty grids, non-positive temperatures or a hot
// temperature that violates the working condition.
void validate(const SweepSpec &spec);

struct SweepRow {
  double tau;
  double kT_hot;
  EngineMode mode;
  CycleMetrics metrics;
};

// Configs in output order: lexicographic in (kT_hot, mode, tau), ascending.
std::vector<EngineConfig> expand_grid(const SweepSpec &spec);

// Reference implementation, one row after another.
std::vector<SweepRow> sweep_serial(const SweepSpec &spec);
// OpenMP worker pool over rows; output order and bits match sweep_serial.
// threads <= 0 uses resolve_threads().
std::vector<SweepRow> sweep_parallel(const SweepSpec &spec, int threads = 0);

// QOTTO_THREADS if set to a positive integer, else the OpenMP default.
int resolve_threads();

void write_csv(std::ostream &os, const std::vector<SweepRow> &rows);
void write_json(std::ostream &os, const std::vector<SweepRow> &rows);

// 12 significant digits, "nan" for NaN.
std::string format_value(double v);

} // namespace qotto
