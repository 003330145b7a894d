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

/**
 * @file engine.hpp
 * Four-stroke quantum Otto cycle on the Landau-Zener working medium.
 *
 * Sign convention: work and heat are positive when they flow INTO the
 * working medium, so useful output work is -(W2 + W4) and every efficiency
 * carries an overall minus sign. All energies are in peV.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qotto/linalg.hpp"
#include "qotto/propagator.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

enum class EngineMode { IdealAdiabatic, NA, STA };

// How the counter-adiabatic energy is charged to a stroke.
enum class CostFunctional {
  TimeAveragedNorm,   // (1/tau) int |H_CD|_op dt
  TimeIntegratedNorm, // int |H_CD|_op dt (peV s)
  StateWeighted,      // (1/tau) int sqrt(Tr[rho(t) H_CD(t)^2]) dt
};

enum class HeatingModel { Reset, Swap };

struct CycleTimeRule {
  // tau_cycle = 2 tau + 2 * thermalization_s (one interval per isochore).
  double thermalization_s = 0.0;

  static CycleTimeRule two_tau() { return {}; }
  static CycleTimeRule two_tau_plus_thermalization(double seconds) {
    return {seconds};
  }
  double cycle_time(double tau) const { return 2.0 * tau + 2.0 * thermalization_s; }
};

struct EngineConfig {
  double bx = 1000.0;       // Hz
  double nu_z_max = 2500.0; // Hz
  double tau = 1e-3;        // s
  double kT_cold = 1.9;     // peV
  double kT_hot = 6.45;     // peV
  EngineMode mode = EngineMode::IdealAdiabatic;
  int n_steps = kDefaultSteps;
  CostFunctional cost_functional = CostFunctional::TimeAveragedNorm;
  CycleTimeRule cycle_time_rule;
  HeatingModel heating = HeatingModel::Reset;

  double nu_i() const { return bx; }
  double nu_f() const;
  LZModel expansion_model() const { return LZModel::expansion(bx, nu_z_max, tau); }
  LZModel compression_model() const { return LZModel::compression(bx, nu_z_max, tau); }
};

// Raised for configurations the engine refuses to run.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Throws ConfigError naming the offending field.
void validate(const EngineConfig &cfg);

enum MetricFlag : std::uint32_t {
  kNotOperating = 1u << 0,     // Q3 <= 0: efficiencies undefined (NaN)
  kNoUsefulWork = 1u << 1,     // -(W2 + W4) <= 0
  kStaPowerClamped = 1u << 2,  // raw STA power < 0, reported as 0
  kCarnotViolation = 1u << 3,  // a positive efficiency exceeds Carnot
};

std::string flags_to_string(std::uint32_t flags);

struct CycleMetrics {
  double W2 = 0, W4 = 0; // expansion / compression work
  double Q1 = 0, Q3 = 0; // cooling / heating heat
  double cost2 = 0, cost4 = 0;
  double eta_A = 0, eta1_STA = 0, eta2_STA = 0;
  double P_A = 0, P_STA = 0; // peV / s
  double P_STA_raw = 0;      // before clamping at zero
  double tau_cycle = 0;      // s
  double fidelity_tracking = 1.0;
  std::uint32_t flags = 0;
};

struct StrokeCosts {
  double expansion = 0.0;
  double compression = 0.0;
};

CycleMetrics run_cycle(const EngineConfig &cfg);

// Energy spent on the counter-adiabatic field during one stroke.
// Throws std::logic_error unless cfg.mode is STA.
double sta_cost(const EngineConfig &cfg, Stroke stroke);

// Assembles efficiencies and powers from a complete ledger and stroke costs.
CycleMetrics efficiencies_and_power(const StrokeLedger &ledger,
                                    const StrokeCosts &costs,
                                    const EngineConfig &cfg);

// Heating by SWAP with an auxiliary qubit prepared in gibbs(h_aux, kT).
Qubit swap_thermalize(const Qubit &working, double auxiliary_kT, const Operator &h_aux);

double otto_limit(double nu_i, double nu_f);
double carnot_limit(double kT_cold, double kT_hot);

const char *to_string(EngineMode m);
const char *to_string(CostFunctional c);

} // namespace qotto
