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
#include <numbers>

#include "qotto/engine.hpp"

using namespace qotto;

namespace {

EngineConfig config(EngineMode mode, double tau, double kT_hot = 6.45) {
  EngineConfig cfg;
  cfg.mode = mode;
  cfg.tau = tau;
  cfg.kT_hot = kT_hot;
  return cfg;
}

// Independent oracle: trapezoid rule over the closed-form CD amplitude,
// (h/2)(1/tau) int |bx dbz/dt| / (2 pi (bx^2 + bz^2)) dt.
double trapezoid_cost(double bx, double nu_max, double tau, int points) {
  const double d = 6.0 * nu_max;
  auto f = [&](double t) {
    const double s = t / tau;
    const double bz = d * s * s * (0.5 - s / 3.0);
    const double dbz = d * s * (1.0 - s) / tau;
    return std::abs(bx * dbz / (2.0 * std::numbers::pi * (bx * bx + bz * bz)));
  };
  const double h = tau / points;
  double sum = 0.5 * (f(0.0) + f(tau));
  for (int i = 1; i < points; ++i)
    sum += f(i * h);
  return 0.5 * 4.135667696e-3 * sum * h / tau;
}

} // namespace

TEST_CASE("ideal adiabatic cycle reaches the Otto limit") {
  const CycleMetrics m = run_cycle(config(EngineMode::IdealAdiabatic, 1e-3));
  const double nu_f = std::hypot(1000.0, 2500.0);
  CHECK(std::abs(m.eta_A - (1.0 - 1000.0 / nu_f)) < 1e-9);
  CHECK(std::abs(m.eta_A - 0.629) < 1e-3);
  CHECK(m.flags == 0);
  CHECK(m.fidelity_tracking == 1.0);
  CHECK(std::abs(m.W2 + m.W4 + m.Q1 + m.Q3) < 1e-12);
  // cost-free: every efficiency definition coincides
  CHECK(m.eta1_STA == m.eta_A);
  CHECK(m.eta2_STA == m.eta_A);
}

TEST_CASE("NA engine produces no useful work at short driving times") {
  const CycleMetrics m = run_cycle(config(EngineMode::NA, 1200e-6));
  CHECK(m.eta_A < 0.0);
  CHECK((m.flags & kNoUsefulWork) != 0);
  CHECK(m.fidelity_tracking < 1.0 - 1e-3);

  const CycleMetrics late = run_cycle(config(EngineMode::NA, 1400e-6));
  CHECK(late.eta_A > 0.0);
  CHECK(late.eta_A < 0.629);
}

TEST_CASE("NA engine absorbing no heat is flagged, not given an efficiency") {
  const CycleMetrics m = run_cycle(config(EngineMode::NA, 500e-6));
  CHECK(m.Q3 <= 0.0);
  CHECK((m.flags & kNotOperating) != 0);
  CHECK(std::isnan(m.eta_A));
  CHECK(std::isnan(m.eta2_STA));
  CHECK((m.flags & kCarnotViolation) == 0);
}

TEST_CASE("STA strokes track exactly, so the work equals the ideal work") {
  for (double tau : {200e-6, 700e-6, 1300e-6, 2250e-6}) {
    const CycleMetrics sta = run_cycle(config(EngineMode::STA, tau));
    const CycleMetrics ideal = run_cycle(config(EngineMode::IdealAdiabatic, tau));
    CHECK(sta.fidelity_tracking >= 1.0 - 1e-6);
    CHECK(std::abs(sta.eta_A - ideal.eta_A) <= 1e-6);
    CHECK(std::abs(sta.W2 - ideal.W2) <= 1e-8);
    CHECK(std::abs(sta.W4 - ideal.W4) <= 1e-8);
    CHECK(sta.cost2 > 0.0);
  }
}

TEST_CASE("sta_cost") {
  SUBCASE("matches a 10^6-point trapezoid oracle and the closed form") {
    const EngineConfig cfg = config(EngineMode::STA, 1e-3);
    const double oracle = trapezoid_cost(1000.0, 2500.0, 1e-3, 1000000);
    // Integrand is single signed: int |b_cd| dt = atan(2.5) / (2 pi).
    const double closed = 0.5 * 4.135667696e-3 * std::atan(2.5) / (2 * std::numbers::pi) / 1e-3;
    CHECK(oracle == doctest::Approx(closed).epsilon(1e-10));
    CHECK(sta_cost(cfg, Stroke::expansion) == doctest::Approx(oracle).epsilon(1e-7));
    CHECK(sta_cost(cfg, Stroke::compression) == doctest::Approx(oracle).epsilon(1e-7));
    CHECK(sta_cost(cfg, Stroke::expansion) == doctest::Approx(0.391733).epsilon(1e-5));
  }

  SUBCASE("the CD field is off at both ends of the stroke") {
    const EngineConfig cfg = config(EngineMode::STA, 1e-3);
    CHECK(b_cd(cfg.expansion_model(), 0.0) == 0.0);
    CHECK(b_cd(cfg.expansion_model(), cfg.tau) == 0.0);
    CHECK(b_cd(cfg.compression_model(), 0.0) == 0.0);
    CHECK(b_cd(cfg.compression_model(), cfg.tau) == 0.0);
  }

  SUBCASE("time-averaged cost falls strictly with tau") {
    double prev = INFINITY;
    for (int us = 200; us <= 2250; us += 50) {
      const double c = sta_cost(config(EngineMode::STA, us * 1e-6), Stroke::expansion);
      CHECK(c < prev);
      prev = c;
    }
  }

  SUBCASE("other functionals") {
    EngineConfig cfg = config(EngineMode::STA, 8e-4);
    const double averaged = sta_cost(cfg, Stroke::compression);
    cfg.cost_functional = CostFunctional::TimeIntegratedNorm;
    CHECK(sta_cost(cfg, Stroke::compression) == doctest::Approx(averaged * 8e-4).epsilon(1e-12));
    cfg.cost_functional = CostFunctional::StateWeighted;
    CHECK(sta_cost(cfg, Stroke::compression) == doctest::Approx(averaged).epsilon(1e-12));
    CHECK(sta_cost(cfg, Stroke::expansion) == doctest::Approx(averaged).epsilon(1e-12));
  }

  CHECK_THROWS_AS(sta_cost(config(EngineMode::NA, 1e-3), Stroke::expansion), std::logic_error);
  CHECK_THROWS_AS(sta_cost(config(EngineMode::STA, 1e-3), Stroke::heating), std::logic_error);
}

TEST_CASE("efficiencies_and_power") {
  EngineConfig cfg = config(EngineMode::STA, 1e-3);
  StrokeLedger ledger;
  ledger.record(EnergyKind::work, Stroke::expansion, -3.0);
  ledger.record(EnergyKind::heat, Stroke::heating, 2.0);
  ledger.record(EnergyKind::work, Stroke::compression, 2.5);
  ledger.record(EnergyKind::heat, Stroke::cooling, -1.5);

  SUBCASE("zero cost") {
    const CycleMetrics m = efficiencies_and_power(ledger, {}, cfg);
    CHECK(m.eta_A == doctest::Approx(0.25));
    CHECK(m.eta1_STA == m.eta_A);
    CHECK(m.eta2_STA == m.eta_A);
    CHECK(m.P_A == doctest::Approx(0.5 / 2e-3));
    CHECK(m.P_STA == m.P_A);
  }

  SUBCASE("cost charged against the output") {
    const CycleMetrics m = efficiencies_and_power(ledger, {0.1, 0.1}, cfg);
    CHECK(m.eta1_STA == doctest::Approx(0.5 / 2.2));
    CHECK(m.eta2_STA == doctest::Approx(0.3 / 2.0));
    CHECK(m.P_STA == doctest::Approx(0.3 / 2e-3));
    CHECK(m.eta1_STA >= m.eta2_STA);
  }

  SUBCASE("cost above the output: eta1 stays positive, power is zero") {
    const CycleMetrics m = efficiencies_and_power(ledger, {0.4, 0.4}, cfg);
    CHECK(m.eta1_STA > 0.0);
    CHECK(m.eta2_STA < 0.0);
    CHECK(m.P_STA == 0.0);
    CHECK(m.P_STA_raw == doctest::Approx(-0.3 / 2e-3));
    CHECK((m.flags & kStaPowerClamped) != 0);
  }

  SUBCASE("thermalization time lengthens the cycle") {
    cfg.cycle_time_rule = CycleTimeRule::two_tau_plus_thermalization(5e-4);
    const CycleMetrics m = efficiencies_and_power(ledger, {}, cfg);
    CHECK(m.tau_cycle == doctest::Approx(3e-3));
    CHECK(m.P_A == doctest::Approx(0.5 / 3e-3));
  }
}

TEST_CASE("STA efficiency definitions at the ends of the driving-time range") {
  const CycleMetrics fast = run_cycle(config(EngineMode::STA, 200e-6));
  CHECK(fast.eta1_STA > 0.0);
  CHECK(fast.P_STA == 0.0);

  // Both definitions approach the Otto limit once the 1/tau cost is small.
  EngineConfig slow = config(EngineMode::STA, 0.225);
  slow.n_steps = 409600;
  const CycleMetrics m = run_cycle(slow);
  const double otto = otto_limit(1000.0, std::hypot(1000.0, 2500.0));
  CHECK(std::abs(m.eta1_STA - otto) < 0.02 * otto);
  CHECK(std::abs(m.eta2_STA - otto) < 0.02 * otto);

  double prev1 = -INFINITY, prev2 = -INFINITY;
  for (int us = 200; us <= 2250; us += 150) {
    const CycleMetrics r = run_cycle(config(EngineMode::STA, us * 1e-6));
    CHECK(r.eta1_STA > prev1);
    CHECK(r.eta2_STA > prev2);
    prev1 = r.eta1_STA;
    prev2 = r.eta2_STA;
  }
}

TEST_CASE("swap_thermalize") {
  const Operator h2 = pauli_operator(0, 1000, 0, 2500);
  CMatrix<2> m;
  m << 0.9, complex_t(0.1, 0.05), complex_t(0.1, -0.05), 0.1;
  const Qubit out = swap_thermalize(Qubit(m), 6.45, h2);
  CHECK(max_abs(out.matrix() - gibbs(h2, {6.45}).matrix()) < 1e-12);
  CHECK(max_abs(swap_thermalize(Qubit(m), 1e12, pauli_operator(0, 0, 0, 1)).matrix() -
                CMatrix<2>::Identity() / 2.0) < 1e-12);

  for (auto mode : {EngineMode::IdealAdiabatic, EngineMode::NA, EngineMode::STA}) {
    EngineConfig cfg = config(mode, 900e-6, 8.45);
    const CycleMetrics reset = run_cycle(cfg);
    cfg.heating = HeatingModel::Swap;
    const CycleMetrics swapped = run_cycle(cfg);
    CHECK(std::abs(reset.Q3 - swapped.Q3) < 1e-12);
    CHECK(std::abs(reset.W4 - swapped.W4) < 1e-12);
    CHECK(std::abs(reset.P_STA - swapped.P_STA) < 1e-12 * std::max(1.0, std::abs(reset.P_STA)));
  }
}

TEST_CASE("configuration errors") {
  EngineConfig cfg = config(EngineMode::NA, 1e-3, 1.9);
  CHECK_THROWS_AS(run_cycle(cfg), ConfigError);
  cfg.kT_hot = 5.0; // ratio 2.63 < 2.69
  CHECK_THROWS_AS(run_cycle(cfg), ConfigError);
  cfg = config(EngineMode::NA, -1e-3);
  CHECK_THROWS_AS(run_cycle(cfg), ConfigError);
  cfg = config(EngineMode::NA, 1e-3);
  cfg.n_steps = 1;
  CHECK_THROWS_AS(run_cycle(cfg), ConfigError);
  cfg = config(EngineMode::NA, 1e-3);
  cfg.bx = 0.0;
  CHECK_THROWS_AS(run_cycle(cfg), ConfigError);
}

TEST_CASE("Carnot bound holds over the default grid") {
  for (double hot : {6.45, 8.45})
    for (auto mode : {EngineMode::IdealAdiabatic, EngineMode::NA, EngineMode::STA})
      for (int us = 200; us <= 2250; us += 250) {
        const CycleMetrics m = run_cycle(config(mode, us * 1e-6, hot));
        CHECK((m.flags & kCarnotViolation) == 0);
        const double bound = carnot_limit(1.9, hot);
        if (m.eta_A > 0)
          CHECK(m.eta_A <= bound);
      }
}
