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

#include "qotto/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qotto {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

DriveMode drive_mode(EngineMode m) {
  return m == EngineMode::STA ? DriveMode::STA : DriveMode::NA;
}

// Ideal adiabatic stroke: populations carried unchanged onto the new eigenbasis.
Qubit adiabatic_map(const Qubit &rho, const Operator &from, const Operator &to) {
  const auto p = populations(from, rho);
  const Eigensystem es = eigh(to);
  CMatrix<2> out = CMatrix<2>::Zero();
  for (int n = 0; n < 2; ++n)
    out += p[n] * es.vectors[n] * es.vectors[n].adjoint();
  return Qubit(out);
}

struct StrokeResult {
  Qubit final_state;
  double fidelity;
};

StrokeResult drive(const Qubit &rho, const LZModel &model, const EngineConfig &cfg) {
  const Operator from = h0(model, 0.0);
  const Operator to = h0(model, model.tau());
  const Qubit ideal = adiabatic_map(rho, from, to);
  if (cfg.mode == EngineMode::IdealAdiabatic)
    return {ideal, 1.0};
  const Qubit out = evolve(rho, {model, drive_mode(cfg.mode), cfg.n_steps});
  return {out, fidelity(out, ideal)};
}

Qubit heating_state(const Qubit &rho, const Operator &h, const EngineConfig &cfg) {
  if (cfg.heating == HeatingModel::Swap)
    return swap_thermalize(rho, cfg.kT_hot, h);
  return gibbs(h, {cfg.kT_hot, BathRole::hot});
}

} // namespace

double EngineConfig::nu_f() const { return std::hypot(bx, nu_z_max); }

void validate(const EngineConfig &cfg) {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(cfg.bx))
    throw ConfigError("bx_hz must be positive");
  if (!std::isfinite(cfg.nu_z_max))
    throw ConfigError("nu_z_max_hz must be finite");
  if (!positive(cfg.tau))
    throw ConfigError("tau must be positive");
  if (!positive(cfg.kT_cold))
    throw ConfigError("kT_cold_peV must be positive");
  if (!positive(cfg.kT_hot))
    throw ConfigError("kT_hot_peV must be positive");
  if (cfg.n_steps < 2 || cfg.n_steps > kMaxSteps)
    throw ConfigError("n_steps must lie in [2, 2^20]");
  if (!(cfg.cycle_time_rule.thermalization_s >= 0.0))
    throw ConfigError("thermalization_s must be >= 0");
  if (!working_condition({cfg.kT_hot, BathRole::hot}, {cfg.kT_cold, BathRole::cold},
                         cfg.nu_i(), cfg.nu_f()))
    throw ConfigError("working condition violated: kT_hot/kT_cold = " +
                      std::to_string(cfg.kT_hot / cfg.kT_cold) +
                      " must exceed nu_f/nu_i = " +
                      std::to_string(cfg.nu_f() / cfg.nu_i()));
}

CycleMetrics run_cycle(const EngineConfig &cfg) {
  validate(cfg);
  const LZModel expand = cfg.expansion_model();
  const LZModel compress = cfg.compression_model();
  const Operator h1 = h0(expand, 0.0);
  const Operator h2 = h0(expand, cfg.tau);

  StrokeLedger ledger;
  // (i) cooling: start from the cold Gibbs state.
  const Qubit rho_a = gibbs(h1, {cfg.kT_cold, BathRole::cold});
  // (ii) expansion
  const StrokeResult b = drive(rho_a, expand, cfg);
  ledger.record(EnergyKind::work, Stroke::expansion, work(h1, rho_a, h2, b.final_state));
  // (iii) heating
  const Qubit rho_c = heating_state(b.final_state, h2, cfg);
  ledger.record(EnergyKind::heat, Stroke::heating, heat(h2, b.final_state, rho_c));
  // (iv) compression
  const StrokeResult d = drive(rho_c, compress, cfg);
  ledger.record(EnergyKind::work, Stroke::compression, work(h2, rho_c, h1, d.final_state));
  // closing the cycle: cooling back to rho_a
  ledger.record(EnergyKind::heat, Stroke::cooling, heat(h1, d.final_state, rho_a));

  StrokeCosts costs;
  if (cfg.mode == EngineMode::STA) {
    costs.expansion = sta_cost(cfg, Stroke::expansion);
    costs.compression = sta_cost(cfg, Stroke::compression);
  }
  CycleMetrics m = efficiencies_and_power(ledger, costs, cfg);
  m.fidelity_tracking = std::min(b.fidelity, d.fidelity);
  return m;
}

double sta_cost(const EngineConfig &cfg, Stroke stroke) {
  if (cfg.mode != EngineMode::STA)
    throw std::logic_error("sta_cost: only defined for STA mode");
  if (stroke != Stroke::expansion && stroke != Stroke::compression)
    throw std::logic_error("sta_cost: only the unitary strokes carry a cost");

  const bool expanding = stroke == Stroke::expansion;
  const EvolutionSpec spec{expanding ? cfg.expansion_model() : cfg.compression_model(),
                           DriveMode::STA, cfg.n_steps};
  double integral = 0.0; // Hz s
  if (cfg.cost_functional == CostFunctional::StateWeighted) {
    const Operator start = h0(spec.model, 0.0);
    CMatrix<2> rho = gibbs(start, expanding ? BathSpec{cfg.kT_cold, BathRole::cold}
                                            : BathSpec{cfg.kT_hot, BathRole::hot})
                         .matrix();
    for_each_midpoint(spec, [&](int, double t, double dt) {
      const Operator h = h_eff(spec.model, t, DriveMode::STA);
      const CMatrix<2> half = expm_step(h, 0.5 * dt);
      const CMatrix<2> mid = half * rho * half.adjoint();
      const double b = b_cd(spec.model, t);
      // H_CD^2 = b^2 I
      integral += std::sqrt(std::max(0.0, b * b * mid.trace().real())) * dt;
      rho = half * mid * half.adjoint();
    });
  } else {
    for_each_midpoint(spec, [&](int, double t, double dt) {
      integral += std::abs(b_cd(spec.model, t)) * dt;
    });
  }
  const double energy = to_peV(integral);
  return cfg.cost_functional == CostFunctional::TimeIntegratedNorm ? energy
                                                                   : energy / cfg.tau;
}

CycleMetrics efficiencies_and_power(const StrokeLedger &ledger,
                                    const StrokeCosts &costs,
                                    const EngineConfig &cfg) {
  CycleMetrics m;
  m.W2 = ledger.total(Stroke::expansion);
  m.W4 = ledger.total(Stroke::compression);
  m.Q1 = ledger.total(Stroke::cooling);
  m.Q3 = ledger.total(Stroke::heating);
  m.cost2 = costs.expansion;
  m.cost4 = costs.compression;
  m.tau_cycle = cfg.cycle_time_rule.cycle_time(cfg.tau);

  const double extracted = -(m.W2 + m.W4);
  const double cost = m.cost2 + m.cost4;
  if (extracted <= 0.0)
    m.flags |= kNoUsefulWork;
  if (m.Q3 > 0.0) {
    m.eta_A = extracted / m.Q3;
    m.eta1_STA = extracted / (m.Q3 + cost);
    m.eta2_STA = (extracted - cost) / m.Q3;
  } else {
    m.flags |= kNotOperating;
    m.eta_A = m.eta1_STA = m.eta2_STA = kNaN;
  }
  m.P_A = extracted / m.tau_cycle;
  m.P_STA_raw = (extracted - cost) / m.tau_cycle;
  m.P_STA = std::max(0.0, m.P_STA_raw);
  if (m.P_STA_raw < 0.0)
    m.flags |= kStaPowerClamped;

  const double carnot = carnot_limit(cfg.kT_cold, cfg.kT_hot);
  for (double eta : {m.eta_A, m.eta1_STA, m.eta2_STA})
    if (eta > 0.0 && eta > carnot + 1e-12)
      m.flags |= kCarnotViolation;
  return m;
}

Qubit swap_thermalize(const Qubit &working, double auxiliary_kT, const Operator &h_aux) {
  const Qubit aux = gibbs(h_aux, {auxiliary_kT, BathRole::hot});
  const QubitPair joint = swap_gate().conjugate(tensor(working, aux));
  return partial_trace(joint, 1);
}

double otto_limit(double nu_i, double nu_f) { return 1.0 - nu_i / nu_f; }

double carnot_limit(double kT_cold, double kT_hot) { return 1.0 - kT_cold / kT_hot; }

std::string flags_to_string(std::uint32_t flags) {
  static const std::pair<MetricFlag, const char *> names[] = {
      {kNotOperating, "not_operating"},
      {kNoUsefulWork, "no_useful_work"},
      {kStaPowerClamped, "sta_power_clamped"},
      {kCarnotViolation, "carnot_violation"},
  };
  std::string out;
  for (const auto &[bit, name] : names) {
    if (flags & bit) {
      if (!out.empty())
        out += '|';
      out += name;
    }
  }
  return out.empty() ? "ok" : out;
}

const char *to_string(EngineMode m) {
  switch (m) {
  case EngineMode::IdealAdiabatic: return "IdealAdiabatic";
  case EngineMode::NA: return "NA";
  case EngineMode::STA: return "STA";
  }
  return "?";
}

const char *to_string(CostFunctional c) {
  switch (c) {
  case CostFunctional::TimeAveragedNorm: return "time-averaged-norm";
  case CostFunctional::TimeIntegratedNorm: return "time-integrated-norm";
  case CostFunctional::StateWeighted: return "state-weighted";
  }
  return "?";
}

} // namespace qotto
