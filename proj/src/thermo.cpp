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

#include "qotto/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qotto {

Qubit gibbs(const Operator &h, const BathSpec &bath) {
  if (!(bath.kT > 0.0) || !std::isfinite(bath.kT))
    throw std::invalid_argument("gibbs: kT must be positive, got " +
                                std::to_string(bath.kT));
  const Eigensystem es = eigh(h);
  // Shift by the ground energy so the exponent never overflows.
  const double e0 = to_peV(es.values[0]);
  std::array<double, 2> w;
  for (int n = 0; n < 2; ++n)
    w[n] = std::exp(-(to_peV(es.values[n]) - e0) / bath.kT);
  const double z = w[0] + w[1];
  CMatrix<2> rho = CMatrix<2>::Zero();
  for (int n = 0; n < 2; ++n)
    rho += (w[n] / z) * es.vectors[n] * es.vectors[n].adjoint();
  return Qubit(rho);
}

std::array<double, 2> populations(const Operator &h, const Qubit &rho) {
  const Eigensystem es = eigh(h);
  std::array<double, 2> p;
  for (int n = 0; n < 2; ++n)
    p[n] = (es.vectors[n].adjoint() * rho.matrix() * es.vectors[n])(0, 0).real();
  return p;
}

double spin_temperature(double p0, double p1, double nu_hz) {
  if (std::abs(p0 + p1 - 1.0) > 1e-9)
    throw std::invalid_argument("spin_temperature: populations do not sum to 1");
  if (!(p1 > 0.0))
    throw std::invalid_argument("spin_temperature: excited population must be positive");
  if (!(p0 > p1))
    throw std::domain_error(
        "spin_temperature: p0 <= p1 has no positive finite temperature");
  return kPlanckPeVPerHz * nu_hz / std::log(p0 / p1);
}

double mean_energy(const Operator &h, const Qubit &rho) {
  return to_peV((h.matrix() * rho.matrix()).trace().real());
}

double work(const Operator &hi, const Qubit &rho_i, const Operator &hf,
            const Qubit &rho_f) {
  return mean_energy(hf, rho_f) - mean_energy(hi, rho_i);
}

double heat(const Operator &h, const Qubit &rho_i, const Qubit &rho_f) {
  return to_peV((h.matrix() * (rho_f.matrix() - rho_i.matrix())).trace().real());
}

bool working_condition(const BathSpec &hot, const BathSpec &cold, double nu_i_hz,
                       double nu_f_hz) {
  return hot.kT / cold.kT > nu_f_hz / nu_i_hz;
}

void StrokeLedger::record(EnergyKind kind, Stroke stroke, double value_peV) {
  const bool unitary = stroke == Stroke::expansion || stroke == Stroke::compression;
  if ((kind == EnergyKind::work) != unitary)
    throw std::invalid_argument(std::string("StrokeLedger: ") +
                                (kind == EnergyKind::work ? "work" : "heat") +
                                " cannot be booked on the " + to_string(stroke) +
                                " stroke");
  entries_.push_back({kind, value_peV, stroke});
}

double StrokeLedger::total(Stroke stroke) const {
  double sum = 0.0;
  for (const auto &e : entries_)
    if (e.stroke == stroke)
      sum += e.value;
  return sum;
}

double StrokeLedger::net() const {
  double sum = 0.0;
  for (const auto &e : entries_)
    sum += e.value;
  return sum;
}

const char *to_string(Stroke s) {
  switch (s) {
  case Stroke::cooling: return "cooling";
  case Stroke::expansion: return "expansion";
  case Stroke::heating: return "heating";
  case Stroke::compression: return "compression";
  }
  return "?";
}

} // namespace qotto
