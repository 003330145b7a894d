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

#include "qotto/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qotto {

LZModel::LZModel(double bx_hz, RampSchedule bz, double cd_gain)
    : bx_(bx_hz), bz_(bz), cd_gain_(cd_gain) {
  if (!(bx_ > 0.0) || !std::isfinite(bx_))
    throw std::invalid_argument("LZModel: bx must be positive (gap closes at bx = 0)");
  if (!std::isfinite(cd_gain_))
    throw std::invalid_argument("LZModel: non-finite cd_gain");
}

LZModel LZModel::expansion(double bx_hz, double nu_z_max_hz, double tau_s) {
  return LZModel(bx_hz, RampSchedule::between(0.0, nu_z_max_hz, tau_s));
}

LZModel LZModel::compression(double bx_hz, double nu_z_max_hz, double tau_s) {
  return LZModel(bx_hz, RampSchedule::between(nu_z_max_hz, 0.0, tau_s));
}

RampSchedule LZModel::schedule(Axis axis) const {
  return axis == Axis::z ? bz_ : RampSchedule::constant(bx_, bz_.tau());
}

Operator h0(const LZModel &m, double t) {
  return pauli_operator(0.0, m.bx(), 0.0, m.bz().value(t));
}

double b_cd(const LZModel &m, double t) {
  const double bz = m.bz().value(t);
  const double dbz = m.bz().derivative(t);
  const double bx = m.bx();
  return -m.cd_gain() * bx * dbz /
         (2.0 * std::numbers::pi * (bx * bx + bz * bz));
}

Operator h_eff(const LZModel &m, double t, DriveMode mode) {
  const double by = mode == DriveMode::STA ? b_cd(m, t) : 0.0;
  return pauli_operator(0.0, m.bx(), by, m.bz().value(t));
}

double gap(const LZModel &m, double t) { return std::hypot(m.bx(), m.bz().value(t)); }

} // namespace qotto
