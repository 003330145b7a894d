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

#include "qotto/linalg.hpp"
#include "qotto/schedule.hpp"

namespace qotto {

enum class DriveMode { NA, STA };

// Landau-Zener working medium: H0(t) = bx*sx + bz(t)*sz with static bx > 0.
class LZModel {
public:
  // `cd_gain` scales the counter-adiabatic field; 1 is exact tracking.
  // Other values exist only to show that tracking breaks without it.
  LZModel(double bx_hz, RampSchedule bz, double cd_gain = 1.0);

  // Gap opens at bx and sweeps bz from 0 to nu_z_max (expansion) or back.
  static LZModel expansion(double bx_hz, double nu_z_max_hz, double tau_s);
  static LZModel compression(double bx_hz, double nu_z_max_hz, double tau_s);

  double bx() const { return bx_; }
  const RampSchedule &bz() const { return bz_; }
  double tau() const { return bz_.tau(); }
  double cd_gain() const { return cd_gain_; }
  // Index form of the field ramps; x is a constant ramp.
  RampSchedule schedule(Axis axis) const;

private:
  double bx_;
  RampSchedule bz_;
  double cd_gain_;
};

Operator h0(const LZModel &m, double t);

// y-coefficient of the counter-adiabatic field,
// -bx * dbz/dt / (2 pi (bx^2 + bz^2)) in stored Hz units.
double b_cd(const LZModel &m, double t);

Operator h_eff(const LZModel &m, double t, DriveMode mode);

// Level splitting sqrt(bx^2 + bz(t)^2) in Hz.
double gap(const LZModel &m, double t);

} // namespace qotto
