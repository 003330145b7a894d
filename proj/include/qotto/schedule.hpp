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

#include <stdexcept>

namespace qotto {

// Field axes a ramp can drive. Only z varies in this engine; x is held
// constant as a degenerate ramp.
enum class Axis { x, z };

// Cubic ramp b(t) = C + D (t/tau)^2 (1/2 - t/(3 tau)) on [0, tau].
// Its derivative vanishes at both ends, so a counter-adiabatic term built
// from it switches on and off smoothly.
class RampSchedule {
public:
  // Throws std::invalid_argument unless tau > 0 and C, D are finite.
  RampSchedule(double initial_hz, double amplitude_hz, double tau_s);

  // Ramp that starts at `initial_hz` and ends exactly at `final_hz`.
  static RampSchedule between(double initial_hz, double final_hz, double tau_s);
  static RampSchedule constant(double value_hz, double tau_s) {
    return between(value_hz, value_hz, tau_s);
  }

  double initial() const { return c_; }
  double amplitude() const { return d_; }
  double tau() const { return tau_; }
  double final_value() const { return c_ + d_ / 6.0; }

  // Throw std::out_of_range for t outside [0, tau]; overshoot up to
  // 1e-15 * tau is clamped to the boundary.
  double value(double t) const;
  double derivative(double t) const;

private:
  double fraction(double t) const;

  double c_;
  double d_;
  double tau_;
};

// D such that a ramp starting at `initial` reaches `final` at t = tau.
double solve_amplitude(double initial_hz, double final_hz);

} // namespace qotto
