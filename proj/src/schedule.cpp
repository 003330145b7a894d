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

#include "qotto/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qotto {

RampSchedule::RampSchedule(double initial_hz, double amplitude_hz, double tau_s)
    : c_(initial_hz), d_(amplitude_hz), tau_(tau_s) {
  if (!std::isfinite(c_) || !std::isfinite(d_))
    throw std::invalid_argument("RampSchedule: non-finite constant");
  if (!(tau_ > 0.0) || !std::isfinite(tau_))
    throw std::invalid_argument("RampSchedule: tau must be positive");
}

RampSchedule RampSchedule::between(double initial_hz, double final_hz,
                                   double tau_s) {
  return RampSchedule(initial_hz, solve_amplitude(initial_hz, final_hz), tau_s);
}

double RampSchedule::fraction(double t) const {
  const double slack = 1e-15 * tau_;
  if (!(t >= -slack && t <= tau_ + slack))
    throw std::out_of_range("RampSchedule: t = " + std::to_string(t) +
                            " outside [0, " + std::to_string(tau_) + "]");
  if (t <= 0.0)
    return 0.0;
  if (t >= tau_)
    return 1.0;
  return t / tau_;
}

double RampSchedule::value(double t) const {
  const double s = fraction(t);
  // s^2 (3 - 2s) / 6 is exact at s = 0, 1/2 and 1.
  return c_ + d_ * s * s * (3.0 - 2.0 * s) / 6.0;
}

double RampSchedule::derivative(double t) const {
  const double s = fraction(t);
  return d_ * s * (1.0 - s) / tau_;
}

double solve_amplitude(double initial_hz, double final_hz) {
  return 6.0 * (final_hz - initial_hz);
}

} // namespace qotto
