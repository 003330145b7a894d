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

#include <cstdint>
#include <string>
#include <vector>

#include "qotto/sweep.hpp"

namespace qotto {

struct PropertyResult {
  std::string name;
  double measured;  // worst observed value of the checked quantity
  double threshold; // limit it is compared against
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<PropertyResult> results;
  double seconds = 0.0;
  bool all_passed() const;
};

struct ValidationOptions {
  std::uint64_t seed = 20261018;
  // Multiplies the counter-adiabatic field in the tracking check. Anything
  // other than 1 must make that check fail.
  double cd_gain = 1.0;
  int threads = 0;
};

// Runs every invariant of the library at fixed seeds.
ValidationReport run_validation(const ValidationOptions &opts = {});

// Worst 1 - F between the state evolved from the ground state of h0(0) under
// the STA Hamiltonian and the instantaneous ground state of h0(t), over every
// step boundary of an n_steps expansion stroke.
double cd_tracking_infidelity(double tau, int n_steps = 4096, double cd_gain = 1.0);

void print_report(std::ostream &os, const ValidationReport &report);

} // namespace qotto
