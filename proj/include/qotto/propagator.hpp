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

#include "qotto/linalg.hpp"
#include "qotto/model.hpp"

namespace qotto {

inline constexpr int kDefaultSteps = 4096;
inline constexpr int kMaxSteps = 1 << 20;

struct EvolutionSpec {
  LZModel model;
  DriveMode mode = DriveMode::NA;
  int n_steps = kDefaultSteps;

  double tau() const { return model.tau(); }
  double dt() const { return model.tau() / n_steps; }
};

class NonConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Exponential-midpoint product, latest step leftmost:
// U = prod_{k=n-1..0} exp(-i pi dt H(t_k + dt/2)).
// Throws std::invalid_argument if n_steps < 2.
Unitary<2> total_unitary(const EvolutionSpec &spec);

Qubit evolve(const Qubit &rho, const EvolutionSpec &spec);

// Visits the midpoint of every step with its index, time and width.
template <class F> void for_each_midpoint(const EvolutionSpec &spec, F &&f) {
  const double dt = spec.dt();
  for (int k = 0; k < spec.n_steps; ++k)
    f(k, (k + 0.5) * dt, dt);
}

// Doubles spec.n_steps until total_unitary(n) and total_unitary(2n) differ by
// less than tol in max-entry norm; returns that n. Throws NonConvergenceError
// once n would exceed kMaxSteps.
int converged_steps(const EvolutionSpec &spec, double tol);

} // namespace qotto
