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

#include "qotto/propagator.hpp"

#include <string>

namespace qotto {

namespace {

CMatrix<2> ordered_product(const EvolutionSpec &spec) {
  if (spec.n_steps < 2)
    throw std::invalid_argument("EvolutionSpec: n_steps must be >= 2");
  CMatrix<2> u = CMatrix<2>::Identity();
  for_each_midpoint(spec, [&](int, double t, double dt) {
    u = expm_step(h_eff(spec.model, t, spec.mode), dt) * u;
  });
  return u;
}

} // namespace

Unitary<2> total_unitary(const EvolutionSpec &spec) {
  return Unitary<2>(ordered_product(spec));
}

Qubit evolve(const Qubit &rho, const EvolutionSpec &spec) {
  return total_unitary(spec).conjugate(rho);
}

int converged_steps(const EvolutionSpec &spec, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("converged_steps: tol must be positive");
  EvolutionSpec s = spec;
  CMatrix<2> coarse = ordered_product(s);
  while (s.n_steps <= kMaxSteps / 2) {
    EvolutionSpec fine = s;
    fine.n_steps = 2 * s.n_steps;
    const CMatrix<2> next = ordered_product(fine);
    if (max_abs(next - coarse) < tol)
      return s.n_steps;
    s = fine;
    coarse = next;
  }
  throw NonConvergenceError("converged_steps: no convergence to " +
                            std::to_string(tol) + " within " +
                            std::to_string(kMaxSteps) + " steps");
}

} // namespace qotto
