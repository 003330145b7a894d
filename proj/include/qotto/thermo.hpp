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

#include <vector>

#include "qotto/linalg.hpp"

namespace qotto {

// Planck constant in peV per Hz.
inline constexpr double kPlanckPeVPerHz = 4.135667696e-3;

// Energy in peV of a stored Pauli-unit frequency. A stored operator a.sigma
// is the Hamiltonian (h/2) a.sigma, so eigenvalue a maps to (h/2) a.
constexpr double to_peV(double pauli_hz) { return 0.5 * kPlanckPeVPerHz * pauli_hz; }

enum class BathRole { hot, cold };

struct BathSpec {
  double kT; // k_B T in peV
  BathRole role = BathRole::cold;
};

// exp(-H/kT)/Z built in the eigenbasis of H. Throws for kT <= 0.
Qubit gibbs(const Operator &h, const BathSpec &bath);

// Populations of rho in the eigenbasis of h, ground first.
std::array<double, 2> populations(const Operator &h, const Qubit &rho);

// h nu / ln(p0/p1). Throws std::domain_error if p0 <= p1 (not a positive
// temperature) and std::invalid_argument if p0 + p1 != 1 or p1 <= 0.
double spin_temperature(double p0, double p1, double nu_hz);

double mean_energy(const Operator &h, const Qubit &rho);
// Tr[Hf rho_f] - Tr[Hi rho_i]; positive means work done on the medium.
double work(const Operator &hi, const Qubit &rho_i, const Operator &hf,
            const Qubit &rho_f);
// Tr[H (rho_f - rho_i)]; positive means heat absorbed by the medium.
double heat(const Operator &h, const Qubit &rho_i, const Qubit &rho_f);

// T_hot / T_cold > nu_f / nu_i.
bool working_condition(const BathSpec &hot, const BathSpec &cold, double nu_i_hz,
                       double nu_f_hz);

enum class Stroke { cooling, expansion, heating, compression };
enum class EnergyKind { work, heat };

struct StrokeLedgerEntry {
  EnergyKind kind;
  double value; // peV
  Stroke stroke;
};

// Energy exchanged per stroke. Work is only booked on the unitary strokes and
// heat only on the thermalization strokes.
class StrokeLedger {
public:
  void record(EnergyKind kind, Stroke stroke, double value_peV);
  // Sum of entries for `stroke`, 0 if none.
  double total(Stroke stroke) const;
  double net() const;
  const std::vector<StrokeLedgerEntry> &entries() const { return entries_; }

private:
  std::vector<StrokeLedgerEntry> entries_;
};

const char *to_string(Stroke s);

} // namespace qotto
