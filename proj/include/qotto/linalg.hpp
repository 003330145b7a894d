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

/**
 * @file linalg.hpp
 * Small-matrix complex linear algebra for one and two qubits.
 *
 * Hamiltonians are stored as real Pauli coefficients in ordinary frequency
 * units (Hz). A stored operator a0*I + a.sigma stands for the physical
 * Hamiltonian (h/2)(a0*I + a.sigma), so its eigenvalues +-|a| are half the
 * level splitting in Hz and the propagator over dt is exp(-i*pi*dt*(a0 + a.sigma)).
 */
#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qotto {

using complex_t = std::complex<double>;

template <int D> using CMatrix = Eigen::Matrix<complex_t, D, D>;
template <int D> using CVector = Eigen::Matrix<complex_t, D, 1>;

namespace tol {
inline constexpr double structural = 1e-12;
inline constexpr double spectral = 1e-10;
inline constexpr double psd_slack = 1e-10;
} // namespace tol

// Max-entry norm, used for every "within tolerance" comparison of matrices.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
  return m.cwiseAbs().maxCoeff();
}

//----------------------------------------------------------------------------
// Operator
//----------------------------------------------------------------------------

// Hermitian 2x2 operator held in the Pauli basis. Hermitian by construction.
class Operator {
public:
  Operator() = default;

  static Operator pauli(double a0, double ax, double ay, double az);
  // Throws std::invalid_argument unless m is Hermitian within tol::structural.
  static Operator from_matrix(const CMatrix<2> &m);

  double identity() const { return c_[0]; }
  double x() const { return c_[1]; }
  double y() const { return c_[2]; }
  double z() const { return c_[3]; }
  const std::array<double, 4> &coefficients() const { return c_; }

  // |(ax, ay, az)|, half the spread of the spectrum.
  double field_norm() const;
  // Spectral norm |a0| + |a|.
  double op_norm() const;

  CMatrix<2> matrix() const;

  Operator operator+(const Operator &o) const;
  Operator operator*(double s) const;
  bool operator==(const Operator &) const = default;

private:
  explicit Operator(std::array<double, 4> c) : c_(c) {}
  std::array<double, 4> c_{};
};

inline Operator operator*(double s, const Operator &o) { return o * s; }

// a0*I + ax*sx + ay*sy + az*sz. Non-finite input throws std::invalid_argument.
Operator pauli_operator(double a0, double ax, double ay, double az);

//----------------------------------------------------------------------------
// DensityMatrix / Unitary
//----------------------------------------------------------------------------

template <int D> class DensityMatrix {
  static_assert(D == 2 || D == 4, "one or two qubits only");

public:
  // Validates unit trace, Hermiticity and positivity.
  explicit DensityMatrix(const CMatrix<D> &m);

  static DensityMatrix maximally_mixed() {
    return DensityMatrix(CMatrix<D>::Identity() / double(D));
  }
  static DensityMatrix pure(const CVector<D> &psi) {
    const CVector<D> v = psi.normalized();
    return DensityMatrix(v * v.adjoint());
  }

  const CMatrix<D> &matrix() const { return m_; }
  complex_t operator()(int r, int c) const { return m_(r, c); }
  double purity() const { return (m_ * m_).trace().real(); }

private:
  CMatrix<D> m_;
};

template <int D> class Unitary {
  static_assert(D == 2 || D == 4, "one or two qubits only");

public:
  // Validates U^dagger U = I within tol::spectral.
  explicit Unitary(const CMatrix<D> &m);

  static Unitary identity() { return Unitary(CMatrix<D>::Identity()); }

  const CMatrix<D> &matrix() const { return m_; }
  Unitary operator*(const Unitary &o) const { return Unitary(m_ * o.m_); }

  DensityMatrix<D> conjugate(const DensityMatrix<D> &rho) const {
    return DensityMatrix<D>(m_ * rho.matrix() * m_.adjoint());
  }

private:
  CMatrix<D> m_;
};

using Qubit = DensityMatrix<2>;
using QubitPair = DensityMatrix<4>;

//----------------------------------------------------------------------------
// Operations
//----------------------------------------------------------------------------

// exp(-i*pi*dt*H) in closed form; dt in seconds, dt >= 0.
Unitary<2> expm_unitary(const Operator &h, double dt);

// Raw closed-form step without the unitarity check, for inner loops.
CMatrix<2> expm_step(const Operator &h, double dt);

struct Eigensystem {
  std::array<double, 2> values;     // ascending, Hz
  std::array<CVector<2>, 2> vectors; // orthonormal, first nonzero entry real > 0
};

Eigensystem eigh(const Operator &h);

// |Tr(a b^dagger)| / sqrt(Tr(a a^dagger) Tr(b b^dagger)).
template <int D>
double fidelity(const DensityMatrix<D> &rho_e, const DensityMatrix<D> &rho_t);

QubitPair tensor(const Qubit &a, const Qubit &b);
// keep = 1 keeps the first factor, keep = 2 the second.
Qubit partial_trace(const QubitPair &rho, int keep);
Unitary<4> swap_gate();

} // namespace qotto
