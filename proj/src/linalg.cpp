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

#include "qotto/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qotto {

namespace {

const CMatrix<2> &sigma_x() {
  static const CMatrix<2> m = (CMatrix<2>() << 0, 1, 1, 0).finished();
  return m;
}
const CMatrix<2> &sigma_y() {
  static const CMatrix<2> m =
      (CMatrix<2>() << 0, complex_t(0, -1), complex_t(0, 1), 0).finished();
  return m;
}
const CMatrix<2> &sigma_z() {
  static const CMatrix<2> m = (CMatrix<2>() << 1, 0, 0, -1).finished();
  return m;
}

// First entry with magnitude above this is made real positive.
constexpr double kGaugeFloor = 1e-14;

CVector<2> fix_gauge(CVector<2> v) {
  v.normalize();
  for (int i = 0; i < 2; ++i) {
    if (std::abs(v(i)) > kGaugeFloor) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

} // namespace

//----------------------------------------------------------------------------
// Operator
//----------------------------------------------------------------------------

Operator Operator::pauli(double a0, double ax, double ay, double az) {
  for (double a : {a0, ax, ay, az})
    if (!std::isfinite(a))
      throw std::invalid_argument("pauli_operator: non-finite coefficient");
  return Operator({a0, ax, ay, az});
}

Operator Operator::from_matrix(const CMatrix<2> &m) {
  if (max_abs(m - m.adjoint()) > tol::structural)
    throw std::invalid_argument("Operator: matrix is not Hermitian");
  // Tr(sigma_k M)/2 recovers each coefficient.
  return pauli(0.5 * (m(0, 0) + m(1, 1)).real(), m(0, 1).real(),
               -m(0, 1).imag(), 0.5 * (m(0, 0) - m(1, 1)).real());
}

double Operator::field_norm() const { return std::hypot(c_[1], c_[2], c_[3]); }

double Operator::op_norm() const { return std::abs(c_[0]) + field_norm(); }

CMatrix<2> Operator::matrix() const {
  return c_[0] * CMatrix<2>::Identity() + c_[1] * sigma_x() +
         c_[2] * sigma_y() + c_[3] * sigma_z();
}

Operator Operator::operator+(const Operator &o) const {
  return Operator({c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2],
                   c_[3] + o.c_[3]});
}

Operator Operator::operator*(double s) const {
  return Operator({s * c_[0], s * c_[1], s * c_[2], s * c_[3]});
}

Operator pauli_operator(double a0, double ax, double ay, double az) {
  return Operator::pauli(a0, ax, ay, az);
}

//----------------------------------------------------------------------------
// DensityMatrix / Unitary
//----------------------------------------------------------------------------

template <int D> DensityMatrix<D>::DensityMatrix(const CMatrix<D> &m) : m_(m) {
  if (!m.allFinite())
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  if (std::abs(m.trace() - 1.0) > tol::structural)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  if (max_abs(m - m.adjoint()) > tol::structural)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix<D>> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::psd_slack)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

template <int D> Unitary<D>::Unitary(const CMatrix<D> &m) : m_(m) {
  if (max_abs(m.adjoint() * m - CMatrix<D>::Identity()) > tol::spectral)
    throw std::invalid_argument("Unitary: U^dagger U differs from identity");
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;
template class Unitary<2>;
template class Unitary<4>;

//----------------------------------------------------------------------------
// Operations
//----------------------------------------------------------------------------

CMatrix<2> expm_step(const Operator &h, double dt) {
  const double r = h.field_norm();
  const double theta = std::numbers::pi * dt * r;
  const complex_t phase = std::polar(1.0, -std::numbers::pi * dt * h.identity());
  CMatrix<2> u = std::cos(theta) * CMatrix<2>::Identity();
  if (r > 0.0) {
    const double s = std::sin(theta) / r;
    const complex_t mis(0, -s);
    u(0, 0) += mis * h.z();
    u(1, 1) -= mis * h.z();
    u(0, 1) += mis * complex_t(h.x(), -h.y());
    u(1, 0) += mis * complex_t(h.x(), h.y());
  }
  return phase * u;
}

Unitary<2> expm_unitary(const Operator &h, double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("expm_unitary: dt must be finite and >= 0");
  return Unitary<2>(expm_step(h, dt));
}

Eigensystem eigh(const Operator &h) {
  const double r = h.field_norm();
  Eigensystem es;
  es.values = {h.identity() - r, h.identity() + r};
  if (r == 0.0) {
    es.vectors = {CVector<2>(1, 0), CVector<2>(0, 1)};
    return es;
  }
  const double nx = h.x() / r, ny = h.y() / r, nz = h.z() / r;
  const complex_t minus(nx, -ny), plus(nx, ny);
  // Pick the algebraically equivalent form that avoids cancellation.
  CVector<2> lower, upper;
  if (nz >= 0.0) {
    lower << -minus, 1.0 + nz;
    upper << 1.0 + nz, plus;
  } else {
    lower << 1.0 - nz, -plus;
    upper << minus, 1.0 - nz;
  }
  es.vectors = {fix_gauge(lower), fix_gauge(upper)};
  return es;
}

template <int D>
double fidelity(const DensityMatrix<D> &rho_e, const DensityMatrix<D> &rho_t) {
  const auto &a = rho_e.matrix();
  const auto &b = rho_t.matrix();
  const double na = (a * a.adjoint()).trace().real();
  const double nb = (b * b.adjoint()).trace().real();
  if (!(na > 0.0) || !(nb > 0.0))
    throw std::invalid_argument("fidelity: zero Hilbert-Schmidt norm");
  const double f = std::abs((a * b.adjoint()).trace()) / std::sqrt(na * nb);
  return std::min(f, 1.0);
}

template double fidelity<2>(const Qubit &, const Qubit &);
template double fidelity<4>(const QubitPair &, const QubitPair &);

QubitPair tensor(const Qubit &a, const Qubit &b) {
  CMatrix<4> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b.matrix();
  return QubitPair(m);
}

Qubit partial_trace(const QubitPair &rho, int keep) {
  if (keep != 1 && keep != 2)
    throw std::invalid_argument("partial_trace: keep must be 1 or 2, got " +
                                std::to_string(keep));
  // Basis index is 2*i1 + i2.
  CMatrix<2> out = CMatrix<2>::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k)
        out(a, b) += keep == 1 ? rho(2 * a + k, 2 * b + k)
                               : rho(2 * k + a, 2 * k + b);
  return Qubit(out);
}

Unitary<4> swap_gate() {
  CMatrix<4> m = CMatrix<4>::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return Unitary<4>(m);
}

} // namespace qotto
