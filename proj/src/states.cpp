// Copyright 2026 The Covent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covent/states.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace covent {

namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4cd& m) : mat_(m) {
  if (!m.allFinite()) {
    throw InvalidState("density matrix has non-finite entries");
  }
  const double herm = hermiticity_error(m);
  if (herm > state_tolerance) {
    throw InvalidState(
        "density matrix is not Hermitian (max |rho - rho^dagger| = " + describe(herm) + ")");
  }
  const std::complex<double> tr = m.trace();
  if (std::abs(tr - 1.0) > state_tolerance) {
    throw InvalidState("density matrix trace is " + describe(tr.real()) + ", expected 1");
  }
  const double smallest = eig_hermitian(m).values.minCoeff();
  if (smallest < -psd_tolerance) {
    throw InvalidState("density matrix is not positive semidefinite (eigenvalue " +
                       describe(smallest) + ")");
  }
}

PureState::PureState(const Eigen::Vector4cd& amps) : amps_(amps) {
  if (!amps.allFinite()) {
    throw InvalidState("pure state has non-finite amplitudes");
  }
  const double norm2 = amps.squaredNorm();
  if (std::abs(norm2 - 1.0) > normalization_tolerance) {
    throw InvalidState("pure state is not normalized (sum |a|^2 = " + describe(norm2) + ")");
  }
}

DensityMatrix from_pure(const PureState& p) { return DensityMatrix(p.amps() * p.amps().adjoint()); }

double purity(const DensityMatrix& rho) {
  const double p = (rho.matrix() * rho.matrix()).trace().real();
  return std::clamp(p, 0.25, 1.0);
}

DensityMatrix rho_u(double gamma, double theta) {
  if (!(gamma >= 0.0 && gamma <= 0.5)) {
    throw std::invalid_argument("rho_u: gamma must lie in [0, 1/2], got " + describe(gamma));
  }
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  m(0, 3) = std::polar(gamma, theta);
  m(3, 0) = std::polar(gamma, -theta);
  return DensityMatrix(m);
}

DensityMatrix canonical(CanonicalState which) {
  const double h = 1.0 / std::sqrt(2.0);
  auto pure = [](double a00, double a01, double a10, double a11) {
    Eigen::Vector4cd v;
    v << a00, a01, a10, a11;
    return from_pure(PureState(v));
  };
  switch (which) {
    case CanonicalState::singlet:
      return pure(0, h, -h, 0);
    case CanonicalState::phi_plus:
      return pure(h, 0, 0, h);
    case CanonicalState::phi_minus:
      return pure(h, 0, 0, -h);
    case CanonicalState::psi_plus:
      return pure(0, h, h, 0);
    case CanonicalState::product00:
      return pure(1, 0, 0, 0);
    case CanonicalState::maximally_mixed:
      return DensityMatrix(Matrix4cd::Identity() / 4.0);
    case CanonicalState::classically_correlated:
      return rho_u(0.0, 0.0);
  }
  throw std::invalid_argument("unknown canonical state");
}

namespace {

constexpr std::array<std::pair<CanonicalState, std::string_view>, 7> kNames{{
    {CanonicalState::singlet, "singlet"},
    {CanonicalState::phi_plus, "phi_plus"},
    {CanonicalState::phi_minus, "phi_minus"},
    {CanonicalState::psi_plus, "psi_plus"},
    {CanonicalState::product00, "product00"},
    {CanonicalState::maximally_mixed, "maximally_mixed"},
    {CanonicalState::classically_correlated, "classically_correlated"},
}};

}  // namespace

CanonicalState canonical_from_name(std::string_view name) {
  for (const auto& [state, n] : kNames) {
    if (n == name) return state;
  }
  throw std::invalid_argument("unknown canonical state '" + std::string(name) + "'");
}

std::string_view canonical_name(CanonicalState which) {
  for (const auto& [state, n] : kNames) {
    if (state == which) return n;
  }
  return "unknown";
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const Matrix2cd& ua,
                                  const Matrix2cd& ub) {
  if (unitarity_error(ua) > state_tolerance || unitarity_error(ub) > state_tolerance) {
    throw std::invalid_argument("apply_local_unitary: local factor is not unitary");
  }
  const Matrix4cd u = tensor(ua, ub);
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

}  // namespace covent
