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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "covent/linalg.hpp"

/// Two-qubit states. Basis order is |00>, |01>, |10>, |11> with
/// |0> = |up> = horizontal polarization and the A qubit written first.
namespace covent {

/// Thrown when a matrix or amplitude vector violates a state invariant.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double state_tolerance = 1e-10;
inline constexpr double normalization_tolerance = 1e-12;

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix. Checked on
/// construction; never repaired.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix4cd& m);

  const Matrix4cd& matrix() const { return mat_; }
  std::complex<double> operator()(int r, int c) const { return mat_(r, c); }

 private:
  Matrix4cd mat_;
};

/// Normalized pure-state amplitudes (a00, a01, a10, a11).
class PureState {
 public:
  explicit PureState(const Eigen::Vector4cd& amps);

  const Eigen::Vector4cd& amps() const { return amps_; }
  std::complex<double> operator[](int k) const { return amps_(k); }

 private:
  Eigen::Vector4cd amps_;
};

DensityMatrix from_pure(const PureState& p);

/// Tr(rho^2), clamped into [1/4, 1].
double purity(const DensityMatrix& rho);

/// Diagonal (1/2, 0, 0, 1/2) with coherence gamma e^{i theta} between |00> and
/// |11>; gamma in [0, 1/2]. Interpolates between the classically correlated
/// state (gamma = 0) and a Bell state (gamma = 1/2).
DensityMatrix rho_u(double gamma, double theta);

enum class CanonicalState {
  singlet,
  phi_plus,
  phi_minus,
  psi_plus,
  product00,
  maximally_mixed,
  classically_correlated,
};

DensityMatrix canonical(CanonicalState which);

/// Parses the snake_case state name; throws std::invalid_argument if unknown.
CanonicalState canonical_from_name(std::string_view name);
std::string_view canonical_name(CanonicalState which);

/// (uA (x) uB) rho (uA (x) uB)^dagger. Both factors must be unitary within
/// 1e-10.
DensityMatrix apply_local_unitary(const DensityMatrix& rho, const Matrix2cd& ua,
                                  const Matrix2cd& ub);

}  // namespace covent
