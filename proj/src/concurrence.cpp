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

#include "covent/concurrence.hpp"

#include <algorithm>
#include <cmath>

namespace covent {

namespace {

// a_kl with k the A index and l the B index.
std::complex<double> amp(const PureState& p, int k, int l) { return p[2 * k + l]; }

}  // namespace

PureInvariants pure_invariants(const PureState& p) {
  PureInvariants inv;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      inv.i1 += std::norm(amp(p, k, l));
    }
  }
  std::complex<double> i2 = 0.0;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
          i2 += amp(p, k, m) * std::conj(amp(p, k, n)) * amp(p, l, n) * std::conj(amp(p, l, m));
        }
      }
    }
  }
  inv.i2 = i2.real();
  inv.i_alpha = std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]) + std::norm(p[3]);
  inv.i_beta = std::norm(p[0] * p[3] - p[1] * p[2]);
  return inv;
}

double g_pure_from_invariants(const PureInvariants& inv) {
  const double a = inv.i_alpha;
  const double b = inv.i_beta;
  const double d = a * a - 4.0 * b;
  return (a * a + 8.0 * b) - 2.0 * a * d + d * d;
}

double concurrence_pure(const PureState& p) {
  return std::min(1.0, 2.0 * std::abs(p[0] * p[3] - p[1] * p[2]));
}

Matrix4cd spin_flip(const Matrix4cd& rho) {
  const Matrix4cd yy = tensor(pauli(2), pauli(2));
  return yy * rho.conjugate() * yy;
}

double concurrence_mixed(const DensityMatrix& rho) {
  // With rho = W W^dagger, the square roots of the spectrum of rho rho~ are the
  // singular values of tau = W^T Y W (Y = sigma_y (x) sigma_y). They are read
  // off the Hermitian dilation [[0, tau], [tau^dagger, 0]], whose eigenvalues
  // are +-sigma_k, keeping absolute accuracy near zero.
  const auto eig = eig_hermitian(rho.matrix());
  const Eigen::Vector4d weights = eig.values.cwiseMax(0.0).cwiseSqrt();
  const Matrix4cd w = eig.vectors * weights.cast<std::complex<double>>().asDiagonal();
  const Matrix4cd yy = tensor(pauli(2), pauli(2));
  const Matrix4cd tau = w.transpose() * yy * w;

  using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;
  Matrix8cd dilation = Matrix8cd::Zero();
  dilation.topRightCorner<4, 4>() = tau;
  dilation.bottomLeftCorner<4, 4>() = tau.adjoint();
  const Eigen::Vector4d sv = eig_hermitian(dilation).values.head<4>().cwiseMax(0.0);
  const double c = sv(0) - sv(1) - sv(2) - sv(3);
  return std::clamp(c, 0.0, 1.0);
}

}  // namespace covent
