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

#include "covent/observables.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace covent {

namespace {

constexpr double kImagTolerance = 1e-10;

// Tr(a b) without forming the product.
std::complex<double> trace_of_product(const Matrix4cd& a, const Matrix4cd& b) {
  return a.transpose().cwiseProduct(b).sum();
}

double real_trace(const Matrix4cd& rho, const Matrix4cd& obs) {
  const std::complex<double> t = trace_of_product(rho, obs);
  if (std::abs(t.imag()) > kImagTolerance) {
    throw std::domain_error("expectation has imaginary part " + std::to_string(t.imag()));
  }
  return t.real();
}

}  // namespace

Axis to_axis(int k) {
  if (k < 1 || k > 3) {
    throw std::out_of_range("axis must be 1, 2 or 3, got " + std::to_string(k));
  }
  return static_cast<Axis>(k);
}

Matrix4cd local_pauli(Subsystem side, Axis axis) {
  const Matrix2cd s = pauli(index_of(axis));
  return side == Subsystem::A ? tensor(s, pauli(0)) : tensor(pauli(0), s);
}

Matrix4cd joint_pauli(Axis a, Axis b) { return tensor(pauli(index_of(a)), pauli(index_of(b))); }

double expectation(const Matrix4cd& rho, const Matrix4cd& obs) {
  if (hermiticity_error(obs) > state_tolerance) {
    throw std::invalid_argument("expectation: observable is not Hermitian");
  }
  return real_trace(rho, obs);
}

double expectation(const DensityMatrix& rho, const Matrix4cd& obs) {
  return expectation(rho.matrix(), obs);
}

double variance(const DensityMatrix& rho, const Matrix4cd& obs) {
  const double mean = expectation(rho, obs);
  const double second = real_trace(rho.matrix(), obs * obs);
  return std::max(0.0, second - mean * mean);
}

double covariance(const DensityMatrix& rho, Axis i, Axis j) {
  return covariance_from_moments(expectation(rho, joint_pauli(i, j)),
                                 expectation(rho, local_pauli(Subsystem::A, i)),
                                 expectation(rho, local_pauli(Subsystem::B, j)));
}

CorrelationData correlation_data(const Matrix4cd& op) {
  CorrelationData cd;
  for (int k = 1; k <= 3; ++k) {
    cd.bloch_a(k - 1) = real_trace(op, local_pauli(Subsystem::A, to_axis(k)));
    cd.bloch_b(k - 1) = real_trace(op, local_pauli(Subsystem::B, to_axis(k)));
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const double joint = real_trace(op, joint_pauli(to_axis(i), to_axis(j)));
      cd.corr(i - 1, j - 1) = joint;
      cd.cov(i - 1, j - 1) = covariance_from_moments(joint, cd.bloch_a(i - 1), cd.bloch_b(j - 1));
    }
  }
  return cd;
}

CorrelationData correlation_data(const DensityMatrix& rho) {
  return correlation_data(rho.matrix());
}

}  // namespace covent
