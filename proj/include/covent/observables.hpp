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

#include <Eigen/Core>

#include "covent/linalg.hpp"
#include "covent/states.hpp"

namespace covent {

/// Pauli measurement direction; the value is the Pauli index.
enum class Axis : int { x = 1, y = 2, z = 3 };

/// Throws std::out_of_range unless k is 1, 2 or 3.
Axis to_axis(int k);
inline int index_of(Axis a) { return static_cast<int>(a); }

/// sigma_i (x) 1 for side A, 1 (x) sigma_j for side B, and the joint product.
Matrix4cd local_pauli(Subsystem side, Axis axis);
Matrix4cd joint_pauli(Axis a, Axis b);

/// Pauli correlations of a two-qubit operator. Index [i-1][j-1] belongs to
/// sigma_i on A and sigma_j on B.
struct CorrelationData {
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();   ///< <a b> - <a><b>
  Eigen::Matrix3d corr = Eigen::Matrix3d::Zero();  ///< raw <sigma_i (x) sigma_j>
  Eigen::Vector3d bloch_a = Eigen::Vector3d::Zero();
  Eigen::Vector3d bloch_b = Eigen::Vector3d::Zero();
};

/// The single covariance formula shared by exact and counted statistics.
inline double covariance_from_moments(double joint, double mean_a, double mean_b) {
  return joint - mean_a * mean_b;
}

/// Tr(rho obs). Throws if obs is not Hermitian or the trace has an imaginary
/// part above 1e-10.
double expectation(const Matrix4cd& rho, const Matrix4cd& obs);
double expectation(const DensityMatrix& rho, const Matrix4cd& obs);

/// <obs^2> - <obs>^2, with rounding below zero clamped.
double variance(const DensityMatrix& rho, const Matrix4cd& obs);

double covariance(const DensityMatrix& rho, Axis i, Axis j);

/// Works on any Hermitian unit-trace operator, including non-physical ones
/// such as a partially transposed entangled state.
CorrelationData correlation_data(const Matrix4cd& op);
CorrelationData correlation_data(const DensityMatrix& rho);

}  // namespace covent
