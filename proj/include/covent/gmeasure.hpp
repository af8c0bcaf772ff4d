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

#include <string_view>

#include "covent/observables.hpp"
#include "covent/states.hpp"

/// The covariance entanglement measure G for two qubits,
///
///   G = sum_{i,j=1..3} C(sigma_i^A, sigma_j^B)^2 = 4 Tr[(rho - rho_A (x) rho_B)^2],
///
/// which is invariant under local unitaries and partial transposition.
/// For pure states G = C^2 (2 + C^2) with C the concurrence; for mixed states
/// C^2 (2 + C^2) <= G <= 1 + 2 C^2 (supported numerically, not proven), so
/// G > 1 certifies entanglement.
namespace covent {

/// Values of G above this are certified entangled.
inline constexpr double certification_threshold = 1.0;
inline constexpr double certification_margin = 1e-9;

/// Separable mixtures satisfy l3 >= this.
inline constexpr double l3_separable_bound = 4.0;

enum class Verdict { entangled_certified, not_certified };
std::string_view verdict_name(Verdict v);

struct ConcurrenceInterval {
  double lower = 0.0;
  double upper = 0.0;
};

struct GReport {
  double g = 0.0;     ///< covariance form
  double g_hs = 0.0;  ///< Hilbert-Schmidt form
  double l3 = 0.0;
  Verdict verdict = Verdict::not_certified;
  ConcurrenceInterval conc_interval;
};

/// Sum of squared covariances. Rounding outside [0, 3] up to 1e-10 is clamped;
/// anything further out is returned as is, since it means the input was not a
/// state.
double g_from_covariances(const CorrelationData& cd);
double g_covariance(const DensityMatrix& rho);

/// 4 Tr[(op - op_A (x) op_B)^2]; the raw-matrix overload accepts non-physical
/// operators such as partial transposes.
double g_hilbert_schmidt(const Matrix4cd& op);
double g_hilbert_schmidt(const DensityMatrix& rho);

/// Three-setting local uncertainty sum of Var(sigma_k^A + sigma_k^B). The
/// 0/90, 45/135 and R/L polarization bases map to sigma_3, sigma_1, sigma_2.
double l3(const DensityMatrix& rho);

/// Concurrence range compatible with a measured G: the upper end inverts the
/// pure-state floor G = C^2 (2 + C^2), the lower end inverts G = 1 + 2 C^2 and
/// is zero for G <= 1. Inputs within 1e-9 of [0, 3] are clamped.
ConcurrenceInterval concurrence_interval(double g);

Verdict verdict_for(double g);

GReport analyze(const DensityMatrix& rho);

}  // namespace covent
