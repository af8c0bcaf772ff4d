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

#include "covent/states.hpp"

namespace covent {

/// Local-unitary invariants of a pure two-qubit state a_kl.
struct PureInvariants {
  double i1 = 0.0;       ///< sum |a_kl|^2
  double i2 = 0.0;       ///< sum a_km a*_kn a_ln a*_lm
  double i_alpha = 0.0;  ///< |a00|^2 + |a01|^2 + |a10|^2 + |a11|^2
  double i_beta = 0.0;   ///< |a00 a11 - a01 a10|^2
};

PureInvariants pure_invariants(const PureState& p);

/// G written in the invariants:
/// (Ia^2 + 8 Ib) - 2 Ia (Ia^2 - 4 Ib) + (Ia^2 - 4 Ib)^2.
double g_pure_from_invariants(const PureInvariants& inv);

/// 2 |a00 a11 - a01 a10|.
double concurrence_pure(const PureState& p);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_k are the
/// descending square roots of the spectrum of sqrt(rho) rho~ sqrt(rho) and
/// rho~ = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
double concurrence_mixed(const DensityMatrix& rho);

/// The spin-flipped matrix rho~.
Matrix4cd spin_flip(const Matrix4cd& rho);

}  // namespace covent
