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

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "covent/states.hpp"

/// Seeded random-state ensembles. Every sample is a pure function of
/// (seed, index, parameters) drawn from its own counter-based stream, so
/// ensembles can be generated out of order or in parallel and stay
/// byte-identical.
namespace covent {

/// Rejection sampling gave up; the requested purity window is infeasible in
/// practice.
class SamplingExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long long max_rejection_attempts = 1'000'000;

/// Haar-random pure state: four complex standard normals, normalized.
PureState haar_pure(std::uint64_t seed, std::uint64_t index);

/// Induced (Hilbert-Schmidt) measure: X X^dagger / Tr(X X^dagger) with X a
/// 4 x rank complex Gaussian matrix.
DensityMatrix ginibre(std::uint64_t seed, std::uint64_t index, int rank);

/// First rank-4 Ginibre draw whose purity lies in [target - window,
/// target + window]. Windows reaching purity 1 draw pure states instead,
/// since rank-4 draws are never exactly pure.
DensityMatrix fixed_purity(std::uint64_t seed, std::uint64_t index, double target, double window);

/// sum_k p_k |a_k><a_k| (x) |b_k><b_k| with Haar single-qubit factors and
/// flat-Dirichlet weights.
DensityMatrix separable_mixture(std::uint64_t seed, std::uint64_t index, int terms);

struct LocalUnitary {
  Matrix2cd a;
  Matrix2cd b;
};

/// Two independent Haar-random 2x2 unitaries.
LocalUnitary random_local_unitary(std::uint64_t seed, std::uint64_t index);

enum class EnsembleKind { haar_pure, ginibre, fixed_purity, separable_mixture, rho_u_sweep };

std::string_view ensemble_kind_name(EnsembleKind k);
EnsembleKind ensemble_kind_from_name(std::string_view name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::ginibre;
  std::uint64_t count = 1000;
  int rank = 4;                  // ginibre
  double purity_target = 0.46;   // fixed_purity
  double purity_window = 0.005;  // fixed_purity
  int mixture_terms = 4;         // separable_mixture
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on out-of-range fields.
void validate(const EnsembleSpec& spec);

/// rho_u with gamma spread evenly over [0, 1/2] across `count` samples and a
/// random phase.
DensityMatrix rho_u_sweep(std::uint64_t seed, std::uint64_t index, std::uint64_t count);

DensityMatrix sample(const EnsembleSpec& spec, std::uint64_t index);

std::vector<DensityMatrix> generate(const EnsembleSpec& spec, unsigned workers = 1);

}  // namespace covent
