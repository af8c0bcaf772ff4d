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
#include <array>
#include <cstdint>
#include <stdexcept>

#include "covent/observables.hpp"
#include "covent/states.hpp"

/// Finite-shot simulation of the nine-setting local measurement protocol.
///
/// Setting (i, j) measures sigma_i on qubit A and sigma_j on qubit B, each
/// with outcomes +1 / -1, and records a 2x2 table of coincidence counts.
/// Singles rates for each setting come from the marginals of its own table.
/// Detectors are ideal: no loss, dark counts or accidentals.
namespace covent {

/// Outcome order inside every table: (+,+), (+,-), (-,+), (-,-).
using OutcomeTable = std::array<std::int64_t, 4>;
using OutcomeProbabilities = std::array<double, 4>;

inline constexpr int setting_count = 9;

/// Row-major setting index for axes (i, j): 3 (i - 1) + (j - 1).
inline int setting_index(Axis i, Axis j) { return 3 * (index_of(i) - 1) + (index_of(j) - 1); }

struct MeasurementRecord {
  std::int64_t shots_per_setting = 0;
  std::uint64_t seed = 0;
  std::array<OutcomeTable, setting_count> counts{};
};

/// Throws std::invalid_argument when tables are empty, negative, or do not
/// sum to shots_per_setting.
void validate(const MeasurementRecord& rec);

struct GEstimate {
  double g_hat = 0.0;
  Eigen::Matrix3d cov_hat = Eigen::Matrix3d::Zero();
  double std_error = 0.0;  ///< bootstrap standard deviation of g_hat
  double ci_low = 0.0;     ///< 2.5% bootstrap percentile
  double ci_high = 0.0;    ///< 97.5% bootstrap percentile
  std::int64_t shots_per_setting = 0;
};

inline constexpr int default_bootstrap_resamples = 200;

/// p(a, b) = Tr[rho (P_a^i (x) P_b^j)] with P_a^i = (1 + a sigma_i) / 2.
OutcomeProbabilities outcome_probabilities(const DensityMatrix& rho, Axis i, Axis j);

/// Multinomial counts for one table, drawn from stream (seed, counts, stream_index).
OutcomeTable draw_counts(const OutcomeProbabilities& p, std::int64_t shots, std::uint64_t seed,
                         std::uint64_t stream_index);

MeasurementRecord simulate_record(const DensityMatrix& rho, std::int64_t shots, std::uint64_t seed);

/// Plug-in covariance of one table: <ab> - <a><b> from empirical frequencies.
double covariance_from_counts(const OutcomeTable& n);

/// Plug-in G from a record; standard error from multinomial bootstrap resamples of
/// each table (deterministic in the record's seed).
GEstimate estimate_g(const MeasurementRecord& rec, int resamples = default_bootstrap_resamples);

/// Raised when the state cannot be certified through G at all (G <= 1).
class NotCertifiable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct VerdictSearchOptions {
  int trials = 100;
  int required_successes = 95;
  int resamples = default_bootstrap_resamples;
  std::int64_t max_shots = std::int64_t{1} << 24;
};

/// Smallest shots-per-setting such that g_hat - sigma * std_error > 1 in at
/// least 95 of 100 seeded trials: doubling search, then bisection between
/// the last failing and first passing grid points.
std::int64_t shots_for_verdict(const DensityMatrix& rho, double confidence_sigma,
                               std::uint64_t seed, const VerdictSearchOptions& opts = {});

/// Number of successful trials at a given shot count (exposed for tests).
int verdict_successes(const DensityMatrix& rho, double confidence_sigma, std::int64_t shots,
                      std::uint64_t seed, const VerdictSearchOptions& opts = {});

}  // namespace covent
