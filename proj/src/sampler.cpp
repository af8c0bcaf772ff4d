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

#include "covent/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "covent/gmeasure.hpp"
#include "covent/random.hpp"

namespace covent {

namespace {

constexpr double kProbabilityTolerance = 1e-12;

// Sequential conditional binomials over the four outcomes.
template <typename Engine>
OutcomeTable multinomial(Engine& engine, const OutcomeProbabilities& p, std::int64_t shots) {
  std::array<double, 4> suffix{};
  double acc = 0.0;
  for (int k = 3; k >= 0; --k)
    suffix[static_cast<std::size_t>(k)] = (acc += p[static_cast<std::size_t>(k)]);

  OutcomeTable n{};
  std::int64_t remaining = shots;
  for (std::size_t k = 0; k < 3 && remaining > 0; ++k) {
    const double q = suffix[k] > 0.0 ? std::clamp(p[k] / suffix[k], 0.0, 1.0) : 0.0;
    if (q <= 0.0) continue;
    if (q >= 1.0) {
      n[k] = remaining;
      remaining = 0;
      break;
    }
    std::binomial_distribution<std::int64_t> bin(remaining, q);
    n[k] = bin(engine);
    remaining -= n[k];
  }
  n[3] += remaining;
  return n;
}

OutcomeProbabilities frequencies(const OutcomeTable& n) {
  const double total = static_cast<double>(n[0] + n[1] + n[2] + n[3]);
  return {n[0] / total, n[1] / total, n[2] / total, n[3] / total};
}

Eigen::Matrix3d covariances_of(const std::array<OutcomeTable, setting_count>& tables) {
  Eigen::Matrix3d cov;
  for (int s = 0; s < setting_count; ++s)
    cov(s / 3, s % 3) = covariance_from_counts(tables[static_cast<std::size_t>(s)]);
  return cov;
}

}  // namespace

void validate(const MeasurementRecord& rec) {
  if (rec.shots_per_setting < 1) {
    throw std::invalid_argument("measurement record has no shots");
  }
  for (int s = 0; s < setting_count; ++s) {
    const auto& t = rec.counts[static_cast<std::size_t>(s)];
    std::int64_t sum = 0;
    for (const auto c : t) {
      if (c < 0) throw std::invalid_argument("measurement record has negative counts");
      sum += c;
    }
    if (sum != rec.shots_per_setting) {
      throw std::invalid_argument(
          "setting " + std::to_string(s / 3 + 1) + std::to_string(s % 3 + 1) + " counts sum to " +
          std::to_string(sum) + ", expected " + std::to_string(rec.shots_per_setting));
    }
  }
}

OutcomeProbabilities outcome_probabilities(const DensityMatrix& rho, Axis i, Axis j) {
  const Matrix2cd id = pauli(0);
  const Matrix2cd si = pauli(index_of(i));
  const Matrix2cd sj = pauli(index_of(j));
  OutcomeProbabilities p{};
  std::size_t k = 0;
  for (const double a : {1.0, -1.0}) {
    for (const double b : {1.0, -1.0}) {
      const Matrix2cd pa = (id + a * si) / 2.0;
      const Matrix2cd pb = (id + b * sj) / 2.0;
      const double v = (rho.matrix() * tensor(pa, pb)).trace().real();
      p[k++] = v < 0.0 && v >= -kProbabilityTolerance ? 0.0 : v;
    }
  }
  return p;
}

OutcomeTable draw_counts(const OutcomeProbabilities& p, std::int64_t shots, std::uint64_t seed,
                         std::uint64_t stream_index) {
  PhiloxEngine engine(seed, Stream::counts, stream_index);
  return multinomial(engine, p, shots);
}

MeasurementRecord simulate_record(const DensityMatrix& rho, std::int64_t shots,
                                  std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("simulate_record: shots must be >= 1");
  MeasurementRecord rec;
  rec.shots_per_setting = shots;
  rec.seed = seed;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const int s = setting_index(to_axis(i), to_axis(j));
      rec.counts[static_cast<std::size_t>(s)] =
          draw_counts(outcome_probabilities(rho, to_axis(i), to_axis(j)), shots, seed,
                      static_cast<std::uint64_t>(s));
    }
  }
  return rec;
}

double covariance_from_counts(const OutcomeTable& n) {
  const auto f = frequencies(n);
  const double joint = f[0] - f[1] - f[2] + f[3];
  const double mean_a = f[0] + f[1] - f[2] - f[3];
  const double mean_b = f[0] - f[1] + f[2] - f[3];
  return covariance_from_moments(joint, mean_a, mean_b);
}

GEstimate estimate_g(const MeasurementRecord& rec, int resamples) {
  validate(rec);
  if (resamples < 2) throw std::invalid_argument("estimate_g: need at least 2 bootstrap resamples");
  GEstimate est;
  est.shots_per_setting = rec.shots_per_setting;
  est.cov_hat = covariances_of(rec.counts);
  est.g_hat = est.cov_hat.squaredNorm();

  std::vector<double> replicas(static_cast<std::size_t>(resamples));
  std::array<OutcomeProbabilities, setting_count> freq;
  for (int s = 0; s < setting_count; ++s)
    freq[static_cast<std::size_t>(s)] = frequencies(rec.counts[static_cast<std::size_t>(s)]);
  for (int b = 0; b < resamples; ++b) {
    std::array<OutcomeTable, setting_count> tables;
    for (int s = 0; s < setting_count; ++s) {
      PhiloxEngine engine(
          rec.seed, Stream::bootstrap,
          static_cast<std::uint64_t>(b) * setting_count + static_cast<std::uint64_t>(s));
      tables[static_cast<std::size_t>(s)] =
          multinomial(engine, freq[static_cast<std::size_t>(s)], rec.shots_per_setting);
    }
    replicas[static_cast<std::size_t>(b)] = covariances_of(tables).squaredNorm();
  }

  double mean = 0.0;
  for (const double r : replicas) mean += r;
  mean /= resamples;
  double ss = 0.0;
  for (const double r : replicas) ss += (r - mean) * (r - mean);
  est.std_error = std::sqrt(ss / (resamples - 1));

  std::sort(replicas.begin(), replicas.end());
  auto percentile = [&](double q) {
    const double pos = q * (resamples - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, replicas.size() - 1);
    return replicas[lo] + (pos - static_cast<double>(lo)) * (replicas[hi] - replicas[lo]);
  };
  est.ci_low = percentile(0.025);
  est.ci_high = percentile(0.975);
  return est;
}

int verdict_successes(const DensityMatrix& rho, double confidence_sigma, std::int64_t shots,
                      std::uint64_t seed, const VerdictSearchOptions& opts) {
  int successes = 0;
  for (int t = 0; t < opts.trials; ++t) {
    const auto rec = simulate_record(rho, shots, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto est = estimate_g(rec, opts.resamples);
    if (est.g_hat - confidence_sigma * est.std_error > certification_threshold) ++successes;
  }
  return successes;
}

std::int64_t shots_for_verdict(const DensityMatrix& rho, double confidence_sigma,
                               std::uint64_t seed, const VerdictSearchOptions& opts) {
  const double g = g_covariance(rho);
  if (verdict_for(g) != Verdict::entangled_certified) {
    throw NotCertifiable("state has G = " + std::to_string(g) +
                         " <= 1 and cannot be certified through G");
  }
  auto passes = [&](std::int64_t n) {
    return verdict_successes(rho, confidence_sigma, n, seed, opts) >= opts.required_successes;
  };

  std::int64_t hi = 1;
  while (!passes(hi)) {
    if (hi >= opts.max_shots) {
      throw std::runtime_error("shots_for_verdict: no passing shot count up to " +
                               std::to_string(opts.max_shots));
    }
    hi *= 2;
  }
  std::int64_t lo = hi / 2;  // last failing grid point (0 if hi == 1)
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (passes(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace covent
