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

#include "covent/gmeasure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace covent {

namespace {

constexpr double kClampTolerance = 1e-10;
constexpr double kIntervalTolerance = 1e-9;
constexpr double kGMax = 3.0;

double clamp_g(double g) {
  if (g < 0.0 && g >= -kClampTolerance) return 0.0;
  if (g > kGMax && g <= kGMax + kClampTolerance) return kGMax;
  return g;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  return v == Verdict::entangled_certified ? "entangled_certified" : "not_certified";
}

double g_from_covariances(const CorrelationData& cd) { return clamp_g(cd.cov.squaredNorm()); }

double g_covariance(const DensityMatrix& rho) { return g_from_covariances(correlation_data(rho)); }

double g_hilbert_schmidt(const Matrix4cd& op) {
  const Matrix4cd diff =
      op - tensor(partial_trace(op, Subsystem::A), partial_trace(op, Subsystem::B));
  // diff is Hermitian, so Tr(diff^2) is its squared Frobenius norm.
  return clamp_g(4.0 * diff.squaredNorm());
}

double g_hilbert_schmidt(const DensityMatrix& rho) { return g_hilbert_schmidt(rho.matrix()); }

double l3(const DensityMatrix& rho) {
  double total = 0.0;
  for (Axis axis : {Axis::z, Axis::x, Axis::y}) {
    total += variance(rho, local_pauli(Subsystem::A, axis) + local_pauli(Subsystem::B, axis));
  }
  return total;
}

ConcurrenceInterval concurrence_interval(double g) {
  if (!(g >= -kIntervalTolerance && g <= kGMax + kIntervalTolerance)) {
    throw std::domain_error("concurrence_interval: G must lie in [0, 3], got " + std::to_string(g));
  }
  g = std::clamp(g, 0.0, kGMax);
  ConcurrenceInterval out;
  out.upper = std::min(1.0, std::sqrt(std::max(0.0, std::sqrt(1.0 + g) - 1.0)));
  out.lower = g > 1.0 ? std::min(1.0, std::sqrt((g - 1.0) / 2.0)) : 0.0;
  out.lower = std::min(out.lower, out.upper);
  return out;
}

Verdict verdict_for(double g) {
  return g > certification_threshold + certification_margin ? Verdict::entangled_certified
                                                            : Verdict::not_certified;
}

GReport analyze(const DensityMatrix& rho) {
  GReport r;
  r.g = g_covariance(rho);
  r.g_hs = g_hilbert_schmidt(rho);
  r.l3 = l3(rho);
  r.verdict = verdict_for(r.g);
  r.conc_interval = concurrence_interval(std::clamp(r.g, 0.0, kGMax));
  return r;
}

}  // namespace covent
