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

#include "covent/ensembles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "covent/parallel.hpp"
#include "covent/random.hpp"

namespace covent {

namespace {

class Gaussian {
 public:
  explicit Gaussian(PhiloxEngine& engine) : engine_(engine) {}

  std::complex<double> complex() {
    const double re = dist_(engine_);
    const double im = dist_(engine_);
    return {re, im};
  }

 private:
  PhiloxEngine& engine_;
  std::normal_distribution<double> dist_;
};

Eigen::Vector4cd gaussian_vector4(Gaussian& g) {
  Eigen::Vector4cd v;
  for (int k = 0; k < 4; ++k) v(k) = g.complex();
  return v;
}

Eigen::Vector2cd haar_qubit(Gaussian& g) {
  Eigen::Vector2cd v(g.complex(), g.complex());
  return v / v.norm();
}

Matrix4cd normalized_gram(const Eigen::Matrix<std::complex<double>, 4, Eigen::Dynamic>& x) {
  const Matrix4cd m = x * x.adjoint();
  Matrix4cd rho = m / m.trace().real();
  return (rho + rho.adjoint()) / 2.0;
}

Matrix4cd draw_ginibre(Gaussian& g, int rank) {
  Eigen::Matrix<std::complex<double>, 4, Eigen::Dynamic> x(4, rank);
  for (int c = 0; c < rank; ++c) x.col(c) = gaussian_vector4(g);
  return normalized_gram(x);
}

Matrix2cd haar_unitary(Gaussian& g) {
  Matrix2cd z;
  z << g.complex(), g.complex(), g.complex(), g.complex();
  Eigen::Vector2cd q0 = z.col(0) / z.col(0).norm();
  Eigen::Vector2cd q1 = z.col(1) - q0 * q0.dot(z.col(1));
  q1 /= q1.norm();
  Matrix2cd u;
  u.col(0) = q0;
  u.col(1) = q1;
  return u;
}

}  // namespace

PureState haar_pure(std::uint64_t seed, std::uint64_t index) {
  PhiloxEngine engine(seed, Stream::haar_pure, index);
  Gaussian g(engine);
  const Eigen::Vector4cd v = gaussian_vector4(g);
  return PureState(v / v.norm());
}

DensityMatrix ginibre(std::uint64_t seed, std::uint64_t index, int rank) {
  if (rank < 1 || rank > 4) {
    throw std::invalid_argument("ginibre: rank must be in 1..4, got " + std::to_string(rank));
  }
  PhiloxEngine engine(seed, Stream::ginibre, index);
  Gaussian g(engine);
  return DensityMatrix(draw_ginibre(g, rank));
}

DensityMatrix fixed_purity(std::uint64_t seed, std::uint64_t index, double target, double window) {
  if (!(target >= 0.25 && target <= 1.0)) {
    throw std::invalid_argument("fixed_purity: target must lie in [1/4, 1]");
  }
  if (!(window > 0.0)) {
    throw std::invalid_argument("fixed_purity: window must be positive");
  }
  const int rank = target + window >= 1.0 ? 1 : 4;
  PhiloxEngine engine(seed, Stream::fixed_purity, index);
  Gaussian g(engine);
  for (long long attempt = 0; attempt < max_rejection_attempts; ++attempt) {
    const Matrix4cd m = draw_ginibre(g, rank);
    const double p = (m * m).trace().real();
    if (std::abs(p - target) <= window) return DensityMatrix(m);
  }
  throw SamplingExhausted("fixed_purity: no state with purity in [" +
                          std::to_string(target - window) + ", " + std::to_string(target + window) +
                          "] after " + std::to_string(max_rejection_attempts) + " attempts");
}

DensityMatrix separable_mixture(std::uint64_t seed, std::uint64_t index, int terms) {
  if (terms < 1) {
    throw std::invalid_argument("separable_mixture: terms must be >= 1");
  }
  PhiloxEngine engine(seed, Stream::separable_mixture, index);
  Gaussian g(engine);
  std::exponential_distribution<double> expo(1.0);

  std::vector<double> weights(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (auto& w : weights) total += (w = expo(engine));

  Matrix4cd rho = Matrix4cd::Zero();
  for (const double w : weights) {
    const Eigen::Vector2cd a = haar_qubit(g);
    const Eigen::Vector2cd b = haar_qubit(g);
    const Matrix2cd pa = a * a.adjoint();
    const Matrix2cd pb = b * b.adjoint();
    rho += (w / total) * tensor(pa, pb);
  }
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(rho / rho.trace().real());
}

LocalUnitary random_local_unitary(std::uint64_t seed, std::uint64_t index) {
  PhiloxEngine engine(seed, Stream::local_unitary, index);
  Gaussian g(engine);
  LocalUnitary u;
  u.a = haar_unitary(g);
  u.b = haar_unitary(g);
  return u;
}

DensityMatrix rho_u_sweep(std::uint64_t seed, std::uint64_t index, std::uint64_t count) {
  const double gamma =
      count > 1 ? 0.5 * static_cast<double>(index) / static_cast<double>(count - 1) : 0.0;
  PhiloxEngine engine(seed, Stream::rho_u_sweep, index);
  const double theta = 2.0 * std::numbers::pi * engine.uniform();
  return rho_u(std::min(gamma, 0.5), theta);
}

namespace {

constexpr std::array<std::pair<EnsembleKind, std::string_view>, 5> kKindNames{{
    {EnsembleKind::haar_pure, "haar_pure"},
    {EnsembleKind::ginibre, "ginibre"},
    {EnsembleKind::fixed_purity, "fixed_purity"},
    {EnsembleKind::separable_mixture, "separable_mixture"},
    {EnsembleKind::rho_u_sweep, "rho_u_sweep"},
}};

}  // namespace

std::string_view ensemble_kind_name(EnsembleKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

EnsembleKind ensemble_kind_from_name(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  throw std::invalid_argument("unknown ensemble kind '" + std::string(name) + "'");
}

void validate(const EnsembleSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("ensemble count must be >= 1");
  if (spec.rank < 1 || spec.rank > 4) throw std::invalid_argument("ensemble rank must be in 1..4");
  if (!(spec.purity_target >= 0.25 && spec.purity_target <= 1.0)) {
    throw std::invalid_argument("ensemble purity target must lie in [1/4, 1]");
  }
  if (!(spec.purity_window > 0.0))
    throw std::invalid_argument("ensemble purity window must be > 0");
  if (spec.mixture_terms < 1) throw std::invalid_argument("ensemble mixture terms must be >= 1");
}

DensityMatrix sample(const EnsembleSpec& spec, std::uint64_t index) {
  switch (spec.kind) {
    case EnsembleKind::haar_pure:
      return from_pure(haar_pure(spec.seed, index));
    case EnsembleKind::ginibre:
      return ginibre(spec.seed, index, spec.rank);
    case EnsembleKind::fixed_purity:
      return fixed_purity(spec.seed, index, spec.purity_target, spec.purity_window);
    case EnsembleKind::separable_mixture:
      return separable_mixture(spec.seed, index, spec.mixture_terms);
    case EnsembleKind::rho_u_sweep:
      return rho_u_sweep(spec.seed, index, spec.count);
  }
  throw std::invalid_argument("unknown ensemble kind");
}

std::vector<DensityMatrix> generate(const EnsembleSpec& spec, unsigned workers) {
  validate(spec);
  return parallel_map(spec.count, workers, [&](std::size_t i) { return sample(spec, i); });
}

}  // namespace covent
