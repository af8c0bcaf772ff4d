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

#include <cmath>

#include "covent/concurrence.hpp"
#include "covent/ensembles.hpp"
#include "covent/gmeasure.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace covent {
namespace {

const double kH = 1.0 / std::sqrt(2.0);

PureState pure(double a00, double a01, double a10, double a11) {
  return PureState(Eigen::Vector4cd(a00, a01, a10, a11));
}

// The square-root route: eigenvalues of sqrt(rho) rho~ sqrt(rho).
double concurrence_sqrt_route(const DensityMatrix& rho) {
  const Matrix4cd root = sqrt_psd(rho.matrix());
  Matrix4cd r = root * spin_flip(rho.matrix()) * root;
  r = (r + r.adjoint()) / 2.0;
  const Eigen::Vector4d l = eig_hermitian(r).values.cwiseMax(0.0).cwiseSqrt();
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

TEST(PureInvariants, ReferenceStates) {
  const auto s = pure_invariants(pure(0, kH, -kH, 0));
  EXPECT_NEAR(s.i_beta, 0.25, 1e-15);
  EXPECT_NEAR(4 * s.i_beta, 1.0, 1e-15);

  EXPECT_EQ(pure_invariants(pure(1, 0, 0, 0)).i_beta, 0.0);

  const auto phi = pure_invariants(pure(kH, 0, 0, kH));
  EXPECT_NEAR(phi.i1, 1.0, 1e-15);
  EXPECT_NEAR(phi.i2, 0.5, 1e-15);
  EXPECT_NEAR(phi.i_beta, 0.25, 1e-15);
}

TEST(PureInvariants, RejectUnnormalizedThroughPureState) {
  EXPECT_THROW(pure(1, 1, 0, 0), InvalidState);
}

TEST(PureInvariants, InternalRelationsOnHaarStates) {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto p = haar_pure(2024, n);
    const auto inv = pure_invariants(p);
    ASSERT_NEAR(inv.i_alpha, inv.i1, 1e-12);
    ASSERT_NEAR(inv.i_alpha, 1.0, 1e-10);
    ASSERT_NEAR(inv.i_beta, (inv.i1 * inv.i1 - inv.i2) / 2.0, 1e-12);
    const double c = concurrence_pure(p);
    ASSERT_NEAR(4 * inv.i_beta, c * c, 1e-10);
  }
}

TEST(GPureFromInvariants, ReferenceValues) {
  PureInvariants inv;
  inv.i_alpha = 1.0;
  inv.i_beta = 0.25;
  EXPECT_NEAR(g_pure_from_invariants(inv), 3.0, 1e-15);
  inv.i_beta = 0.0;
  EXPECT_NEAR(g_pure_from_invariants(inv), 0.0, 1e-15);
}

TEST(GPureFromInvariants, MatchesCovarianceFormAndSimplifiedPolynomial) {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto p = haar_pure(99, n);
    const auto inv = pure_invariants(p);
    const double g = g_pure_from_invariants(inv);
    ASSERT_NEAR(g, 8 * inv.i_beta + 16 * inv.i_beta * inv.i_beta, 1e-12);
    ASSERT_NEAR(g, g_covariance(from_pure(p)), 1e-10);
  }
}

TEST(ConcurrencePure, ReferenceValues) {
  EXPECT_NEAR(concurrence_pure(pure(0, kH, -kH, 0)), 1.0, 1e-15);
  EXPECT_EQ(concurrence_pure(pure(1, 0, 0, 0)), 0.0);
  EXPECT_NEAR(concurrence_pure(pure(std::sqrt(0.8), 0, 0, std::sqrt(0.2))), 0.8, 1e-15);
}

TEST(ConcurrenceMixed, ReferenceFamilies) {
  for (double gamma : {0.0, 0.1, 0.25, 0.5}) {
    for (double theta : {0.0, 1.0, 2.5}) {
      EXPECT_NEAR(concurrence_mixed(rho_u(gamma, theta)), 2 * gamma, 1e-12);
    }
  }
  EXPECT_EQ(concurrence_mixed(canonical(CanonicalState::maximally_mixed)), 0.0);

  const Matrix4cd singlet = canonical(CanonicalState::singlet).matrix();
  for (double p : {0.2, 1.0 / 3.0, 0.6, 1.0}) {
    const DensityMatrix werner(p * singlet + (1 - p) * Matrix4cd::Identity() / 4.0);
    const double expected = std::max(0.0, (3 * p - 1) / 2);
    EXPECT_NEAR(concurrence_mixed(werner), expected, 1e-12) << p;
    EXPECT_NEAR(oracle::wootters(werner.matrix()), expected, 1e-9) << p;
  }
}

TEST(ConcurrenceMixed, AgreesWithIndependentRoutes) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    const auto rho = ginibre(4, n, 1 + static_cast<int>(n % 4));
    const double c = concurrence_mixed(rho);
    // The general eigensolver and the square-root route both lose accuracy
    // near rank deficiency, hence the looser tolerance.
    EXPECT_NEAR(c, oracle::wootters(rho.matrix()), 1e-6);
    EXPECT_NEAR(c, concurrence_sqrt_route(rho), 1e-6);
  }
}

TEST(ConcurrenceMixed, MatchesPureFormulaOnHaarStates) {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto p = haar_pure(17, n);
    ASSERT_NEAR(concurrence_mixed(from_pure(p)), concurrence_pure(p), 1e-9);
  }
}

TEST(ConcurrenceMixed, LocalUnitaryInvariance) {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto rho = ginibre(61, n, 1 + static_cast<int>(n % 4));
    const auto u = random_local_unitary(61, n);
    ASSERT_NEAR(concurrence_mixed(apply_local_unitary(rho, u.a, u.b)), concurrence_mixed(rho),
                1e-9);
  }
}

TEST(MasterRelation, PureStatesSitOnTheFloor) {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto p = haar_pure(3, n);
    const double c = concurrence_pure(p);
    const double g = g_covariance(from_pure(p));
    ASSERT_NEAR(g, c * c * (2 + c * c), 1e-9);
    ASSERT_EQ(g > 1e-9, c > 1e-9) << "g=" << g << " c=" << c;
  }
  EXPECT_EQ(g_covariance(from_pure(pure(1, 0, 0, 0))), 0.0);
}

}  // namespace
}  // namespace covent
