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

#include <random>

#include "covent/linalg.hpp"
#include "covent/states.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace covent {
namespace {

std::mt19937_64 rng(20261016);

Matrix2cd random2() {
  std::normal_distribution<double> n;
  Matrix2cd m;
  for (int k = 0; k < 4; ++k) m(k) = {n(rng), n(rng)};
  return m;
}

Matrix4cd random_hermitian4() {
  std::normal_distribution<double> n;
  Matrix4cd m;
  for (int k = 0; k < 16; ++k) m(k) = {n(rng), n(rng)};
  return (m + m.adjoint()) / 2.0;
}

Matrix4cd random_density4(int rank) {
  std::normal_distribution<double> n;
  Eigen::MatrixXcd x(4, rank);
  for (int k = 0; k < 4 * rank; ++k) x(k) = {n(rng), n(rng)};
  Matrix4cd m = x * x.adjoint();
  return m / m.trace().real();
}

Matrix4cd singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v(0, h, -h, 0);
  return v * v.adjoint();
}

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_TRUE(tensor(pauli(0), pauli(0)).isApprox(Matrix4cd::Identity(), 0));
}

TEST(Tensor, HandExpandedCases) {
  Eigen::Vector4cd diag(1, -1, -1, 1);
  EXPECT_EQ(tensor(pauli(3), pauli(3)), Matrix4cd(diag.asDiagonal()));

  Matrix4cd expected = Matrix4cd::Zero();
  expected.block<2, 2>(0, 2) = Matrix2cd::Identity();
  expected.block<2, 2>(2, 0) = Matrix2cd::Identity();
  EXPECT_EQ(tensor(pauli(1), pauli(0)), expected);
}

TEST(Tensor, ASystemIsSlowIndex) {
  // sigma_3 on A flips the sign of |1x>, i.e. basis rows 2 and 3.
  const Matrix4cd z_a = tensor(pauli(3), pauli(0));
  EXPECT_EQ(z_a(0, 0), 1.0);
  EXPECT_EQ(z_a(1, 1), 1.0);
  EXPECT_EQ(z_a(2, 2), -1.0);
  EXPECT_EQ(z_a(3, 3), -1.0);
}

TEST(Tensor, RejectsWrongShape) {
  Eigen::MatrixXcd three = Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_THROW(tensor(three, pauli(0)), std::invalid_argument);
  EXPECT_THROW(tensor(pauli(0), Eigen::MatrixXcd::Identity(2, 3)), std::invalid_argument);
}

TEST(Tensor, MatchesKroneckerOracleAndMixedProduct) {
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix2cd a = random2(), b = random2(), c = random2(), d = random2();
    EXPECT_LE((tensor(a, b) - oracle::kron(a, b)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((tensor(a, b) * tensor(c, d) - tensor(a * c, b * d)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Pauli, TraceOrthogonality) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const std::complex<double> tr = (pauli(i) * pauli(j)).trace();
      EXPECT_EQ(tr, std::complex<double>(i == j ? 2.0 : 0.0, 0.0)) << i << "," << j;
    }
  }
  EXPECT_THROW(pauli(4), std::out_of_range);
  EXPECT_THROW(pauli(-1), std::out_of_range);
}

TEST(PartialTrace, MarginalsOfReferenceStates) {
  EXPECT_LE((partial_trace(singlet(), Subsystem::A) - pauli(0) / 2.0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((partial_trace(singlet(), Subsystem::B) - pauli(0) / 2.0).cwiseAbs().maxCoeff(), 1e-15);

  Matrix4cd p00 = Matrix4cd::Zero();
  p00(0, 0) = 1;
  Matrix2cd ket0 = Matrix2cd::Zero();
  ket0(0, 0) = 1;
  EXPECT_EQ(partial_trace(p00, Subsystem::B), ket0);
  EXPECT_EQ(partial_trace(p00, Subsystem::A), ket0);

  EXPECT_LE((partial_trace(rho_u(0.25, 0.0).matrix(), Subsystem::A) - pauli(0) / 2.0)
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
}

TEST(PartialTrace, ProductOperatorsAndTracePreservation) {
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix2cd a = random2(), b = random2();
    const Matrix4cd ab = tensor(a, b);
    EXPECT_LE((partial_trace(ab, Subsystem::A) - a * b.trace()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((partial_trace(ab, Subsystem::B) - b * a.trace()).cwiseAbs().maxCoeff(), 1e-12);
    const Matrix4cd h = random_hermitian4();
    EXPECT_LE((partial_trace(h, Subsystem::A) - oracle::reduced_a(h)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(std::abs(partial_trace(h, Subsystem::B).trace() - h.trace()), 0.0, 1e-12);
  }
  EXPECT_THROW(partial_trace(Eigen::MatrixXcd::Identity(2, 2), Subsystem::A),
               std::invalid_argument);
}

TEST(PartialTranspose, ProductOperatorAndInvolution) {
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix2cd a = random2(), b = random2();
    EXPECT_EQ(partial_transpose(tensor(a, b), Subsystem::B), tensor(a, Matrix2cd(b.transpose())));
    EXPECT_EQ(partial_transpose(tensor(a, b), Subsystem::A), tensor(Matrix2cd(a.transpose()), b));
    const Matrix4cd h = random_hermitian4();
    EXPECT_EQ(partial_transpose(partial_transpose(h, Subsystem::A), Subsystem::A), h);
    EXPECT_EQ(partial_transpose(partial_transpose(h, Subsystem::B), Subsystem::B), h);
  }
}

TEST(PartialTranspose, SingletHasNegativeHalfEigenvalue) {
  const Matrix4cd pt = partial_transpose(singlet(), Subsystem::B);
  EXPECT_NEAR(oracle::eigvals(pt).minCoeff(), -0.5, 1e-12);
  EXPECT_NEAR(eig_hermitian(pt).values(3), -0.5, 1e-12);
}

TEST(EigHermitian, SmallCases) {
  const auto z = eig_hermitian(pauli(3));
  EXPECT_DOUBLE_EQ(z.values(0), 1.0);
  EXPECT_DOUBLE_EQ(z.values(1), -1.0);

  const auto x = eig_hermitian(pauli(1));
  EXPECT_NEAR(x.values(0), 1.0, 1e-14);
  EXPECT_NEAR(x.values(1), -1.0, 1e-14);

  const auto bell = eig_hermitian(rho_u(0.5, 0.0).matrix());
  EXPECT_NEAR(bell.values(0), 1.0, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(bell.values(k), 0.0, 1e-14);
}

TEST(EigHermitian, RejectsNonHermitian) {
  Matrix2cd m;
  m << 1, 2, 0, 1;
  EXPECT_THROW(eig_hermitian(m), std::invalid_argument);
}

TEST(EigHermitian, AgreesWithOracleAndReconstructs) {
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix4cd h = trial % 2 ? random_hermitian4() : random_density4(1 + trial % 4);
    const auto e = eig_hermitian(h);
    for (int k = 0; k + 1 < 4; ++k) EXPECT_GE(e.values(k), e.values(k + 1));

    const Eigen::VectorXd ref = oracle::eigvals(h);  // ascending
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(e.values(k), ref(3 - k), 1e-12);

    const Matrix4cd recon =
        e.vectors * e.values.cast<std::complex<double>>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE((recon - h).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE(unitarity_error(e.vectors), 1e-10);
    EXPECT_NEAR(e.values.sum(), h.trace().real(), 1e-10);
  }
}

TEST(EigHermitian, DegenerateAndDynamicInputs) {
  const auto id = eig_hermitian(Matrix4cd::Identity().eval());
  for (int k = 0; k < 4; ++k) EXPECT_EQ(id.values(k), 1.0);

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(8, 8);
  h.topRightCorner(4, 4) = random2().replicate(2, 2);
  h.bottomLeftCorner(4, 4) = h.topRightCorner(4, 4).adjoint();
  const auto e = eig_hermitian(h);
  const Eigen::VectorXd ref = oracle::eigvals(h);
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(e.values(k), ref(7 - k), 1e-12);
}

TEST(SqrtPsd, DiagonalAndIdentity) {
  EXPECT_LE((sqrt_psd(Matrix4cd::Identity().eval()) - Matrix4cd::Identity()).cwiseAbs().maxCoeff(),
            1e-15);
  Eigen::Vector4cd d(4, 1, 0, 0);
  Eigen::Vector4cd r(2, 1, 0, 0);
  EXPECT_LE((sqrt_psd(Matrix4cd(d.asDiagonal())) - Matrix4cd(r.asDiagonal())).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(SqrtPsd, SquaresBackOnRandomStates) {
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix4cd rho = random_density4(1 + trial % 4);
    const Matrix4cd root = sqrt_psd(rho);
    EXPECT_LE(hermiticity_error(root), 1e-12);
    EXPECT_GE(oracle::eigvals(root).minCoeff(), -1e-9);
    EXPECT_LE((root * root - rho).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(SqrtPsd, ClampsRoundingButRejectsNegative) {
  Eigen::Vector4cd tiny(1, 0.5, 0, -5e-11);
  EXPECT_NO_THROW(sqrt_psd(Matrix4cd(tiny.asDiagonal())));
  Eigen::Vector4cd neg(1, 0.5, 0, -0.01);
  EXPECT_THROW(sqrt_psd(Matrix4cd(neg.asDiagonal())), std::invalid_argument);
}

}  // namespace
}  // namespace covent
