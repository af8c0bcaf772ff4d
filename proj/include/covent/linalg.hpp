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
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

/// Small dense complex linear algebra for one and two qubits.
///
/// Index convention: subsystem A is always the slow (leftmost) tensor
/// factor, so the two-qubit basis index is 2*a + b for local indices a, b.
namespace covent {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Matrix4c = Eigen::Matrix<std::complex<Scalar>, 4, 4>;

using Matrix2cd = Matrix2c<double>;
using Matrix4cd = Matrix4c<double>;

enum class Subsystem { A, B };

namespace detail {

template <typename Derived>
void require_shape(const Eigen::MatrixBase<Derived>& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix, got " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
  }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  }
}

}  // namespace detail

/// Pauli matrix sigma_k for k in 0..3, with sigma_0 the identity.
template <typename Scalar = double>
Matrix2c<Scalar> pauli(int k) {
  using C = std::complex<Scalar>;
  const C i(0, 1);
  Matrix2c<Scalar> m;
  switch (k) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -i, i, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::out_of_range("pauli index must be in 0..3, got " + std::to_string(k));
  }
  return m;
}

/// Largest entrywise deviation |m - m^dagger|.
template <typename Derived>
typename Derived::RealScalar hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m, "hermiticity_error");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Largest entrywise deviation |u u^dagger - 1|.
template <typename Derived>
typename Derived::RealScalar unitarity_error(const Eigen::MatrixBase<Derived>& u) {
  detail::require_square(u, "unitarity_error");
  using Plain = typename Derived::PlainObject;
  return (u * u.adjoint() - Plain::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

/// Kronecker product a (x) b of two single-qubit operators; element
/// (2i+k, 2j+l) equals a(i,j) * b(k,l).
template <typename DerivedA, typename DerivedB>
Matrix4c<typename DerivedA::RealScalar> tensor(const Eigen::MatrixBase<DerivedA>& a,
                                               const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_shape(a, 2, "tensor");
  detail::require_shape(b, 2, "tensor");
  Matrix4c<typename DerivedA::RealScalar> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

/// Reduced operator on the kept subsystem.
template <typename Derived>
Matrix2c<typename Derived::RealScalar> partial_trace(const Eigen::MatrixBase<Derived>& m,
                                                     Subsystem keep) {
  detail::require_shape(m, 4, "partial_trace");
  Matrix2c<typename Derived::RealScalar> out = Matrix2c<typename Derived::RealScalar>::Zero();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int t = 0; t < 2; ++t) {
        out(r, c) += keep == Subsystem::A ? m(2 * r + t, 2 * c + t) : m(2 * t + r, 2 * t + c);
      }
    }
  }
  return out;
}

/// Transpose on one subsystem's indices only. An involution.
template <typename Derived>
Matrix4c<typename Derived::RealScalar> partial_transpose(const Eigen::MatrixBase<Derived>& m,
                                                         Subsystem sub) {
  detail::require_shape(m, 4, "partial_transpose");
  Matrix4c<typename Derived::RealScalar> out;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      for (int j = 0; j < 2; ++j) {
        for (int l = 0; l < 2; ++l) {
          if (sub == Subsystem::B) {
            out(2 * i + l, 2 * j + k) = m(2 * i + k, 2 * j + l);
          } else {
            out(2 * j + k, 2 * i + l) = m(2 * i + k, 2 * j + l);
          }
        }
      }
    }
  }
  return out;
}

template <typename Scalar, int N>
struct HermitianEigen {
  /// Sorted descending.
  Eigen::Matrix<Scalar, N, 1> values;
  /// Column k is the eigenvector of values[k].
  Eigen::Matrix<std::complex<Scalar>, N, N> vectors;
};

struct JacobiOptions {
  double hermitian_tolerance = 1e-10;
  double off_diagonal_tolerance = 1e-14;
  int max_sweeps = 50;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws std::invalid_argument for non-Hermitian input.
///
/// Each rotation first removes the phase of the pivot a_pq with a diagonal
/// unitary and then applies the real symmetric Jacobi rotation, so the
/// combined update is U = P R with P = diag(..., e^{-i phi} at q, ...).
template <typename Derived>
HermitianEigen<typename Derived::RealScalar, Derived::RowsAtCompileTime> eig_hermitian(
    const Eigen::MatrixBase<Derived>& m, const JacobiOptions& opts = {}) {
  using Real = typename Derived::RealScalar;
  using Complex = std::complex<Real>;
  using Plain = Eigen::Matrix<Complex, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;
  detail::require_square(m, "eig_hermitian");
  const Real herm_err = hermiticity_error(m);
  if (!(herm_err <= Real(opts.hermitian_tolerance))) {
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian (max |m - m^dagger| = " +
                                std::to_string(static_cast<double>(herm_err)) + ")");
  }
  const Eigen::Index n = m.rows();
  Plain a = (m + m.adjoint()) / Real(2);
  Plain v = Plain::Identity(n, n);

  const Real scale = std::max(Real(1), a.norm());
  auto off_norm = [&]() {
    Real s = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        if (p != q) s += std::norm(a(p, q));
      }
    }
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    if (off_norm() < Real(opts.off_diagonal_tolerance) * scale) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real r = std::abs(a(p, q));
        if (r == Real(0)) continue;
        const Complex phase = a(p, q) / r;  // e^{i phi}
        const Real theta = (a(q, q).real() - a(p, p).real()) / (Real(2) * r);
        Real t = Real(1) / (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        if (theta < 0) t = -t;
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;

        // A <- A U, columns p and q.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * akp + c * std::conj(phase) * akq;
        }
        // A <- U^dagger A, rows p and q.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = Complex(0);
        a(q, p) = Complex(0);
        a(p, p) = Complex(a(p, p).real(), 0);
        a(q, q) = Complex(a(q, q).real(), 0);
        // V <- V U.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * vkp + c * std::conj(phase) * vkq;
        }
      }
    }
  }
  if (!converged && off_norm() >= Real(opts.off_diagonal_tolerance) * scale) {
    throw std::runtime_error("eig_hermitian: Jacobi iteration did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() > a(y, y).real(); });

  HermitianEigen<Real, Derived::RowsAtCompileTime> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

/// Eigenvalues in [-psd_tolerance, 0) are clamped to zero before rooting.
inline constexpr double psd_tolerance = 1e-10;

/// Principal square root of a Hermitian positive semidefinite matrix.
template <typename Derived>
Eigen::Matrix<std::complex<typename Derived::RealScalar>, Derived::RowsAtCompileTime,
              Derived::ColsAtCompileTime>
sqrt_psd(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  auto eig = eig_hermitian(m);
  const Real smallest = eig.values.minCoeff();
  if (smallest < -Real(psd_tolerance)) {
    throw std::invalid_argument("sqrt_psd: matrix has negative eigenvalue " +
                                std::to_string(static_cast<double>(smallest)));
  }
  const auto roots = eig.values.cwiseMax(Real(0)).cwiseSqrt();
  return eig.vectors * roots.template cast<std::complex<Real>>().asDiagonal() *
         eig.vectors.adjoint();
}

}  // namespace covent
