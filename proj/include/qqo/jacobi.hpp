#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "qqo/error.hpp"
#include "qqo/tolerances.hpp"

namespace qqo {

template <typename MatrixType>
struct JacobiResult {
  using RealScalar = typename Eigen::NumTraits<typename MatrixType::Scalar>::Real;
  /// Ascending.
  Eigen::Matrix<RealScalar, MatrixType::RowsAtCompileTime, 1> values;
  /// Column k is the eigenvector of values(k).
  MatrixType vectors;
  int sweeps = 0;
};

inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 64;

/// Cyclic Jacobi diagonalization of a Hermitian (or real symmetric) matrix.
/// Each rotation first removes the phase of h(p,q), then applies the real
/// two-sided rotation that annihilates it. Stops once the off-diagonal
/// Frobenius mass drops below 1e-14 (relative to ‖h‖_F when that exceeds 1),
/// or after 64 sweeps.
template <typename MatrixType>
JacobiResult<MatrixType> jacobi_eigen(const MatrixType& input, double hermitian_tol = kTolAlg) {
  using Scalar = typename MatrixType::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;

  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::NotHermitian, "matrix is not square");
  }
  if ((input - input.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within tolerance");
  }

  const Eigen::Index n = input.rows();
  MatrixType h = (input + input.adjoint()) / Real(2);
  MatrixType v = MatrixType::Identity(n, n);

  auto off_mass = [&h, n]() {
    Real s = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        if (p != q) s += Eigen::numext::abs2(h(p, q));
      }
    }
    return std::sqrt(s);
  };
  const Real threshold = Real(kJacobiOffDiagonal) * std::max(Real(1), h.norm());

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps && off_mass() >= threshold; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real g = std::abs(h(p, q));
        if (g == Real(0)) continue;
        const Scalar phase = h(p, q) / g;

        const Real app = Eigen::numext::real(h(p, p));
        const Real aqq = Eigen::numext::real(h(q, q));
        const Real theta = (aqq - app) / (Real(2) * g);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;

        // G = diag(1, conj(phase)) · [[c, s], [-s, c]] on the (p, q) plane.
        const Scalar gpp = c;
        const Scalar gpq = s;
        const Scalar gqp = -s * Eigen::numext::conj(phase);
        const Scalar gqq = c * Eigen::numext::conj(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar hkp = h(k, p), hkq = h(k, q);
          h(k, p) = hkp * gpp + hkq * gqp;
          h(k, q) = hkp * gpq + hkq * gqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar hpk = h(p, k), hqk = h(q, k);
          h(p, k) = Eigen::numext::conj(gpp) * hpk + Eigen::numext::conj(gqp) * hqk;
          h(q, k) = Eigen::numext::conj(gpq) * hpk + Eigen::numext::conj(gqq) * hqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        h(p, q) = Scalar(0);
        h(q, p) = Scalar(0);
        h(p, p) = Eigen::numext::real(h(p, p));
        h(q, q) = Eigen::numext::real(h(q, q));
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&h](Eigen::Index x, Eigen::Index y) {
    return Eigen::numext::real(h(x, x)) < Eigen::numext::real(h(y, y));
  });

  JacobiResult<MatrixType> result;
  result.values.resize(n);
  result.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    result.values(k) = Eigen::numext::real(h(order[k], order[k]));
    result.vectors.col(k) = v.col(order[k]);
  }
  result.sweeps = sweep;
  return result;
}

}  // namespace qqo
