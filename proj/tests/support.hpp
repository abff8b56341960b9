#pragma once

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "qqo/channel.hpp"
#include "qqo/pauli.hpp"
#include "qqo/qmap.hpp"

namespace qqo::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng()); }

inline Vector3 random_vector(double scale = 1.0) {
  return scale * Vector3(uniform(), uniform(), uniform());
}

inline Vector3 random_unit() {
  Vector3 g(normal(), normal(), normal());
  return g.normalized();
}

inline Vector3 random_in_ball(double max_radius = 1.0) {
  return random_unit() * max_radius * std::cbrt(uniform(0.0, 1.0));
}

inline Matrix3 random_matrix(double scale = 1.0) {
  Matrix3 m;
  for (int r = 0; r < 3; ++r) m.row(r) = random_vector(scale).transpose();
  return m;
}

inline Matrix3 random_rotation() {
  Eigen::HouseholderQR<Matrix3> qr(random_matrix());
  Matrix3 q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

inline CMatrix2 random_cmatrix2() {
  CMatrix2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = Complex(uniform(), uniform());
  return m;
}

inline PauliElement random_complex_element() {
  PauliElement p;
  p.w0 = Complex(uniform(), uniform());
  for (int k = 0; k < 3; ++k) p.w(k) = Complex(uniform(), uniform());
  return p;
}

inline PauliElement random_self_adjoint_element() {
  return PauliElement::real(uniform(), random_vector());
}

inline DeltaCoefficients random_delta(bool trace_preserving = true) {
  DeltaCoefficients d;
  if (!trace_preserving) d.b = random_vector();
  d.B1 = random_matrix();
  d.B2 = random_matrix();
  for (auto& s : d.slices) s = random_matrix();
  return d;
}

inline DeltaCoefficients random_symmetric_delta() {
  DeltaCoefficients d;
  d.B1 = random_matrix();
  d.B2 = d.B1;
  for (auto& s : d.slices) {
    s = random_matrix();
    s = (0.5 * (s + s.transpose())).eval();
  }
  return d;
}

/// Symmetric tensor, no linear blocks.
inline DeltaCoefficients random_haar_delta() {
  DeltaCoefficients d = random_symmetric_delta();
  d.B1.setZero();
  d.B2.setZero();
  return d;
}

/// Haar-form symmetric operator whose map is R·V(Qᵀ f) for a given Haar Δ.
/// The σ⊗σ tensor transforms as T'(·,·,i) = Σ_k R(i,k) Q T(·,·,k) Qᵀ.
inline DeltaCoefficients rotate_delta(const DeltaCoefficients& d, const Matrix3& r,
                                      const Matrix3& q) {
  DeltaCoefficients out;
  for (int i = 0; i < 3; ++i) {
    Matrix3 s = Matrix3::Zero();
    for (int k = 0; k < 3; ++k) s += r(i, k) * d.slices[k];
    out.slices[i] = q * s * q.transpose();
  }
  out.B1 = q * d.B1 * r.transpose();
  out.B2 = q * d.B2 * r.transpose();
  return out;
}

/// V(f)_k = Tr((ρ_f⊗ρ_f) Δ(σ_k)), computed from 4×4 matrices only.
inline Vector3 induced_map_by_trace(const DeltaCoefficients& d, const Vector3& f) {
  const CMatrix2 rho = 0.5 * (sigma(0) + f(0) * sigma(1) + f(1) * sigma(2) + f(2) * sigma(3));
  const CMatrix4 rho2 = kron(rho, rho);
  Vector3 out;
  for (int k = 0; k < 3; ++k) out(k) = (rho2 * apply(d, PauliElement::basis(k + 1))).trace().real();
  return out;
}

/// Reference spectrum from Eigen's self-adjoint solver.
inline Eigen::Vector4d reference_eigs(const CMatrix4& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix4> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double max_abs_diff(const Eigen::Vector4d& x, const Eigen::Vector4d& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

inline Eigen::Vector4d sorted(Eigen::Vector4d v) {
  std::sort(v.data(), v.data() + 4);
  return v;
}

}  // namespace qqo::test
