#pragma once

#include "qqo/pauli.hpp"

namespace qqo {

/// Quadratic operator on R³ in nine-vector form. Component k of V(f) is
///
///   a_k f1² + b_k f2² + c_k f3² + A_k f1f2 + B_k f2f3 + Γ_k f1f3
///     + d_k f1 + e_k f2 + g_k f3.
///
/// Cross terms carry the full coefficient (A_k f1f2, not split halves).
struct QuadraticMapCoeffs {
  Vector3 a = Vector3::Zero();
  Vector3 b = Vector3::Zero();
  Vector3 c = Vector3::Zero();
  Vector3 A = Vector3::Zero();
  Vector3 B = Vector3::Zero();
  Vector3 Gamma = Vector3::Zero();
  Vector3 d = Vector3::Zero();
  Vector3 e = Vector3::Zero();
  Vector3 g = Vector3::Zero();

  bool all_finite() const;

  /// V(f) = L f with zero quadratic part; d, e, g are the columns of L.
  static QuadraticMapCoeffs linear(const Matrix3& l);
};

/// Polynomial evaluation, no clamping to the ball.
Vector3 eval(const QuadraticMapCoeffs& v, const Vector3& f);

/// Jacobian ∂V_k/∂f_j at f.
Matrix3 jacobian(const QuadraticMapCoeffs& v, const Vector3& f);

/// Degree-2 terms only (d = e = g = 0).
QuadraticMapCoeffs homogeneous_part(const QuadraticMapCoeffs& v);
/// Matrix L with columns (d, e, g), so the degree-1 terms equal L f.
Matrix3 linear_part(const QuadraticMapCoeffs& v);

bool is_haar_form(const QuadraticMapCoeffs& v, double tol = kTolAlg);

}  // namespace qqo
