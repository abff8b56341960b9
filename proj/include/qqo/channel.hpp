#pragma once

#include <array>
#include <utility>

#include "qqo/pauli.hpp"
#include "qqo/qmap.hpp"

namespace qqo {

/// Real coefficients of a unital *-preserving Δ: M2(C) → M2(C)⊗M2(C),
///
///   Δ(σ_i) = b_i 1⊗1 + Σ_j B1(j,i) 1⊗σ_j + Σ_j B2(j,i) σ_j⊗1
///            + Σ_{m,l} T(m,l,i) σ_m⊗σ_l,      Δ(1) = 1⊗1.
///
/// Indices are zero-based here: T(0,1,0) is the weight of σ1⊗σ2 in Δ(σ1).
struct DeltaCoefficients {
  Vector3 b = Vector3::Zero();
  Matrix3 B1 = Matrix3::Zero();
  Matrix3 B2 = Matrix3::Zero();
  /// slices[i](m, l) = T(m, l, i).
  std::array<Matrix3, 3> slices{Matrix3::Zero(), Matrix3::Zero(), Matrix3::Zero()};

  double& T(int m, int l, int i) { return slices[i](m, l); }
  double T(int m, int l, int i) const { return slices[i](m, l); }

  /// Σ_i T(·,·,i) w_i, the σ⊗σ weight matrix of Δ(w·σ).
  template <typename Scalar>
  Eigen::Matrix<Scalar, 3, 3> tensor_contract(const Eigen::Matrix<Scalar, 3, 1>& w) const {
    Eigen::Matrix<Scalar, 3, 3> k = Eigen::Matrix<Scalar, 3, 3>::Zero();
    for (int i = 0; i < 3; ++i) k += slices[i].cast<Scalar>() * w(i);
    return k;
  }

  bool all_finite() const;

  /// Zero tensor, B1 = B2 = B.
  static DeltaCoefficients linear(const Matrix3& b_matrix);
};

/// Entries of the Haar-case closed-form 4×4 matrix for input w.
struct HaarEntries {
  double L = 0, M = 0, N = 0, O = 0, P = 0, R = 0;
};

HaarEntries haar_entries(const QuadraticMapCoeffs& v, const Vector3& w);

/// Δ(x) as a 4×4 matrix built from Kronecker products of Pauli matrices.
CMatrix4 apply(const DeltaCoefficients& d, const PauliElement& x);

/// The Haar-case closed form, built entry by entry from L, M, N, O, P, R.
/// Requires B1 = B2 = 0 (Error NotHaarForm) and self-adjoint x
/// (Error NotSelfAdjoint).
CMatrix4 apply_haar_closed_form(const DeltaCoefficients& d, const PauliElement& x);

bool is_trace_preserving(const DeltaCoefficients& d, double tol = kTolAlg);

/// U∘Δ = Δ, checked on the images of σ1, σ2, σ3.
bool is_symmetric(const DeltaCoefficients& d, double tol = kTolAlg);
/// Same predicate read off the coefficients: B1 = B2 and T(m,l,i) = T(l,m,i).
bool is_symmetric_coefficients(const DeltaCoefficients& d, double tol = kTolAlg);

/// τ is a Haar state: B1 = B2 = 0 and both partial traces of every Δ(σ_i)
/// vanish. Both routes must agree for a true result.
bool has_haar_trace(const DeltaCoefficients& d, double tol = kTolAlg);

/// Bloch vector of Δ*(φ⊗ψ), φ on the first leg. Error NotSymmetric otherwise.
Vector3 dual_pair(const DeltaCoefficients& d, const BlochState& phi, const BlochState& psi);

/// Δ = λΔ₁ + (1−λ)Δ₂ with Δ₁ carrying T/λ and Δ₂ carrying
/// (b, B1, B2)/(1−λ); both parts stay unital. Error InvalidLambda unless 0 < λ < 1.
std::pair<DeltaCoefficients, DeltaCoefficients> split(const DeltaCoefficients& d, double lambda);

/// (Δ⊗id)∘Δ = (id⊗Δ)∘Δ on the basis, compared as 8×8 matrices.
bool check_coassociativity(const DeltaCoefficients& d, double tol = kTolAlg);

/// V(f) = Δ*(φ_f⊗φ_f) in nine-vector form. Error NotTracePreserving when b ≠ 0.
QuadraticMapCoeffs induced_qmap(const DeltaCoefficients& d);

/// Coefficient read-off of induced_qmap without the trace-preserving check.
QuadraticMapCoeffs quadratic_readoff(const DeltaCoefficients& d);

}  // namespace qqo
