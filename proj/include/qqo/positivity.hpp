#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qqo/channel.hpp"
#include "qqo/qmap.hpp"

namespace qqo {

using Vector4 = Eigen::Vector4d;

struct NegativityWitness {
  /// Input x = 1 + w·σ with ‖w‖ ≤ 1.
  Vector3 w = Vector3::Zero();
  /// Smallest eigenvalue of Δ(x); below −tol_eig.
  double min_eigenvalue = 0.0;
};

struct PositivityVerdict {
  bool verdict = true;
  double min_eigenvalue_seen = 0.0;
  std::optional<NegativityWitness> witness;
  /// Number of inputs evaluated before the verdict was reached.
  std::uint64_t evaluations = 0;
};

/// Ascending eigenvalues via cyclic Jacobi. Error NotHermitian.
Vector4 eigvals_hermitian4(const CMatrix4& h);

/// w0·1⊗1 + w·σ⊗1 + 1⊗r·σ.
CMatrix4 simple_form_matrix(double w0, const Vector3& w, const Vector3& r);

/// (w0 − ‖r‖ + ‖w‖, w0 − ‖r‖ − ‖w‖, w0 + ‖r‖ + ‖w‖, w0 + ‖r‖ − ‖w‖),
/// the spectrum of simple_form_matrix.
Vector4 simple_form_eigs(double w0, const Vector3& w, const Vector3& r);

/// Largest singular value, as the square root of the top eigenvalue of BᵀB.
double operator_norm3(const Matrix3& b_matrix);

/// Unit vector w maximizing ‖Bw‖, sign fixed so its largest-magnitude entry
/// is positive.
Vector3 top_right_singular_vector(const Matrix3& b_matrix);

/// Δ_B (B1 = B2 = B, T = 0) is positive iff ‖B‖ ≤ 1/2.
PositivityVerdict check_linear_positivity(const Matrix3& b_matrix, double tol = kTolEig);

/// Minimum eigenvalue of Δ(1 + w·σ) over the deterministic probes
/// ±a, ±b, ±c, ±e1, ±e2, ±e3 followed by `samples` sphere points and
/// `samples` ball points. Stops at the first eigenvalue below −tol.
PositivityVerdict check_positivity_sampled(const DeltaCoefficients& d, std::uint64_t samples,
                                           std::uint64_t seed, double tol = kTolEig);

/// Same evaluation restricted to the deterministic probe set.
PositivityVerdict check_positivity_probes(const DeltaCoefficients& d, double tol = kTolEig);

struct ProbeEigenvalues {
  std::string label;
  Vector3 probe = Vector3::Zero();
  /// (λ1, λ2, λ3, λ4) in closed-form order, not sorted.
  Vector4 eigenvalues = Vector4::Zero();
};

/// Closed-form spectra of Δ(1 + a·σ), Δ(1 + b·σ), Δ(1 + c·σ) for a Haar-form
/// map. For the a probe:
///
///   λ1 = −⟨c,a⟩ − ⟨b,a⟩,  λ2 = ⟨c,a⟩ + ⟨b,a⟩,
///   λ3,4 = 2 ± sqrt(⟨b,a⟩² − 2⟨c,a⟩⟨b,a⟩ + ⟨c,a⟩² + ⟨B,a⟩²),
///
/// and cyclically for b (cross vector Γ) and c (cross vector A). Valid when
/// the map is sphere-preserving, which forces ‖a‖ = ‖b‖ = ‖c‖ = 1 and
/// makes the other cross terms vanish. Error NotHaarForm.
std::array<ProbeEigenvalues, 3> theorem_witness_eigs(const QuadraticMapCoeffs& v);

}  // namespace qqo
