#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qqo/tolerances.hpp"

/// Pauli-basis algebra on M2(C) and M2(C)⊗M2(C), and the Bloch picture of
/// qubit states.
///
/// Basis order is (1, σ1, σ2, σ3). Tensor products are laid out
/// lexicographically, σ_m⊗σ_l with m the outer (row-block) index.
namespace qqo {

using Complex = std::complex<double>;
using CMatrix2 = Eigen::Matrix2cd;
using CMatrix4 = Eigen::Matrix4cd;
using CMatrix8 = Eigen::Matrix<Complex, 8, 8>;
using Vector3 = Eigen::Vector3d;
using CVector3 = Eigen::Vector3cd;
using Matrix3 = Eigen::Matrix3d;

/// x = w0·1 + w·σ.
struct PauliElement {
  Complex w0{0.0, 0.0};
  CVector3 w = CVector3::Zero();

  static PauliElement real(double w0, const Vector3& w) {
    return {Complex(w0, 0.0), w.cast<Complex>()};
  }
  static PauliElement identity() { return real(1.0, Vector3::Zero()); }
  /// The k-th basis element; k = 0 is the identity.
  static PauliElement basis(int k);

  PauliElement adjoint() const { return {std::conj(w0), w.conjugate()}; }
  double imaginary_residue() const;
  bool is_self_adjoint(double tol = kTolAlg) const { return imaginary_residue() <= tol; }
  Vector3 real_w() const { return w.real(); }
};

/// A qubit state as a Bloch vector f, ‖f‖ ≤ 1.
class BlochState {
public:
  /// Throws Error(InvalidArgument) when ‖f‖ > 1 + tol_state or f is not finite.
  explicit BlochState(const Vector3& f);

  static BlochState maximally_mixed() { return BlochState(Vector3::Zero()); }

  const Vector3& f() const { return f_; }
  double norm() const { return f_.norm(); }
  bool is_pure() const;
  /// ρ = (1 + f·σ)/2.
  CMatrix2 density_matrix() const;

private:
  Vector3 f_;
};

/// σ_k for k = 0..3, with σ_0 the identity.
const CMatrix2& sigma(int k);

PauliElement decompose(const CMatrix2& m);
CMatrix2 recompose(const PauliElement& p);

/// x ≥ 0 iff ‖w‖ ≤ w0. Throws Error(NotSelfAdjoint) for non-real coefficients.
bool is_positive_element(const PauliElement& p, double tol = kTolAlg);

/// φ(w0·1 + w·σ) = w0 + ⟨w, f⟩.
Complex state_eval(const BlochState& s, const PauliElement& p);

/// Standard Kronecker product, block (i,j) = a(i,j)·b.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  constexpr int ra = DerivedA::RowsAtCompileTime, rb = DerivedB::RowsAtCompileTime;
  constexpr int ca = DerivedA::ColsAtCompileTime, cb = DerivedB::ColsAtCompileTime;
  constexpr int kRows = (ra == Eigen::Dynamic || rb == Eigen::Dynamic) ? Eigen::Dynamic : ra * rb;
  constexpr int kCols = (ca == Eigen::Dynamic || cb == Eigen::Dynamic) ? Eigen::Dynamic : ca * cb;
  Eigen::Matrix<Scalar, kRows, kCols> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// σ_m⊗σ_l, indices 0..3.
const CMatrix4& pauli_tensor(int m, int l);

/// U m U with U the tensor-swap permutation, so that
/// swap_conjugate(a⊗b) = b⊗a.
CMatrix4 swap_conjugate(const CMatrix4& m);

/// max |h(i,j) − conj(h(j,i))|.
template <typename Derived>
double hermitian_residual(const Eigen::MatrixBase<Derived>& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& h, double tol = kTolAlg) {
  return h.rows() == h.cols() && hermitian_residual(h) <= tol;
}

/// Coefficients c(α,β) of m = Σ c(α,β) σ_α⊗σ_β, α,β ∈ 0..3.
CMatrix4 tensor_coefficients(const CMatrix4& m);

/// Normalized trace τ(x) = Tr(x)/2 on M2, and τ⊗τ on M2⊗M2.
Complex normalized_trace(const CMatrix2& m);
Complex normalized_trace(const CMatrix4& m);

/// (τ⊗id)(m): normalized trace over the first leg.
CMatrix2 trace_first_leg(const CMatrix4& m);
/// (id⊗τ)(m): normalized trace over the second leg.
CMatrix2 trace_second_leg(const CMatrix4& m);

}  // namespace qqo
