#include "qqo/channel.hpp"

#include "qqo/error.hpp"

namespace qqo {

bool DeltaCoefficients::all_finite() const {
  return b.allFinite() && B1.allFinite() && B2.allFinite() && slices[0].allFinite() &&
         slices[1].allFinite() && slices[2].allFinite();
}

DeltaCoefficients DeltaCoefficients::linear(const Matrix3& b_matrix) {
  DeltaCoefficients d;
  d.B1 = b_matrix;
  d.B2 = b_matrix;
  return d;
}

HaarEntries haar_entries(const QuadraticMapCoeffs& v, const Vector3& w) {
  HaarEntries h;
  h.L = v.a.dot(w);
  h.M = 0.5 * v.A.dot(w);
  h.N = 0.5 * v.Gamma.dot(w);
  h.O = v.b.dot(w);
  h.P = 0.5 * v.B.dot(w);
  h.R = v.c.dot(w);
  return h;
}

CMatrix4 apply(const DeltaCoefficients& d, const PauliElement& x) {
  // ⟨b_ml, w̄⟩ with the inner product conjugate-linear in its second slot is
  // Σ_i T(m,l,i) w_i, so Δ stays complex-linear.
  const Complex constant = x.w0 + d.b.cast<Complex>().cwiseProduct(x.w).sum();
  const CVector3 right = d.B1.cast<Complex>() * x.w;
  const CVector3 left = d.B2.cast<Complex>() * x.w;
  const Eigen::Matrix3cd k = d.tensor_contract(x.w);

  CMatrix4 out = constant * pauli_tensor(0, 0);
  for (int j = 0; j < 3; ++j) {
    out += right(j) * pauli_tensor(0, j + 1);
    out += left(j) * pauli_tensor(j + 1, 0);
  }
  for (int m = 0; m < 3; ++m) {
    for (int l = 0; l < 3; ++l) out += k(m, l) * pauli_tensor(m + 1, l + 1);
  }
  return out;
}

CMatrix4 apply_haar_closed_form(const DeltaCoefficients& d, const PauliElement& x) {
  if (d.B1.cwiseAbs().maxCoeff() > kTolAlg || d.B2.cwiseAbs().maxCoeff() > kTolAlg) {
    throw Error(ErrorCode::NotHaarForm, "closed form needs vanishing linear blocks");
  }
  if (!is_trace_preserving(d)) {
    throw Error(ErrorCode::NotTracePreserving, "closed form needs b = 0");
  }
  if (!is_symmetric_coefficients(d)) {
    throw Error(ErrorCode::NotSymmetric, "closed form needs a symmetric tensor");
  }
  if (!x.is_self_adjoint()) {
    throw Error(ErrorCode::NotSelfAdjoint, "closed form needs a self-adjoint input");
  }

  const double w0 = x.w0.real();
  const auto [L, M, N, O, P, R] = haar_entries(quadratic_readoff(d), x.real_w());
  const Complex i(0.0, 1.0);

  CMatrix4 m;
  m << w0 + R,         N - i * P,  N - i * P,  L - 2.0 * i * M - O,
       N + i * P,      w0 - R,     L + O,      -N + i * P,
       N + i * P,      L + O,      w0 - R,     -N + i * P,
       L + 2.0 * i * M - O, -N - i * P, -N - i * P, w0 + R;
  return m;
}

bool is_trace_preserving(const DeltaCoefficients& d, double tol) { return d.b.norm() <= tol; }

bool is_symmetric(const DeltaCoefficients& d, double tol) {
  for (int i = 1; i <= 3; ++i) {
    const CMatrix4 image = apply(d, PauliElement::basis(i));
    if ((swap_conjugate(image) - image).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool is_symmetric_coefficients(const DeltaCoefficients& d, double tol) {
  if ((d.B1 - d.B2).cwiseAbs().maxCoeff() > tol) return false;
  for (const Matrix3& s : d.slices) {
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool has_haar_trace(const DeltaCoefficients& d, double tol) {
  const bool blocks_vanish =
      d.B1.cwiseAbs().maxCoeff() <= tol && d.B2.cwiseAbs().maxCoeff() <= tol;

  bool partial_traces_vanish = true;
  for (int i = 1; i <= 3; ++i) {
    const PauliElement x = PauliElement::basis(i);
    const CMatrix4 image = apply(d, x);
    // (τ⊗id)Δ(x) = (id⊗τ)Δ(x) = τ(x)·1, and τ(σ_i) = 0.
    const CMatrix2 expected = normalized_trace(recompose(x)) * sigma(0);
    const double r1 = (trace_first_leg(image) - expected).cwiseAbs().maxCoeff();
    const double r2 = (trace_second_leg(image) - expected).cwiseAbs().maxCoeff();
    if (r1 > tol || r2 > tol) partial_traces_vanish = false;
  }
  return blocks_vanish && partial_traces_vanish;
}

Vector3 dual_pair(const DeltaCoefficients& d, const BlochState& phi, const BlochState& psi) {
  if (!is_symmetric_coefficients(d)) {
    throw Error(ErrorCode::NotSymmetric, "dual pairing formula assumes a symmetric operator");
  }
  const Vector3& f = phi.f();
  const Vector3& p = psi.f();
  Vector3 out = d.B1.transpose() * (p + f);
  for (int k = 0; k < 3; ++k) out(k) += f.dot(d.slices[k] * p);
  return out;
}

std::pair<DeltaCoefficients, DeltaCoefficients> split(const DeltaCoefficients& d, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorCode::InvalidLambda, "lambda must lie strictly between 0 and 1");
  }
  DeltaCoefficients bilinear;
  for (int i = 0; i < 3; ++i) bilinear.slices[i] = d.slices[i] / lambda;

  DeltaCoefficients linear;
  linear.b = d.b / (1.0 - lambda);
  linear.B1 = d.B1 / (1.0 - lambda);
  linear.B2 = d.B2 / (1.0 - lambda);
  return {bilinear, linear};
}

namespace {

CMatrix4 basis_image(const DeltaCoefficients& d, int alpha) {
  return apply(d, PauliElement::basis(alpha));
}

}  // namespace

bool check_coassociativity(const DeltaCoefficients& d, double tol) {
  std::array<CMatrix4, 4> images;
  for (int alpha = 0; alpha < 4; ++alpha) images[alpha] = basis_image(d, alpha);

  for (int i = 1; i <= 3; ++i) {
    const CMatrix4 coeffs = tensor_coefficients(images[i]);
    CMatrix8 left = CMatrix8::Zero();
    CMatrix8 right = CMatrix8::Zero();
    for (int alpha = 0; alpha < 4; ++alpha) {
      for (int beta = 0; beta < 4; ++beta) {
        const Complex c = coeffs(alpha, beta);
        if (c == Complex(0.0, 0.0)) continue;
        left += c * kron(images[alpha], sigma(beta));
        right += c * kron(sigma(alpha), images[beta]);
      }
    }
    if ((left - right).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

QuadraticMapCoeffs quadratic_readoff(const DeltaCoefficients& d) {
  QuadraticMapCoeffs v;
  for (int k = 0; k < 3; ++k) {
    const Matrix3& s = d.slices[k];
    v.a(k) = s(0, 0);
    v.b(k) = s(1, 1);
    v.c(k) = s(2, 2);
    v.A(k) = s(0, 1) + s(1, 0);
    v.B(k) = s(1, 2) + s(2, 1);
    v.Gamma(k) = s(0, 2) + s(2, 0);
  }
  // V(f)_k = Σ_j (B1 + B2)(j,k) f_j: row j of B1 + B2 holds the f_j coefficients.
  const Matrix3 lin = d.B1 + d.B2;
  v.d = lin.row(0).transpose();
  v.e = lin.row(1).transpose();
  v.g = lin.row(2).transpose();
  return v;
}

QuadraticMapCoeffs induced_qmap(const DeltaCoefficients& d) {
  if (!is_trace_preserving(d)) {
    throw Error(ErrorCode::NotTracePreserving, "induced map needs b = 0");
  }
  return quadratic_readoff(d);
}

}  // namespace qqo
