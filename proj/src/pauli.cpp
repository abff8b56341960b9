#include "qqo/pauli.hpp"

#include <array>
#include <cmath>

#include "qqo/error.hpp"

namespace qqo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotHaarForm: return "NotHaarForm";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::InvalidT: return "InvalidT";
    case ErrorCode::InvalidStart: return "InvalidStart";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::array<CMatrix2, 4> make_sigmas() {
  const Complex i(0.0, 1.0);
  std::array<CMatrix2, 4> s;
  s[0] << 1.0, 0.0, 0.0, 1.0;
  s[1] << 0.0, 1.0, 1.0, 0.0;
  s[2] << 0.0, -i, i, 0.0;
  s[3] << 1.0, 0.0, 0.0, -1.0;
  return s;
}

std::array<CMatrix4, 16> make_tensors() {
  std::array<CMatrix4, 16> t;
  for (int m = 0; m < 4; ++m) {
    for (int l = 0; l < 4; ++l) t[4 * m + l] = kron(sigma(m), sigma(l));
  }
  return t;
}

}  // namespace

const CMatrix2& sigma(int k) {
  static const std::array<CMatrix2, 4> sigmas = make_sigmas();
  if (k < 0 || k > 3) throw Error(ErrorCode::InvalidArgument, "Pauli index out of range");
  return sigmas[k];
}

const CMatrix4& pauli_tensor(int m, int l) {
  static const std::array<CMatrix4, 16> tensors = make_tensors();
  if (m < 0 || m > 3 || l < 0 || l > 3) {
    throw Error(ErrorCode::InvalidArgument, "Pauli index out of range");
  }
  return tensors[4 * m + l];
}

PauliElement PauliElement::basis(int k) {
  if (k < 0 || k > 3) throw Error(ErrorCode::InvalidArgument, "Pauli index out of range");
  PauliElement p;
  if (k == 0) {
    p.w0 = 1.0;
  } else {
    p.w(k - 1) = 1.0;
  }
  return p;
}

double PauliElement::imaginary_residue() const {
  return std::max(std::abs(w0.imag()), w.imag().cwiseAbs().maxCoeff());
}

BlochState::BlochState(const Vector3& f) : f_(f) {
  if (!f.allFinite()) throw Error(ErrorCode::InvalidArgument, "Bloch vector is not finite");
  if (f.norm() > 1.0 + kTolState) {
    throw Error(ErrorCode::InvalidArgument, "Bloch vector lies outside the unit ball");
  }
}

bool BlochState::is_pure() const { return std::abs(f_.norm() - 1.0) <= kTolState; }

CMatrix2 BlochState::density_matrix() const {
  return recompose(PauliElement::real(0.5, 0.5 * f_));
}

PauliElement decompose(const CMatrix2& m) {
  PauliElement p;
  p.w0 = m.trace() / 2.0;
  for (int k = 0; k < 3; ++k) p.w(k) = (m * sigma(k + 1)).trace() / 2.0;
  return p;
}

CMatrix2 recompose(const PauliElement& p) {
  CMatrix2 m = p.w0 * sigma(0);
  for (int k = 0; k < 3; ++k) m += p.w(k) * sigma(k + 1);
  return m;
}

bool is_positive_element(const PauliElement& p, double tol) {
  if (!p.is_self_adjoint(tol)) {
    throw Error(ErrorCode::NotSelfAdjoint, "element has non-real Pauli coefficients");
  }
  return p.real_w().norm() <= p.w0.real() + tol;
}

Complex state_eval(const BlochState& s, const PauliElement& p) {
  // Σ w_k f_k; Eigen's dot() would conjugate w.
  return p.w0 + p.w.cwiseProduct(s.f().cast<Complex>()).sum();
}

CMatrix4 swap_conjugate(const CMatrix4& m) {
  // Basis |ab⟩ ↦ index 2a + b; the swap exchanges indices 1 and 2.
  static constexpr std::array<int, 4> perm{0, 2, 1, 3};
  CMatrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out(r, c) = m(perm[r], perm[c]);
  }
  return out;
}

CMatrix4 tensor_coefficients(const CMatrix4& m) {
  CMatrix4 c;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) c(a, b) = (pauli_tensor(a, b) * m).trace() / 4.0;
  }
  return c;
}

Complex normalized_trace(const CMatrix2& m) { return m.trace() / 2.0; }

Complex normalized_trace(const CMatrix4& m) { return m.trace() / 4.0; }

CMatrix2 trace_first_leg(const CMatrix4& m) {
  CMatrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = (m(r, c) + m(2 + r, 2 + c)) / 2.0;
  }
  return out;
}

CMatrix2 trace_second_leg(const CMatrix4& m) {
  CMatrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = (m(2 * r, 2 * c) + m(2 * r + 1, 2 * c + 1)) / 2.0;
  }
  return out;
}

}  // namespace qqo
