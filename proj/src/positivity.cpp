#include "qqo/positivity.hpp"

#include <cmath>
#include <vector>

#include "qqo/error.hpp"
#include "qqo/jacobi.hpp"
#include "qqo/sampling.hpp"

namespace qqo {

Vector4 eigvals_hermitian4(const CMatrix4& h) { return jacobi_eigen(h).values; }

CMatrix4 simple_form_matrix(double w0, const Vector3& w, const Vector3& r) {
  CMatrix2 left = CMatrix2::Zero();
  CMatrix2 right = CMatrix2::Zero();
  for (int k = 0; k < 3; ++k) {
    left += w(k) * sigma(k + 1);
    right += r(k) * sigma(k + 1);
  }
  return w0 * pauli_tensor(0, 0) + kron(left, sigma(0)) + kron(sigma(0), right);
}

Vector4 simple_form_eigs(double w0, const Vector3& w, const Vector3& r) {
  const double nw = w.norm(), nr = r.norm();
  return Vector4(w0 - nr + nw, w0 - nr - nw, w0 + nr + nw, w0 + nr - nw);
}

double operator_norm3(const Matrix3& b_matrix) {
  const Matrix3 gram = b_matrix.transpose() * b_matrix;
  const double top = jacobi_eigen(gram).values(2);
  return std::sqrt(std::max(top, 0.0));
}

Vector3 top_right_singular_vector(const Matrix3& b_matrix) {
  const Matrix3 gram = b_matrix.transpose() * b_matrix;
  Vector3 w = jacobi_eigen(gram).vectors.col(2).normalized();
  Eigen::Index k;
  w.cwiseAbs().maxCoeff(&k);
  if (w(k) < 0) w = -w;
  return w;
}

namespace {

double min_eigenvalue_at(const DeltaCoefficients& d, const Vector3& w) {
  return eigvals_hermitian4(apply(d, PauliElement::real(1.0, w)))(0);
}

class PositivityScan {
public:
  PositivityScan(const DeltaCoefficients& d, double tol) : d_(d), tol_(tol) {
    verdict_.min_eigenvalue_seen = INFINITY;
  }

  /// Returns false once a witness has been recorded.
  bool visit(const Vector3& w) {
    const double lambda = min_eigenvalue_at(d_, w);
    ++verdict_.evaluations;
    verdict_.min_eigenvalue_seen = std::min(verdict_.min_eigenvalue_seen, lambda);
    if (lambda < -tol_) {
      verdict_.verdict = false;
      verdict_.witness = NegativityWitness{w, lambda};
      return false;
    }
    return true;
  }

  bool done() const { return verdict_.witness.has_value(); }
  PositivityVerdict result() const { return verdict_; }

private:
  const DeltaCoefficients& d_;
  double tol_;
  PositivityVerdict verdict_;
};

std::vector<Vector3> probe_set(const DeltaCoefficients& d) {
  const QuadraticMapCoeffs v = quadratic_readoff(d);
  std::vector<Vector3> probes;
  for (const Vector3& raw : {v.a, v.b, v.c}) {
    const double n = raw.norm();
    if (n <= kTolAlg || !std::isfinite(n)) continue;
    // Keep x = 1 + w·σ positive.
    const Vector3 w = n > 1.0 ? Vector3(raw / n) : raw;
    probes.push_back(w);
    probes.push_back(-w);
  }
  for (int k = 0; k < 3; ++k) {
    probes.push_back(Vector3::Unit(k));
    probes.push_back(-Vector3::Unit(k));
  }
  return probes;
}

}  // namespace

PositivityVerdict check_linear_positivity(const Matrix3& b_matrix, double tol) {
  PositivityVerdict out;
  const double norm = operator_norm3(b_matrix);
  // Product-form spectrum at the worst input: min eigenvalue 1 − 2‖B‖.
  out.min_eigenvalue_seen = 1.0 - 2.0 * norm;
  out.evaluations = 1;
  if (norm <= 0.5 + tol) return out;

  const Vector3 w = top_right_singular_vector(b_matrix);
  out.verdict = false;
  out.witness = NegativityWitness{w, min_eigenvalue_at(DeltaCoefficients::linear(b_matrix), w)};
  out.min_eigenvalue_seen = out.witness->min_eigenvalue;
  return out;
}

PositivityVerdict check_positivity_probes(const DeltaCoefficients& d, double tol) {
  PositivityScan scan(d, tol);
  for (const Vector3& w : probe_set(d)) {
    if (!scan.visit(w)) break;
  }
  return scan.result();
}

PositivityVerdict check_positivity_sampled(const DeltaCoefficients& d, std::uint64_t samples,
                                           std::uint64_t seed, double tol) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  PositivityScan scan(d, tol);
  for (const Vector3& w : probe_set(d)) {
    if (!scan.visit(w)) return scan.result();
  }
  const CounterSampler sphere(seed, /*stream=*/2);
  for (std::uint64_t n = 0; n < samples; ++n) {
    if (!scan.visit(sphere.sphere_point(n))) return scan.result();
  }
  const CounterSampler ball(seed, /*stream=*/3);
  for (std::uint64_t n = 0; n < samples; ++n) {
    if (!scan.visit(ball.ball_point(n))) return scan.result();
  }
  return scan.result();
}

std::array<ProbeEigenvalues, 3> theorem_witness_eigs(const QuadraticMapCoeffs& v) {
  if (!is_haar_form(v)) {
    throw Error(ErrorCode::NotHaarForm, "witness spectra need d = e = g = 0");
  }
  // For probe p with "other" vectors (u1, u2) and cross vector X joining them:
  // λ = −(s1 + s2), s1 + s2, 2 ± sqrt((s1 − s2)² + ⟨X,p⟩²).
  auto spectrum = [](const std::string& label, const Vector3& p, const Vector3& u1,
                     const Vector3& u2, const Vector3& cross) {
    const double s1 = u1.dot(p), s2 = u2.dot(p), x = cross.dot(p);
    const double root = std::hypot(s1 - s2, x);
    return ProbeEigenvalues{label, p, Vector4(-s2 - s1, s2 + s1, 2.0 + root, 2.0 - root)};
  };
  return {spectrum("a", v.a, v.b, v.c, v.B),
          spectrum("b", v.b, v.a, v.c, v.Gamma),
          spectrum("c", v.c, v.a, v.b, v.A)};
}

}  // namespace qqo
