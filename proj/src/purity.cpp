#include "qqo/purity.hpp"

#include <algorithm>
#include <cmath>

#include "qqo/error.hpp"
#include "qqo/sampling.hpp"

namespace qqo {

namespace {

class ReportBuilder {
public:
  void add(std::string id, double lhs, double rhs) {
    residuals_.emplace_back(std::move(id), std::abs(lhs - rhs));
  }

  CertificateReport finish(double tol) && {
    CertificateReport r;
    r.residuals = std::move(residuals_);
    r.verdict = true;
    double worst = -1.0;
    for (const auto& [id, value] : r.residuals) {
      // NaN residuals fail the certificate.
      if (!(value <= tol)) r.verdict = false;
      if (value > worst || std::isnan(value)) {
        worst = std::isnan(value) ? INFINITY : value;
        r.worst_condition = id;
      }
    }
    return r;
  }

private:
  std::vector<std::pair<std::string, double>> residuals_;
};

}  // namespace

double CertificateReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& [id, value] : residuals) worst = std::max(worst, value);
  return worst;
}

double CertificateReport::residual(const std::string& id) const {
  for (const auto& [key, value] : residuals) {
    if (key == id) return value;
  }
  throw Error(ErrorCode::InvalidArgument, "no residual named " + id);
}

CertificateReport check_sphere_conditions(const QuadraticMapCoeffs& v, double tol) {
  const Vector3 &a = v.a, &b = v.b, &c = v.c, &A = v.A, &B = v.B, &G = v.Gamma;
  const Vector3 &d = v.d, &e = v.e, &g = v.g;

  ReportBuilder r;
  r.add("i.1", a.squaredNorm() + d.squaredNorm(), 1.0);
  r.add("i.2", b.squaredNorm() + e.squaredNorm(), 1.0);
  r.add("i.3", c.squaredNorm() + g.squaredNorm(), 1.0);

  r.add("ii.1", A.norm(), (a - b).norm());
  r.add("ii.2", G.norm(), (a - c).norm());
  r.add("ii.3", B.norm(), (b - c).norm());

  r.add("iii.1", a.dot(d), 0.0);
  r.add("iii.2", b.dot(e), 0.0);
  r.add("iii.3", c.dot(g), 0.0);

  r.add("iv.1", a.dot(G), c.dot(G));
  r.add("iv.2", b.dot(B), c.dot(B));
  r.add("iv.3", a.dot(A), b.dot(A));

  r.add("v.1", c.dot(G) + d.dot(g), 0.0);
  r.add("v.2", c.dot(B) + e.dot(g), 0.0);
  r.add("v.3", c.dot(d) + G.dot(g), 0.0);
  r.add("v.4", c.dot(e) + B.dot(g), 0.0);
  r.add("v.5", b.dot(d) + A.dot(e), 0.0);
  r.add("v.6", b.dot(A) + d.dot(e), 0.0);
  r.add("v.7", b.dot(g) + B.dot(e), 0.0);
  r.add("v.8", a.dot(e) + A.dot(d), 0.0);
  r.add("v.9", a.dot(g) + G.dot(d), 0.0);

  r.add("vi.1", a.dot(B) - c.dot(B) + A.dot(G), 0.0);
  r.add("vi.2", b.dot(G) - c.dot(G) + A.dot(B), 0.0);
  r.add("vi.3", A.dot(g) + B.dot(d) + G.dot(e), 0.0);
  r.add("vi.4", c.dot(A) + d.dot(e) + B.dot(G), 0.0);

  return std::move(r).finish(tol);
}

CertificateReport check_haar_conditions(const QuadraticMapCoeffs& v, double tol) {
  if (!is_haar_form(v)) {
    throw Error(ErrorCode::NotHaarForm, "Haar conditions need d = e = g = 0");
  }
  const Vector3 &a = v.a, &b = v.b, &c = v.c, &A = v.A, &B = v.B, &G = v.Gamma;

  ReportBuilder r;
  r.add("i.1", a.norm(), 1.0);
  r.add("i.2", b.norm(), 1.0);
  r.add("i.3", c.norm(), 1.0);

  r.add("ii.1", A.norm(), (a - b).norm());
  r.add("ii.2", G.norm(), (a - c).norm());
  r.add("ii.3", B.norm(), (b - c).norm());

  r.add("iii.1", a.dot(B) + A.dot(G), 0.0);
  r.add("iii.2", b.dot(G) + A.dot(B), 0.0);
  r.add("iii.3", c.dot(A) + B.dot(G), 0.0);

  r.add("iv.1", a.dot(A), 0.0);
  r.add("iv.2", a.dot(G), 0.0);
  r.add("iv.3", b.dot(A), 0.0);
  r.add("iv.4", b.dot(B), 0.0);
  r.add("iv.5", c.dot(G), 0.0);
  r.add("iv.6", c.dot(B), 0.0);

  return std::move(r).finish(tol);
}

CertificateReport check_linear_isometry(const Matrix3& b_matrix, double tol) {
  const Matrix3 u = 2.0 * b_matrix;
  const double residual = (u.transpose() * u - Matrix3::Identity()).cwiseAbs().maxCoeff();
  ReportBuilder r;
  r.add("isometry", residual, 0.0);
  return std::move(r).finish(tol);
}

SphereOracleResult monte_carlo_sphere(const QuadraticMapCoeffs& v, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  const CounterSampler sampler(seed, /*stream=*/1);

  SphereOracleResult out;
  out.samples = samples;
  out.seed = seed;
  out.max_deviation = -1.0;
  for (std::uint64_t n = 0; n < samples; ++n) {
    const Vector3 f = sampler.sphere_point(n);
    double dev = std::abs(eval(v, f).norm() - 1.0);
    if (std::isnan(dev)) dev = INFINITY;
    if (dev > out.max_deviation) {
      out.max_deviation = dev;
      out.worst_point = f;
    }
  }
  return out;
}

}  // namespace qqo
