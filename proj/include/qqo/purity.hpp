#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qqo/qmap.hpp"

namespace qqo {

struct CertificateReport {
  bool verdict = false;
  /// (condition id, |lhs − rhs|) in the order the conditions are stated.
  std::vector<std::pair<std::string, double>> residuals;
  std::string worst_condition;

  double worst_residual() const;
  double residual(const std::string& id) const;
};

/// Sphere-preservation conditions (i)–(vi) for a general quadratic map,
/// checked one equation at a time. Ids are "i.1" … "vi.4".
CertificateReport check_sphere_conditions(const QuadraticMapCoeffs& v, double tol = kTolCert);

/// The four condition groups for maps with d = e = g = 0.
/// Error NotHaarForm otherwise.
CertificateReport check_haar_conditions(const QuadraticMapCoeffs& v, double tol = kTolCert);

/// 2B is an isometry: residual max |(2B)ᵀ(2B) − I|.
CertificateReport check_linear_isometry(const Matrix3& b_matrix, double tol = kTolCert);

struct SphereOracleResult {
  double max_deviation = 0.0;
  Vector3 worst_point = Vector3::Zero();
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// max over uniform sphere samples of |‖V(f)‖ − 1|. Deterministic in seed.
SphereOracleResult monte_carlo_sphere(const QuadraticMapCoeffs& v, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace qqo
