#pragma once

#include <cstdint>
#include <optional>

#include "qqo/channel.hpp"
#include "qqo/io.hpp"
#include "qqo/positivity.hpp"
#include "qqo/purity.hpp"

namespace qqo {

struct InspectOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

struct PurityFindings {
  CertificateReport certificate;
  std::optional<CertificateReport> haar_certificate;
  SphereOracleResult monte_carlo;

  bool verdict() const { return certificate.verdict; }
  bool oracle_agrees(double tol) const {
    return certificate.verdict == (monte_carlo.max_deviation <= tol);
  }
};

/// Every classifier run on one operator.
struct InspectionReport {
  bool trace_preserving = false;
  bool symmetric = false;
  bool haar_trace = false;
  bool coassociative = false;
  /// Absent when the operator is not trace-preserving (no induced map).
  std::optional<PurityFindings> q_purity;
  PositivityVerdict positivity;
  InspectOptions options;
};

InspectionReport inspect(const DeltaCoefficients& d, const InspectOptions& options = {});
Json inspection_json(const InspectionReport& report);

}  // namespace qqo
