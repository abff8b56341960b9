#include "qqo/inspect.hpp"

namespace qqo {

InspectionReport inspect(const DeltaCoefficients& d, const InspectOptions& options) {
  InspectionReport r;
  r.options = options;
  r.trace_preserving = is_trace_preserving(d, options.tol);
  r.symmetric = is_symmetric(d, options.tol);
  r.haar_trace = r.trace_preserving && has_haar_trace(d, options.tol);
  r.coassociative = check_coassociativity(d, options.tol);

  if (r.trace_preserving) {
    const QuadraticMapCoeffs v = induced_qmap(d);
    PurityFindings p;
    p.certificate = check_sphere_conditions(v, options.tol);
    if (is_haar_form(v, options.tol)) p.haar_certificate = check_haar_conditions(v, options.tol);
    p.monte_carlo = monte_carlo_sphere(v, options.samples, options.seed);
    r.q_purity = p;
  }
  r.positivity = check_positivity_sampled(d, options.samples, options.seed, options.tol);
  return r;
}

Json inspection_json(const InspectionReport& report) {
  Json out;
  out["trace_preserving"] = report.trace_preserving;
  out["symmetric"] = report.symmetric;
  out["haar_trace"] = report.haar_trace;
  out["coassociative"] = report.coassociative;
  if (report.q_purity) {
    const PurityFindings& p = *report.q_purity;
    Json q;
    q["verdict"] = p.verdict();
    q["oracle_agrees"] = p.oracle_agrees(report.options.tol);
    q["certificate"] = certificate_json(p.certificate);
    if (p.haar_certificate) q["haar_certificate"] = certificate_json(*p.haar_certificate);
    q["monte_carlo"] = sphere_oracle_json(p.monte_carlo);
    out["q_purity"] = q;
  } else {
    out["q_purity"] = nullptr;
  }
  out["positivity"] = positivity_json(report.positivity);
  return out;
}

}  // namespace qqo
