#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qqo/catalog.hpp"
#include "qqo/dynamics.hpp"
#include "qqo/error.hpp"
#include "qqo/inspect.hpp"
#include "qqo/io.hpp"

namespace qqo::cli {

namespace {

constexpr double kConjugacyPass = 1e-10;

Vector3 parse_triple(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(part, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != part.size() || !std::isfinite(x)) {
      throw Error(ErrorCode::InvalidArgument, flag + ": cannot parse '" + part + "' as a number");
    }
    values.push_back(x);
  }
  if (values.size() != 3) {
    throw Error(ErrorCode::InvalidArgument, flag + ": expected three comma-separated numbers");
  }
  return {values[0], values[1], values[2]};
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct InspectArgs {
  std::string path;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  double tol = 1e-9;

  InspectOptions options() const { return {samples, seed, tol}; }
};

void add_inspect_flags(CLI::App* cmd, InspectArgs& a) {
  cmd->add_option("path", a.path, "operator config (JSON)")->required();
  cmd->add_option("--samples", a.samples, "Monte-Carlo samples")
      ->default_val(a.samples)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "sampler seed")->default_val(a.seed);
  cmd->add_option("--tol", a.tol, "certificate and eigenvalue tolerance")
      ->default_val(a.tol)
      ->check(CLI::PositiveNumber);
}

int cmd_inspect(const InspectArgs& a, std::ostream& out) {
  const DeltaCoefficients d = load_operator_config(a.path);
  out << inspection_json(inspect(d, a.options())).dump(2) << "\n";
  return kExitOk;
}

struct SimulateArgs {
  std::string path;
  std::string f0;
  std::size_t steps = 50;
  std::string out_path;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const DeltaCoefficients d = load_operator_config(a.path);
  if (!is_trace_preserving(d)) {
    throw Error(ErrorCode::NotTracePreserving, "simulation needs a trace-preserving operator");
  }
  const Vector3 f0 = parse_triple(a.f0, "--f0");
  const Trajectory t = iterate(induced_qmap(d), f0, a.steps);

  std::ostream* summary = &out;
  if (a.out_path.empty()) {
    write_trajectory_csv(out, t);
    summary = &err;
  } else {
    std::ofstream file(a.out_path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + a.out_path);
    write_trajectory_csv(file, t);
  }

  const double final_norm = t.norms.back();
  std::string kind = "orbit";
  if (final_norm < 1e-12) {
    kind = "collapse";
  } else if (t.size() >= 2 && (t.points[t.size() - 1] - t.points[t.size() - 2]).norm() <= 1e-12) {
    kind = "fixed";
  }
  *summary << "steps=" << (t.size() - 1) << " final_norm=" << fmt17(final_norm)
           << " classification=" << kind << "\n";
  return kExitOk;
}

struct CertifyArgs {
  InspectArgs inspect;
  std::string expect;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  const DeltaCoefficients d = load_operator_config(a.inspect.path);
  const InspectionReport report = inspect(d, a.inspect.options());
  out << inspection_json(report).dump(2) << "\n";

  bool matched = false;
  if (a.expect == "pure" || a.expect == "impure") {
    if (!report.q_purity) {
      err << "q-purity is undefined for an operator that is not trace-preserving\n";
      return kExitInputError;
    }
    matched = report.q_purity->verdict() == (a.expect == "pure");
  } else {
    matched = report.positivity.verdict == (a.expect == "positive");
  }
  if (!matched) {
    err << "expectation '" << a.expect << "' not met\n";
    return kExitExpectationFailed;
  }
  return kExitOk;
}

int cmd_catalog(const std::string& name, const std::string& t_arg, std::ostream& out,
                std::ostream& err) {
  if (name.empty()) {
    for (const CatalogEntry& e : catalog_entries()) out << e.name << "\t" << e.notes << "\n";
    return kExitOk;
  }
  if (name == "delta1" && !t_arg.empty()) {
    out << operator_config_json(delta1(parse_triple(t_arg, "--t"))).dump(2) << "\n";
    return kExitOk;
  }
  const auto entry = find_catalog_entry(name);
  if (!entry) {
    err << "unknown catalog entry '" << name << "'\n";
    return kExitInputError;
  }
  out << operator_config_json(entry->delta).dump(2) << "\n";
  return kExitOk;
}

int cmd_conjugacy(std::size_t grid, std::ostream& out) {
  const double residual = logistic_conjugacy_residual(grid);
  out << "grid=" << grid << " residual=" << fmt17(residual) << "\n";
  return residual <= kConjugacyPass ? kExitOk : kExitExpectationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi quantum quadratic operators on M2(C): certification and dynamics", "qqo"};
  app.require_subcommand(1);

  InspectArgs inspect_args;
  auto* inspect_cmd = app.add_subcommand("inspect", "classify an operator and print a JSON report");
  add_inspect_flags(inspect_cmd, inspect_args);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "iterate the induced quadratic map");
  simulate_cmd->add_option("path", sim.path, "operator config (JSON)")->required();
  simulate_cmd->add_option("--f0", sim.f0, "starting Bloch vector x,y,z")->required();
  simulate_cmd->add_option("--steps", sim.steps, "iterations")->default_val(sim.steps);
  simulate_cmd->add_option("--out", sim.out_path, "trajectory CSV (standard output if omitted)");

  CertifyArgs cert;
  auto* certify_cmd = app.add_subcommand("certify", "assert a verdict; exit 2 on mismatch");
  add_inspect_flags(certify_cmd, cert.inspect);
  certify_cmd->add_option("--expect", cert.expect, "pure|impure|positive|nonpositive")
      ->required()
      ->check(CLI::IsMember({"pure", "impure", "positive", "nonpositive"}));

  std::string catalog_name;
  std::string catalog_t;
  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in operators or print one");
  catalog_cmd->add_option("name", catalog_name, "entry name");
  catalog_cmd->add_option("--t", catalog_t, "unit vector t for delta1, as x,y,z");

  std::size_t grid = 10000;
  auto* conjugacy_cmd =
      app.add_subcommand("conjugacy", "check the circle-map / logistic-map conjugacy");
  conjugacy_cmd->add_option("--grid", grid, "grid points on [0,1]")->default_val(grid);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*inspect_cmd) return cmd_inspect(inspect_args, out);
    if (*simulate_cmd) return cmd_simulate(sim, out, err);
    if (*certify_cmd) return cmd_certify(cert, out, err);
    if (*catalog_cmd) return cmd_catalog(catalog_name, catalog_t, out, err);
    if (*conjugacy_cmd) return cmd_conjugacy(grid, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qqo::cli
