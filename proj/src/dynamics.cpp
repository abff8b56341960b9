#include "qqo/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qqo/error.hpp"
#include "qqo/purity.hpp"

namespace qqo {

Trajectory iterate(const QuadraticMapCoeffs& v, const Vector3& f0, std::size_t steps) {
  if (!f0.allFinite() || f0.norm() > 1.0 + kTolState) {
    throw Error(ErrorCode::InvalidStart, "starting point lies outside the Bloch ball");
  }
  Trajectory t;
  t.points.reserve(steps + 1);
  t.norms.reserve(steps + 1);

  auto push = [&t](const Vector3& f) {
    const double n = f.stableNorm();
    if (n < kUnderflowFlush) {
      t.points.push_back(Vector3::Zero());
      t.norms.push_back(0.0);
      return false;
    }
    t.points.push_back(f);
    t.norms.push_back(n);
    return std::isfinite(n);
  };

  // V(0) = 0 for every map in this form, so a flushed orbit has stopped.
  bool alive = push(f0);
  for (std::size_t n = 0; alive && n < steps; ++n) {
    alive = push(eval(v, t.points.back()));
  }
  return t;
}

double verify_collapse(const QuadraticMapCoeffs& v, const Vector3& f0, std::size_t steps) {
  if (!is_haar_form(v) || !check_haar_conditions(v).verdict) {
    throw Error(ErrorCode::NotApplicable, "collapse law needs a certified Haar-form map");
  }
  const double r0 = f0.norm();
  if (!(r0 < 1.0)) throw Error(ErrorCode::InvalidStart, "collapse law needs an interior start");
  if (r0 == 0.0) return 0.0;

  const Trajectory t = iterate(v, f0, steps);
  double worst = 0.0;
  double expected = r0;
  for (std::size_t n = 0; n < t.size() && expected >= 1e-290; ++n) {
    worst = std::max(worst, std::abs(t.norms[n] - expected) / expected);
    expected *= expected;
  }
  return worst;
}

namespace {

constexpr double kFixedPointResidual = 1e-9;
constexpr double kSphereSlack = 1e-6;
constexpr double kDedup = 1e-6;
constexpr int kNewtonIterations = 60;

Vector3 newton_refine(const QuadraticMapCoeffs& v, Vector3 f) {
  auto residual = [&v](const Vector3& x) { return (eval(v, x) - x).eval(); };
  Vector3 r = residual(f);
  for (int it = 0; it < kNewtonIterations && r.norm() > 1e-15; ++it) {
    const Matrix3 j = jacobian(v, f) - Matrix3::Identity();
    const Vector3 step = j.completeOrthogonalDecomposition().solve(-r);
    if (!step.allFinite()) break;

    // Backtrack until the residual decreases.
    double scale = 1.0;
    bool improved = false;
    for (int k = 0; k < 30; ++k, scale *= 0.5) {
      const Vector3 candidate = f + scale * step;
      const Vector3 rc = residual(candidate);
      if (rc.norm() < r.norm()) {
        f = candidate;
        r = rc;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return f;
}

}  // namespace

std::vector<Vector3> fixed_points_sphere(const QuadraticMapCoeffs& v, std::size_t grid_density) {
  if (grid_density < 1) throw Error(ErrorCode::InvalidArgument, "grid density must be positive");
  const std::size_t polar = grid_density;
  const std::size_t azimuthal = 2 * grid_density;

  std::vector<Vector3> found;
  for (std::size_t i = 0; i < polar; ++i) {
    const double theta = std::numbers::pi * (static_cast<double>(i) + 0.5) / polar;
    for (std::size_t j = 0; j < azimuthal; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / azimuthal;
      const Vector3 seed(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                         std::cos(theta));
      const Vector3 f = newton_refine(v, seed);
      if (!f.allFinite()) continue;
      if ((eval(v, f) - f).norm() > kFixedPointResidual) continue;
      if (std::abs(f.norm() - 1.0) > kSphereSlack) continue;

      bool duplicate = false;
      for (const Vector3& g : found) {
        if ((g - f).norm() <= kDedup) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) found.push_back(f);
    }
  }
  return found;
}

std::pair<double, double> circle_restriction_step(double f1, double f2) {
  if (std::abs(f1 * f1 + f2 * f2 - 1.0) > kTolState) {
    throw Error(ErrorCode::InvalidStart, "point is not on the unit circle");
  }
  return {2.0 * f1 * f2, f1 * f1 - f2 * f2};
}

double logistic_conjugacy_residual(std::size_t grid) {
  if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least two points");
  double worst = 0.0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(grid - 1);
    const double y = std::sqrt(x);
    const double g = 2.0 * y * std::sqrt(1.0 - y * y);
    worst = std::max(worst, std::abs(g * g - 4.0 * x * (1.0 - x)));
  }
  return worst;
}

double estimate_divergence_rate(double f0_angle, std::size_t steps, double delta0) {
  if (!(delta0 > 0.0 && delta0 <= 1e-6)) {
    throw Error(ErrorCode::InvalidArgument, "delta0 must lie in (0, 1e-6]");
  }
  using Point = Eigen::Vector2d;
  auto advance = [](const Point& p) {
    const auto [x, y] = circle_restriction_step(p(0), p(1));
    return Point(x, y).normalized();
  };
  auto rotate = [](const Point& p, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Point(c * p(0) - s * p(1), s * p(0) + c * p(1));
  };

  Point ref(std::cos(f0_angle), std::sin(f0_angle));
  Point other = rotate(ref, delta0);
  double sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t n = 0; n < steps; ++n) {
    const Point next = advance(ref);
    if ((next - ref).norm() <= 1e-15) return std::nan("");
    const Point moved = advance(other);
    const double sep = std::atan2(next(0) * moved(1) - next(1) * moved(0), next.dot(moved));
    if (std::abs(sep) > 0.1 || sep == 0.0) break;
    sum += std::log(std::abs(sep) / delta0);
    ++counted;
    other = rotate(next, sep > 0 ? delta0 : -delta0);
    ref = next;
  }
  return counted > 0 ? sum / static_cast<double>(counted) : std::nan("");
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << "n,f1,f2,f3,norm\n";
  char buf[160];
  for (std::size_t n = 0; n < t.size(); ++n) {
    const Vector3& f = t.points[n];
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", n, f(0), f(1), f(2),
                  t.norms[n]);
    out << buf;
  }
}

}  // namespace qqo
