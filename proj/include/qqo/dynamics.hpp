#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "qqo/qmap.hpp"

namespace qqo {

/// Orbit f0, V(f0), V²(f0), … with cached norms.
struct Trajectory {
  std::vector<Vector3> points;
  std::vector<double> norms;

  std::size_t size() const { return points.size(); }
};

/// Norms below this are flushed to an exact zero and iteration stops.
inline constexpr double kUnderflowFlush = 1e-300;

/// points[0] = f0, points[n+1] = V(points[n]). Error InvalidStart when
/// ‖f0‖ > 1 + tol_state.
Trajectory iterate(const QuadraticMapCoeffs& v, const Vector3& f0, std::size_t steps);

/// max_n |‖Vⁿ(f0)‖ − ‖f0‖^(2ⁿ)| / ‖f0‖^(2ⁿ), skipping terms whose expected
/// norm is below 1e-290. Error NotApplicable unless v passes the Haar
/// certificate; Error InvalidStart unless ‖f0‖ < 1.
double verify_collapse(const QuadraticMapCoeffs& v, const Vector3& f0, std::size_t steps);

/// Fixed points on the unit sphere, found by damped Newton iteration from a
/// polar × azimuthal grid (grid_density × 2·grid_density seeds).
std::vector<Vector3> fixed_points_sphere(const QuadraticMapCoeffs& v,
                                         std::size_t grid_density = 32);

/// V0 restricted to the invariant circle f3 = 0: (f1, f2) ↦ (2f1f2, f1² − f2²).
/// Error InvalidStart off the unit circle.
std::pair<double, double> circle_restriction_step(double f1, double f2);

/// max over a uniform grid on [0, 1] of |g(√x)² − 4x(1 − x)|, g(y) = 2y√(1 − y²).
double logistic_conjugacy_residual(std::size_t grid);

/// Mean per-step log stretching of two circle orbits started delta0 apart
/// (separation renormalized every step). NaN when the reference orbit lands
/// on a fixed point of the circle map.
double estimate_divergence_rate(double f0_angle, std::size_t steps, double delta0);

/// CSV with header `n,f1,f2,f3,norm`, 17 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

}  // namespace qqo
