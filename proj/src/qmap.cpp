#include "qqo/qmap.hpp"

namespace qqo {

bool QuadraticMapCoeffs::all_finite() const {
  return a.allFinite() && b.allFinite() && c.allFinite() && A.allFinite() && B.allFinite() &&
         Gamma.allFinite() && d.allFinite() && e.allFinite() && g.allFinite();
}

QuadraticMapCoeffs QuadraticMapCoeffs::linear(const Matrix3& l) {
  QuadraticMapCoeffs v;
  v.d = l.col(0);
  v.e = l.col(1);
  v.g = l.col(2);
  return v;
}

Vector3 eval(const QuadraticMapCoeffs& v, const Vector3& f) {
  const double f1 = f(0), f2 = f(1), f3 = f(2);
  return v.a * (f1 * f1) + v.b * (f2 * f2) + v.c * (f3 * f3) + v.A * (f1 * f2) +
         v.B * (f2 * f3) + v.Gamma * (f1 * f3) + v.d * f1 + v.e * f2 + v.g * f3;
}

Matrix3 jacobian(const QuadraticMapCoeffs& v, const Vector3& f) {
  const double f1 = f(0), f2 = f(1), f3 = f(2);
  Matrix3 j;
  j.col(0) = 2.0 * f1 * v.a + f2 * v.A + f3 * v.Gamma + v.d;
  j.col(1) = 2.0 * f2 * v.b + f1 * v.A + f3 * v.B + v.e;
  j.col(2) = 2.0 * f3 * v.c + f2 * v.B + f1 * v.Gamma + v.g;
  return j;
}

QuadraticMapCoeffs homogeneous_part(const QuadraticMapCoeffs& v) {
  QuadraticMapCoeffs h = v;
  h.d.setZero();
  h.e.setZero();
  h.g.setZero();
  return h;
}

Matrix3 linear_part(const QuadraticMapCoeffs& v) {
  Matrix3 l;
  l << v.d, v.e, v.g;
  return l;
}

bool is_haar_form(const QuadraticMapCoeffs& v, double tol) {
  return v.d.norm() <= tol && v.e.norm() <= tol && v.g.norm() <= tol;
}

}  // namespace qqo
