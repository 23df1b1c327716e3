#include "lightlike/minkowski.hpp"

#include <cmath>

namespace lightlike {

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Null: return "null";
    case CausalClass::Zero: return "zero";
  }
  return "?";
}

MVector Mat3::solve(const MVector& rhs) const {
  const double d = det();
  double scale = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m[i][j]));
  if (std::abs(d) < 1e-13 * std::max(1.0, scale * scale * scale))
    throw std::runtime_error("Mat3::solve: singular system");
  Mat3 t;
  MVector r;
  for (int k = 0; k < 3; ++k) {
    t = *this;
    for (int i = 0; i < 3; ++i) t.m[i][k] = rhs[i];
    r[k] = t.det() / d;
  }
  return r;
}

double Isometry::orthogonality_defect() const {
  const Mat3 eta = minkowski_metric();
  const Mat3 g = A.transposed() * eta * A;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::abs(g.m[i][j] - eta.m[i][j]));
  return worst;
}

Isometry Isometry::make(const Mat3& A, const MVector& b, double tol) {
  Isometry T{A, b};
  if (T.orthogonality_defect() > tol)
    throw std::invalid_argument("Isometry::make: A is not in O(2,1)");
  return T;
}

MVector apply_isometry(const Isometry& T, const MVector& x, double tol) {
  if (T.orthogonality_defect() > tol)
    throw std::invalid_argument("apply_isometry: invalid isometry");
  return T.A * x + T.b;
}

Mat3 boost_x1(double phi) {
  Mat3 A = Mat3::identity();
  A.m[0][0] = std::cosh(phi);
  A.m[0][1] = std::sinh(phi);
  A.m[1][0] = std::sinh(phi);
  A.m[1][1] = std::cosh(phi);
  return A;
}

Mat3 rotation_x1x2(double theta) {
  Mat3 A = Mat3::identity();
  A.m[1][1] = std::cos(theta);
  A.m[1][2] = -std::sin(theta);
  A.m[2][1] = std::sin(theta);
  A.m[2][2] = std::cos(theta);
  return A;
}

}  // namespace lightlike
