#pragma once

#include <cmath>
#include <stdexcept>

namespace lightlike {

// Point/vector of R^{2,1}; the timelike coordinate is x0, signature (-,+,+).
struct MVector {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  double& operator[](int i) { return i == 0 ? x0 : (i == 1 ? x1 : x2); }
  double operator[](int i) const { return i == 0 ? x0 : (i == 1 ? x1 : x2); }

  MVector operator+(const MVector& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  MVector operator-(const MVector& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
  MVector operator-() const { return {-x0, -x1, -x2}; }
  MVector operator*(double s) const { return {x0 * s, x1 * s, x2 * s}; }
  MVector operator/(double s) const { return {x0 / s, x1 / s, x2 / s}; }
  MVector& operator+=(const MVector& o) { x0 += o.x0; x1 += o.x1; x2 += o.x2; return *this; }
  MVector& operator-=(const MVector& o) { x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; return *this; }

  double inf_norm() const {
    return std::max(std::abs(x0), std::max(std::abs(x1), std::abs(x2)));
  }
  double euclid_norm() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2); }
  bool finite() const {
    return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2);
  }
};

inline MVector operator*(double s, const MVector& v) { return v * s; }

// The indefinite inner product -v0*w0 + v1*w1 + v2*w2.
inline double inner(const MVector& v, const MVector& w) {
  return -v.x0 * w.x0 + v.x1 * w.x1 + v.x2 * w.x2;
}

inline double euclid_dot(const MVector& v, const MVector& w) {
  return v.x0 * w.x0 + v.x1 * w.x1 + v.x2 * w.x2;
}

// det[a b c] with the vectors as columns (Euclidean triple product).
inline double triple_product(const MVector& a, const MVector& b, const MVector& c) {
  return a.x0 * (b.x1 * c.x2 - b.x2 * c.x1)
       - a.x1 * (b.x0 * c.x2 - b.x2 * c.x0)
       + a.x2 * (b.x0 * c.x1 - b.x1 * c.x0);
}

enum class CausalClass { Spacelike, Timelike, Null, Zero };

// Causal class with a null band of width tol around <v,v> = 0; the zero
// vector (inf-norm below tol) is classified separately.
inline CausalClass causal_class(const MVector& v, double tol = 1e-9) {
  if (tol <= 0.0) throw std::invalid_argument("causal_class: tol must be positive");
  if (v.inf_norm() < tol) return CausalClass::Zero;
  const double q = inner(v, v);
  if (std::abs(q) < tol) return CausalClass::Null;
  return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

const char* to_string(CausalClass c);

// Small dense 3x3 matrix, row-major.
struct Mat3 {
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }
  static Mat3 diag(double a, double b, double c) {
    Mat3 r;
    r.m[0][0] = a; r.m[1][1] = b; r.m[2][2] = c;
    return r;
  }
  static Mat3 from_columns(const MVector& c0, const MVector& c1, const MVector& c2) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      r.m[i][0] = c0[i];
      r.m[i][1] = c1[i];
      r.m[i][2] = c2[i];
    }
    return r;
  }

  MVector operator*(const MVector& v) const {
    MVector r;
    for (int i = 0; i < 3; ++i)
      r[i] = m[i][0] * v.x0 + m[i][1] * v.x1 + m[i][2] * v.x2;
    return r;
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
  }
  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  // Cramer solve; throws on a numerically singular system.
  MVector solve(const MVector& rhs) const;
};

inline Mat3 minkowski_metric() { return Mat3::diag(-1.0, 1.0, 1.0); }

// Rigid motion of R^{2,1}: x -> A x + b with A in O(2,1).
struct Isometry {
  Mat3 A = Mat3::identity();
  MVector b;

  // Largest entry of A^T eta A - eta.
  double orthogonality_defect() const;

  // Validating factory; throws std::invalid_argument if A is not in O(2,1)
  // within tol.
  static Isometry make(const Mat3& A, const MVector& b, double tol = 1e-9);
};

// Applies T to x after re-checking the O(2,1) constraint.
MVector apply_isometry(const Isometry& T, const MVector& x, double tol = 1e-9);

// Boost of rapidity phi in the x0-x1 plane.
Mat3 boost_x1(double phi);
// Rotation by theta in the x1-x2 (spacelike) plane.
Mat3 rotation_x1x2(double theta);

}  // namespace lightlike
