#pragma once

#include <vector>

namespace lightlike {

// Natural cubic spline through (x_i, y_i), x strictly increasing.
// Evaluation outside the knot range extrapolates the boundary cubic.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  bool empty() const { return x_.empty(); }
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_, y_, y2_;  // y2_: second derivatives at knots
};

}  // namespace lightlike
