#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lightlike/cubic_spline.hpp"

namespace lightlike {

// The free function f(v) determining a non-conical lightlike surface.
class ProfileFunction {
 public:
  enum class Kind { Constant, Identity, Sinusoid, Table };

  static ProfileFunction constant(double k);
  static ProfileFunction identity();  // f(v) = v
  static ProfileFunction sinusoid(double amplitude = 1.0, double frequency = 1.0,
                                  double phase = 0.0);
  static ProfileFunction table(std::vector<double> v, std::vector<double> f);

  // Grammar: const:<k> | id | sin[:amp[:freq[:phase]]] | table:<path>.
  // A table file holds one "v f" or "v,f" pair per line, v strictly increasing.
  static ProfileFunction parse(const std::string& spec);

  double operator()(double v) const;
  // df/dv; analytic except for Table, which uses centered differences on the
  // table grid.
  double derivative(double v) const;

  Kind kind() const { return kind_; }
  const std::string& spec() const { return spec_; }

 private:
  ProfileFunction() = default;

  Kind kind_ = Kind::Constant;
  double k_ = 0.0;                       // Constant
  double amp_ = 1.0, freq_ = 1.0, phase_ = 0.0;  // Sinusoid
  std::shared_ptr<const CubicSpline> table_;     // Table: f
  std::shared_ptr<const CubicSpline> table_df_;  // Table: centered-difference f'
  std::string spec_;
};

}  // namespace lightlike
