#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lightlike/frames.hpp"
#include "lightlike/minkowski.hpp"
#include "lightlike/profile.hpp"

namespace lightlike {

// Integration blew up (non-finite state); carries the v at which it happened.
struct IntegrationError : std::runtime_error {
  IntegrationError(const std::string& what, double v_at)
      : std::runtime_error(what), v(v_at) {}
  double v;
};

using OdeRhs = std::function<void(double v, const double* y, double* dy)>;

// Fixed-step classical RK4 sweep over [v_lo, v_hi] (which must contain 0;
// integration runs outward from 0 in both directions so the initial data sit
// exactly on a node). Dense output is cubic Hermite per step, using the
// stored right-hand-side values at the nodes.
class DenseTrajectory {
 public:
  DenseTrajectory() = default;

  static DenseTrajectory integrate(const OdeRhs& rhs, std::span<const double> y0,
                                   double v_lo, double v_hi, double step);

  // Wraps externally computed node samples (states and derivatives) in the
  // same dense-output representation.
  static DenseTrajectory from_samples(std::size_t dim, std::vector<double> nodes,
                                      std::vector<double> y, std::vector<double> yp);

  std::size_t dim() const { return dim_; }
  const std::vector<double>& nodes() const { return nodes_; }

  void eval(double v, double* out) const;
  double component(double v, std::size_t i) const;
  // State at the node nearest to nodes()[i].
  const double* node_state(std::size_t i) const { return &y_[i * dim_]; }
  const double* node_derivative(std::size_t i) const { return &yp_[i * dim_]; }

 private:
  std::size_t locate(double v) const;

  std::size_t dim_ = 0;
  std::vector<double> nodes_;  // ascending
  std::vector<double> y_;      // nodes x dim, row-major
  std::vector<double> yp_;     // rhs at nodes
};

// Fundamental pair of the Sturm-Liouville equation h'' = f(v) h / 2 with
// h1(0)=1, h1'(0)=0, h2(0)=0, h2'(0)=1, plus the running integrals of
// h1^2, h1 h2, h2^2 (used to assemble antiderivatives of squared solutions).
struct SLBasis {
  DenseTrajectory traj;  // state: (h1, h1', h2, h2', I11, I12, I22)

  double h1(double v) const { return traj.component(v, 0); }
  double h1p(double v) const { return traj.component(v, 1); }
  double h2(double v) const { return traj.component(v, 2); }
  double h2p(double v) const { return traj.component(v, 3); }

  // max |h1 h2' - h2 h1' - 1| over the nodes.
  double wronskian_drift() const;
};

SLBasis solve_sl_basis(const ProfileFunction& f, double v_lo, double v_hi, double step);

// Single Sturm-Liouville solution with prescribed h(0), h'(0).
struct SLSolution {
  DenseTrajectory traj;  // state: (h, h')
  double h(double v) const { return traj.component(v, 0); }
  double hp(double v) const { return traj.component(v, 1); }
};

SLSolution solve_sturm_liouville(const ProfileFunction& f, double v_lo, double v_hi,
                                 double h0, double hp0, double step);

// The R^{2,1}-valued coefficient functions of the canonical frame field,
// G0' = G1, G1' = f G0 - G2, G2' = -f G1, together with the running
// integral I(v) = \int_0^v G0.
class FrameCoefficients {
 public:
  FrameCoefficients(ProfileFunction f, DenseTrajectory traj)
      : f_(std::move(f)), traj_(std::move(traj)) {}

  MVector G0(double v) const { return vec(v, 0); }
  MVector G1(double v) const { return vec(v, 3); }
  MVector G2(double v) const { return vec(v, 6); }
  MVector I(double v) const { return vec(v, 9); }

  const ProfileFunction& profile() const { return f_; }
  const DenseTrajectory& trajectory() const { return traj_; }
  double v_min() const { return traj_.nodes().front(); }
  double v_max() const { return traj_.nodes().back(); }

  // max drift over the nodes of the six conserved inner products among
  // (G0, G1, G2) fixed by the frame relations at u = 0.
  double frame_relation_drift() const;

 private:
  MVector vec(double v, std::size_t base) const {
    return {traj_.component(v, base), traj_.component(v, base + 1), traj_.component(v, base + 2)};
  }

  ProfileFunction f_;
  DenseTrajectory traj_;
};

// Initial data of the canonical surface: G0(0), G0'(0), G0''(0) chosen so
// that x(0,0) = 0 and the frame there is the standard frame.
struct CanonicalInitialData {
  MVector G0, G0p, G0pp;
  MVector G1() const { return G0p; }
  MVector G2(double f0) const { return f0 * G0 - G0pp; }
};

CanonicalInitialData canonical_initial_data(double f0);

FrameCoefficients integrate_frame_coefficients(const ProfileFunction& f, double v_lo,
                                               double v_hi, const MVector& G0_0,
                                               const MVector& G1_0, const MVector& G2_0,
                                               double step);

// Same coefficients built from the squared Sturm-Liouville basis
// (h1^2, h1 h2, h2^2); each component's combination is solved from the
// initial values of (G0, G0', G0'') at v = 0.
FrameCoefficients build_G0_via_sl(const ProfileFunction& f, double v_lo, double v_hi,
                                  const MVector& G0_0, const MVector& G0p_0,
                                  const MVector& G0pp_0, double step);

// max componentwise difference of (G0, G1, G2, I) between two coefficient
// sets, over the node grid of `a`.
double max_coefficient_difference(const FrameCoefficients& a, const FrameCoefficients& b);

// max_i || G0''' - 2 f G0' - f' G0 ||_inf on interior nodes, with G0''
// taken from the identity f G0 - G2 and G0''' from a 5-point stencil on it.
double third_order_residual(const FrameCoefficients& G, const ProfileFunction& f);

}  // namespace lightlike
