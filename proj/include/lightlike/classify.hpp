#pragma once

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "lightlike/frames.hpp"
#include "lightlike/minkowski.hpp"
#include "lightlike/surface.hpp"

namespace lightlike {

// Point of a moving frame field along a surface.
struct FramePoint {
  MVector x;
  MVector e0, e1, e2;
};

using FrameField = std::function<FramePoint(double, double)>;

struct ClassifyOptions {
  double fd_step = 2e-3;
  double tol_plane = 1e-5;       // max |a1| below which the surface is planar
  double tol_cone = 1e-5;        // max |a2| below which the surface is conical
  double tol_degenerate = 1e-4;  // relative |det g| above which it is not lightlike
  int nu = 21;
  int nv = 21;
  bool compute_a5 = true;
};

struct Metric2 {
  double E = 0, F = 0, G = 0;
  double xu_norm = 0, xv_norm = 0, cross_norm = 0;  // Euclidean diagnostics

  double det() const { return E * G - F * F; }
  double trace() const { return E + G; }
  // |det| scaled by the squared size of the metric entries.
  double rel_degeneracy() const;
};

// First fundamental form by centered differences with step h.
Metric2 induced_metric(const SurfaceModel& S, double u, double v, double h);

// Smooth 0-adapted frame field built from the sampler: e0 spans the numerical
// kernel of the induced metric (scale and sign fixed against a reference null
// covector chosen at the domain center), e1 is a fixed tangent combination
// normalized to unit length, e2 completes the frame. Throws if the surface is
// not lightlike/regular at the probed points.
FrameField adapted_frame_field(const SurfaceModel& S, double fd_step);

// Frame field from the model's analytic frame (NonConical / Plane / Cone).
FrameField analytic_frame_field(const SurfaceModel& S);

// Pointwise structure-group action with smooth parameter functions.
FrameField gauge_transformed_field(FrameField base,
                                   std::function<double(double, double)> mu,
                                   std::function<double(double, double)> lambda);

// Values of the Maurer-Cartan forms on (du, dv), computed by centered
// differences of the frame field. Index order: w0, w1, w2, w00, w10, w01.
struct FormValues {
  double P[6] = {0, 0, 0, 0, 0, 0};  // du-coefficients
  double Q[6] = {0, 0, 0, 0, 0, 0};  // dv-coefficients
};

enum class ConnectionForm { W0 = 0, W1 = 1, W2 = 2, W00 = 3, W10 = 4, W01 = 5 };

FormValues connection_forms(const FrameField& field, double u, double v, double h);

// Single coefficient: the value of the chosen form on du (direction = 0) or
// dv (direction = 1).
double connection_coefficient(const FrameField& field, ConnectionForm which, double u,
                              double v, int direction, double h);

// Layered extraction of the local invariants from a 0-adapted frame field.
// Each level differentiates the previous one by centered differences. The
// frame-level forms use fd_step; derivatives of already-measured invariants
// (levels 3-5) use the coarser invariant_step, since each such level divides
// the measurement noise of the previous one by the step. invariant_step = 0
// picks 16 * fd_step.
class InvariantEngine {
 public:
  InvariantEngine(FrameField field, double fd_step, double invariant_step = 0.0);

  // Largest offset from (u, v) probed by the deepest query (five-point
  // stencils reach +-2 steps at each of the stacked levels).
  double stencil_reach() const { return 6.0 * hd_ + 4.0 * h_; }

  double a1(double u, double v);
  double a2(double u, double v);
  double a3(double u, double v);
  double a4(double u, double v);
  double a5(double u, double v);
  double f_recovered(double u, double v);

  // Coefficient of d(a2) on the 2-adapted w^0 (should equal -2 a2) and of
  // d(a4) (should equal a2^2 - 2 a4); exposed for structure diagnostics.
  double da2_w0_coefficient(double u, double v);
  double da4_w0_coefficient(double u, double v);
  // 2-adapted dual forms at a point (used for canonical-coordinate recovery).
  void canonical_coframe(double u, double v, double w0[2], double w1[2]);

  double fd_step() const { return h_; }

 private:
  struct Level1 {  // measured on the raw 0-adapted field
    FormValues forms;
    double a1 = 0;
  };
  struct Level2 {  // after rescaling to a1 = 1
    double w0[2], w1[2], w00[2], w10[2], w01[2];
    double a2 = 0;
  };
  struct Level3 {
    double a3 = 0;
    double lambda = 0;  // a3 / (2 a2)
    double da2_w0 = 0;
  };
  struct Level4 {  // 2-adapted
    double w0[2], w1[2], w01[2];
    double a2 = 0, a4 = 0;
  };

  struct Level5 {
    double a5 = 0;
    double da4_w0 = 0;
  };

  struct UVKey {
    double u, v;
    bool operator==(const UVKey&) const = default;
  };
  struct UVKeyHash {
    std::size_t operator()(const UVKey& k) const;
  };

  const Level1& level1(double u, double v);
  const Level2& level2(double u, double v);
  const Level3& level3(double u, double v);
  const Level4& level4(double u, double v);
  const Level5& level5(double u, double v);

  FrameField field_;
  double h_;
  double hd_;
  std::unordered_map<UVKey, Level1, UVKeyHash> c1_;
  std::unordered_map<UVKey, Level2, UVKeyHash> c2_;
  std::unordered_map<UVKey, Level3, UVKeyHash> c3_;
  std::unordered_map<UVKey, Level4, UVKeyHash> c4_;
  std::unordered_map<UVKey, Level5, UVKeyHash> c5_;
};

enum class Verdict { Plane, Cone, NonConical, NotLightlike, MixedType };
const char* to_string(Verdict v);

struct PointInvariants {
  double u = 0, v = 0;
  double det_g = 0, rel_degeneracy = 0;
  double frame_violation = 0;  // verify_frame residual of the FD frame
  double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0;
  double f_rec = 0, u_canonical = 0;
};

struct InvariantReport {
  Verdict verdict = Verdict::NotLightlike;
  ClassifyOptions options;
  std::vector<PointInvariants> points;  // row-major, v fastest
  int nu = 0, nv = 0;

  MVector vertex;             // Cone only
  double vertex_spread = 0;   // max deviation of the per-point vertex estimates

  // (v, f_rec, v_canonical) along the center u-row; NonConical only.
  struct FSample {
    double v = 0, f = 0, v_canonical = 0;
  };
  std::vector<FSample> f_table;

  double max_rel_degeneracy = 0;
  double max_frame_violation = 0;
  double max_abs_a1 = 0, min_abs_a1 = 0;
  double max_abs_a2 = 0, min_abs_a2 = 0;
  double max_da2_defect = 0;  // |da2 coefficient + 2 a2|
  double max_da4_defect = 0;  // |da4 coefficient - (a2^2 - 2 a4)|
};

// Full reduction over an evenly spaced grid inset from the domain boundary
// (so that all nested difference stencils stay inside the domain).
InvariantReport compute_invariants(const SurfaceModel& S, const ClassifyOptions& opts = {});

Verdict classify(const SurfaceModel& S, const ClassifyOptions& opts = {});

// Vertex of a conical surface from the 1-adapted frame: p = x - e0 / a1.
MVector cone_vertex(const SurfaceModel& S, const ClassifyOptions& opts,
                    double* max_spread = nullptr);

struct StructureResiduals {
  // One entry per structure equation, same order as ConnectionForm.
  double d_omega[6] = {0, 0, 0, 0, 0, 0};
  double max_residual() const;
};

// Finite-difference residuals of the Maurer-Cartan structure equations for a
// frame field, sampled on an inset grid of the given domain.
StructureResiduals verify_structure_equations(const FrameField& field, const Domain& domain,
                                              int nu, int nv, double h);

struct RuledReport {
  double max_line_deviation = 0;  // Euclidean point-to-line distance
  double max_null_defect = 0;     // |<d,d>| of the unit ruling direction
};

// Collinearity and nullity of the u-parameter curves.
RuledReport check_ruled(const SurfaceModel& S, int nu = 9, int nv = 21);

}  // namespace lightlike
