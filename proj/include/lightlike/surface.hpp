#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "lightlike/frames.hpp"
#include "lightlike/minkowski.hpp"
#include "lightlike/ode.hpp"
#include "lightlike/profile.hpp"

namespace lightlike {

struct Domain {
  double u_min = -1.0, u_max = 1.0;
  double v_min = -1.0, v_max = 1.0;

  bool contains(double u, double v) const {
    return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
  }
  double u_span() const { return u_max - u_min; }
  double v_span() const { return v_max - v_min; }
};

// Parametrized surface (u,v) -> R^{2,1}. Non-conical models additionally
// carry their analytic 2-adapted frame field.
class SurfaceModel {
 public:
  enum class Kind { Plane, Cone, NonConical, ClosedForm, Custom };

  using Sampler = std::function<MVector(double, double)>;
  using FrameSampler = std::function<AdaptedFrame(double, double)>;

  MVector sample(double u, double v) const { return sampler_(u, v); }
  const Domain& domain() const { return domain_; }
  Kind kind() const { return kind_; }

  bool has_frame() const { return static_cast<bool>(frame_); }
  // Analytic frame field; throws std::logic_error for models without one.
  AdaptedFrame frame(double u, double v) const;

  const std::optional<ProfileFunction>& profile() const { return profile_; }
  const std::shared_ptr<const FrameCoefficients>& coefficients() const {
    return coefficients_;
  }
  const std::optional<MVector>& cone_vertex() const { return vertex_; }
  const std::string& description() const { return description_; }

  // Construction helpers; see the factories below.
  SurfaceModel(Kind kind, Domain domain, Sampler sampler, std::string description)
      : kind_(kind), domain_(domain), sampler_(std::move(sampler)),
        description_(std::move(description)) {}

 private:
  friend SurfaceModel make_nonconical(const ProfileFunction&, const Domain&, double);
  friend SurfaceModel make_plane(const MVector&, const MVector&, const MVector&,
                                 const Domain&);
  friend SurfaceModel make_cone(const MVector&, const Domain&);
  friend SurfaceModel transformed(const SurfaceModel&, const Isometry&);
  friend SurfaceModel reparametrize(const SurfaceModel&, double, double);

  Kind kind_;
  Domain domain_;
  Sampler sampler_;
  FrameSampler frame_;
  std::optional<ProfileFunction> profile_;
  std::shared_ptr<const FrameCoefficients> coefficients_;
  std::optional<MVector> vertex_;
  std::string description_;
};

// x(u,v) = e^u G0(v) - \int_0^v G0 - G0(0) with the canonical initial data,
// so x(0,0) = 0 and the frame at (0,0) is the standard frame. The coefficient
// ODEs are integrated over the v-range padded by `v_pad` so finite-difference
// probes near the boundary stay in range.
SurfaceModel make_nonconical(const ProfileFunction& f, const Domain& domain,
                             double ode_step = 1e-3);

// Plane through `point` spanned by a null and a unit spacelike direction
// (mutually orthogonal); throws std::invalid_argument on invalid directions.
SurfaceModel make_plane(const MVector& point, const MVector& null_dir,
                        const MVector& spacelike_dir, const Domain& domain);

// Light cone of vertex p, sampled as x(s,v) = p + e^s (1, cos v, sin v).
SurfaceModel make_cone(const MVector& vertex, const Domain& domain);

enum class ClosedFormId { FZero, FOne, FMinusOne };

std::optional<ClosedFormId> closed_form_id_from_string(const std::string& name);

// Exact evaluation of the printed parametrizations for f = 0, 1, -1.
MVector closed_form_example(ClosedFormId id, double u, double v);

SurfaceModel make_closed_form(ClosedFormId id, const Domain& domain);

// u -> u + r, v -> e^{-r} v + s: same point set, reparametrized sampler.
SurfaceModel reparametrize(const SurfaceModel& S, double r, double s);

// Composition with a Minkowski isometry (frame field transforms linearly).
SurfaceModel transformed(const SurfaceModel& S, const Isometry& T);

// Non-lightlike control surface (a spacelike graph); classification on it
// must report NotLightlike.
SurfaceModel make_spacelike_graph(const Domain& domain);

}  // namespace lightlike
