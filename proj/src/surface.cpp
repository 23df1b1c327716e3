#include "lightlike/surface.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lightlike {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kVPad = 0.25;  // integration margin beyond the declared v-range
}

AdaptedFrame SurfaceModel::frame(double u, double v) const {
  if (!frame_) throw std::logic_error("SurfaceModel::frame: no frame field for this model");
  return frame_(u, v);
}

SurfaceModel make_nonconical(const ProfileFunction& f, const Domain& domain,
                             double ode_step) {
  if (!domain.contains(0.0, 0.0))
    throw std::invalid_argument("make_nonconical: domain must contain (0,0)");
  const double v_lo = std::min(domain.v_min - kVPad, 0.0);
  const double v_hi = std::max(domain.v_max + kVPad, 0.0);
  const CanonicalInitialData ic = canonical_initial_data(f(0.0));
  auto coeffs = std::make_shared<const FrameCoefficients>(integrate_frame_coefficients(
      f, v_lo, v_hi, ic.G0, ic.G1(), ic.G2(f(0.0)), ode_step));

  const MVector g0_origin = coeffs->G0(0.0);
  SurfaceModel S(
      SurfaceModel::Kind::NonConical, domain,
      [coeffs, g0_origin](double u, double v) {
        return std::exp(u) * coeffs->G0(v) - coeffs->I(v) - g0_origin;
      },
      "nonconical f=" + f.spec());
  S.frame_ = [coeffs](double u, double v) {
    const double eu = std::exp(u);
    const MVector g0 = coeffs->G0(v), g1 = coeffs->G1(v), g2 = coeffs->G2(v);
    AdaptedFrame F;
    F.e0 = eu * g0;
    F.e1 = -(1.0 / eu) * g0 + g1;
    F.e2 = -0.5 / (eu * eu * eu) * g0 + 1.0 / (eu * eu) * g1 + (1.0 / eu) * g2;
    F.level = AdaptationLevel::Two;
    return F;
  };
  S.profile_ = f;
  S.coefficients_ = coeffs;
  return S;
}

SurfaceModel make_plane(const MVector& point, const MVector& null_dir,
                        const MVector& spacelike_dir, const Domain& domain) {
  const double scale = std::max(1.0, null_dir.inf_norm() * null_dir.inf_norm());
  if (null_dir.inf_norm() < 1e-12 || std::abs(inner(null_dir, null_dir)) > 1e-9 * scale)
    throw std::invalid_argument("make_plane: null direction is not null");
  if (std::abs(inner(spacelike_dir, spacelike_dir) - 1.0) > 1e-9)
    throw std::invalid_argument("make_plane: spacelike direction is not unit");
  if (std::abs(inner(null_dir, spacelike_dir)) > 1e-9 * std::max(1.0, null_dir.inf_norm()))
    throw std::invalid_argument("make_plane: directions are not orthogonal");

  SurfaceModel S(
      SurfaceModel::Kind::Plane, domain,
      [point, null_dir, spacelike_dir](double u, double v) {
        return point + u * null_dir + v * spacelike_dir;
      },
      "plane");
  const AdaptedFrame F{null_dir, spacelike_dir,
                       complete_null_frame(null_dir, spacelike_dir),
                       AdaptationLevel::Zero};
  S.frame_ = [F](double, double) { return F; };
  return S;
}

SurfaceModel make_cone(const MVector& vertex, const Domain& domain) {
  SurfaceModel S(
      SurfaceModel::Kind::Cone, domain,
      [vertex](double s, double v) {
        return vertex + std::exp(s) * MVector{1.0, std::cos(v), std::sin(v)};
      },
      "cone");
  S.frame_ = [](double s, double v) {
    const double es = std::exp(s);
    AdaptedFrame F;
    F.e0 = es * MVector{1.0, std::cos(v), std::sin(v)};
    F.e1 = {0.0, -std::sin(v), std::cos(v)};
    F.e2 = complete_null_frame(F.e0, F.e1);
    F.level = AdaptationLevel::Zero;
    return F;
  };
  S.vertex_ = vertex;
  return S;
}

std::optional<ClosedFormId> closed_form_id_from_string(const std::string& name) {
  if (name == "f0") return ClosedFormId::FZero;
  if (name == "f1") return ClosedFormId::FOne;
  if (name == "fm1") return ClosedFormId::FMinusOne;
  return std::nullopt;
}

MVector closed_form_example(ClosedFormId id, double u, double v) {
  const double eu = std::exp(u);
  switch (id) {
    case ClosedFormId::FZero: {
      return {(eu * (3 * v * v + 4 * v + 4) - (v * v * v + 2 * v * v + 4 * v + 4)) /
                  (4 * kSqrt2),
              (eu * (-3 * v * v + 12 * v + 12) + (v * v * v - 6 * v * v - 12 * v - 12)) /
                  (12 * kSqrt2),
              (eu * (3 * v * v + 6 * v) - (v * v * v + 3 * v * v)) / 6};
    }
    case ClosedFormId::FOne: {
      const double E = std::exp(kSqrt2 * v), Em = std::exp(-kSqrt2 * v);
      return {(E * ((5 * kSqrt2 + 4) * eu - 5 - 2 * kSqrt2) +
               Em * ((5 * kSqrt2 - 4) * eu + 5 - 2 * kSqrt2) + 2 * kSqrt2 * (v - eu - 2)) /
                  16,
              (E * ((kSqrt2 + 4) * eu - 1 - 2 * kSqrt2) +
               Em * ((kSqrt2 - 4) * eu + 1 - 2 * kSqrt2) + 2 * kSqrt2 * (-3 * v + 3 * eu - 2)) /
                  16,
              (E * ((2 * kSqrt2 + 2) * eu - 2 - kSqrt2) +
               Em * ((-2 * kSqrt2 + 2) * eu - 2 + kSqrt2) + 4 * (v - eu + 1)) /
                  8};
    }
    case ClosedFormId::FMinusOne: {
      const double C = std::cos(kSqrt2 * v), Sn = std::sin(kSqrt2 * v);
      return {(kSqrt2 * (2 - eu) * C + (1 + 4 * eu) * Sn - kSqrt2 * (5 * v - 5 * eu + 6)) / 8,
              (kSqrt2 * (2 + 3 * eu) * C + (-3 + 4 * eu) * Sn - kSqrt2 * (v - eu + 6)) / 8,
              ((2 - 2 * eu) * C + kSqrt2 * (1 + 2 * eu) * Sn - (2 * v - 2 * eu + 2)) / 4};
    }
  }
  return {};
}

SurfaceModel make_closed_form(ClosedFormId id, const Domain& domain) {
  return {SurfaceModel::Kind::ClosedForm, domain,
          [id](double u, double v) { return closed_form_example(id, u, v); },
          "closed-form"};
}

SurfaceModel reparametrize(const SurfaceModel& S, double r, double s) {
  const double er = std::exp(r);
  Domain d;
  d.u_min = S.domain().u_min - r;
  d.u_max = S.domain().u_max - r;
  d.v_min = (S.domain().v_min - s) * er;
  d.v_max = (S.domain().v_max - s) * er;

  auto base = S;  // copy keeps the underlying sampler alive
  SurfaceModel R(
      S.kind(), d,
      [base, r, er, s](double u, double v) { return base.sample(u + r, v / er + s); },
      S.description() + " reparametrized");
  if (S.has_frame())
    R.frame_ = [base, r, er, s](double u, double v) { return base.frame(u + r, v / er + s); };
  R.profile_ = S.profile();
  R.coefficients_ = S.coefficients();
  R.vertex_ = S.cone_vertex();
  return R;
}

SurfaceModel transformed(const SurfaceModel& S, const Isometry& T) {
  if (T.orthogonality_defect() > 1e-9)
    throw std::invalid_argument("transformed: invalid isometry");
  auto base = S;
  SurfaceModel R(
      S.kind(), S.domain(),
      [base, T](double u, double v) { return T.A * base.sample(u, v) + T.b; },
      S.description() + " transformed");
  if (S.has_frame()) {
    R.frame_ = [base, T](double u, double v) {
      AdaptedFrame F = base.frame(u, v);
      F.e0 = T.A * F.e0;
      F.e1 = T.A * F.e1;
      F.e2 = T.A * F.e2;
      return F;
    };
  }
  R.profile_ = S.profile();
  R.coefficients_ = S.coefficients();
  if (S.cone_vertex()) R.vertex_ = T.A * (*S.cone_vertex()) + T.b;
  return R;
}

SurfaceModel make_spacelike_graph(const Domain& domain) {
  return {SurfaceModel::Kind::Custom, domain,
          [](double u, double v) {
            return MVector{0.2 * std::sin(u) * std::sin(v), u, v};
          },
          "spacelike graph"};
}

}  // namespace lightlike
