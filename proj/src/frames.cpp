#include "lightlike/frames.hpp"

#include <cmath>
#include <stdexcept>

namespace lightlike {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

AdaptedFrame standard_frame() {
  AdaptedFrame F;
  F.e0 = {kInvSqrt2, kInvSqrt2, 0.0};
  F.e1 = {0.0, 0.0, 1.0};
  F.e2 = {-kInvSqrt2, kInvSqrt2, 0.0};
  F.level = AdaptationLevel::Two;
  return F;
}

double FrameDiagnostics::max_violation() const {
  double w = std::abs(e0e0);
  w = std::max(w, std::abs(e0e1));
  w = std::max(w, std::abs(e1e2));
  w = std::max(w, std::abs(e2e2));
  w = std::max(w, std::abs(e0e2));
  w = std::max(w, std::abs(e1e1));
  return w;
}

bool FrameDiagnostics::pass(double tol) const {
  // Linear independence comes for free from the inner-product relations
  // (the Gram matrix is nonsingular), but guard the determinant anyway.
  return max_violation() < tol && std::abs(det) > 0.5;
}

FrameDiagnostics verify_frame(const AdaptedFrame& F, double /*tol*/) {
  FrameDiagnostics d;
  d.e0e0 = inner(F.e0, F.e0);
  d.e0e1 = inner(F.e0, F.e1);
  d.e1e2 = inner(F.e1, F.e2);
  d.e2e2 = inner(F.e2, F.e2);
  d.e0e2 = inner(F.e0, F.e2) - 1.0;
  d.e1e1 = inner(F.e1, F.e1) - 1.0;
  d.det = triple_product(F.e0, F.e1, F.e2);
  return d;
}

MVector complete_null_frame(const MVector& e0, const MVector& e1, double tol) {
  if (e0.inf_norm() < tol)
    throw std::invalid_argument("complete_null_frame: e0 is zero");
  const double scale = std::max(1.0, e0.inf_norm() * e0.inf_norm());
  if (std::abs(inner(e0, e0)) > tol * scale)
    throw std::invalid_argument("complete_null_frame: e0 is not null");
  if (std::abs(inner(e1, e1) - 1.0) > tol)
    throw std::invalid_argument("complete_null_frame: e1 is not unit spacelike");
  if (std::abs(inner(e0, e1)) > tol * std::max(1.0, e0.inf_norm()))
    throw std::invalid_argument("complete_null_frame: e0, e1 not orthogonal");

  // Project candidate vectors into the plane orthogonal to e1 and pick the
  // one least parallel to e0 there; the other null direction of that plane
  // is e2 up to scale.
  MVector best;
  double best_pairing = 0.0;
  const MVector candidates[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const MVector& c : candidates) {
    MVector w = c - inner(c, e1) * e1;  // <e1,e1> = 1
    const double p = inner(e0, w);
    if (std::abs(p) > std::abs(best_pairing)) {
      best = w;
      best_pairing = p;
    }
  }
  if (std::abs(best_pairing) < 1e-12)
    throw std::invalid_argument("complete_null_frame: degenerate configuration");

  // e2 = alpha e0 + beta w with <e0,e2> = 1 and <e2,e2> = 0.
  const double beta = 1.0 / best_pairing;
  const double alpha = -inner(best, best) / (2.0 * best_pairing * best_pairing);
  return alpha * e0 + beta * best;
}

AdaptedFrame gauge_transform(const AdaptedFrame& F, const GaugeParameters& g) {
  if (g.mu == 0.0) throw std::invalid_argument("gauge_transform: mu must be nonzero");
  AdaptedFrame R;
  R.e0 = g.mu * F.e0;
  R.e1 = F.e1 + g.lambda * F.e0;
  R.e2 = (1.0 / g.mu) * F.e2 - (g.lambda / g.mu) * F.e1
       - (g.lambda * g.lambda / (2.0 * g.mu)) * F.e0;
  R.level = F.level;
  return R;
}

FrameCoords frame_decompose(const MVector& w, const AdaptedFrame& F) {
  return {inner(w, F.e2), inner(w, F.e1), inner(w, F.e0)};
}

}  // namespace lightlike
