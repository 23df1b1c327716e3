#pragma once

#include "lightlike/minkowski.hpp"

namespace lightlike {

enum class AdaptationLevel { Zero, One, Two };

// Null frame (e0, e1, e2) with e0 null tangent, e1 unit spacelike tangent,
// e2 null transverse, normalized so <e0,e2> = 1.
struct AdaptedFrame {
  MVector e0, e1, e2;
  AdaptationLevel level = AdaptationLevel::Zero;
};

// The standard frame: e0 = (1,1,0)/sqrt2, e1 = (0,0,1), e2 = (-1,1,0)/sqrt2.
AdaptedFrame standard_frame();

// Residuals of the six inner-product relations of an adapted frame.
struct FrameDiagnostics {
  double e0e0 = 0, e0e1 = 0, e1e2 = 0, e2e2 = 0;  // should vanish
  double e0e2 = 0, e1e1 = 0;                      // deviation from 1
  double det = 0;  // det[e0 e1 e2]; its magnitude is 1 for an exact frame

  double max_violation() const;
  bool pass(double tol) const;
};

FrameDiagnostics verify_frame(const AdaptedFrame& F, double tol = 1e-9);

// Solves <e2,e0> = 1, <e2,e1> = 0, <e2,e2> = 0 for the unique transverse null
// vector in the timelike plane orthogonal to e1. Preconditions: e0 null and
// nonzero, e1 unit spacelike, <e0,e1> = 0, all within tol. Throws
// std::invalid_argument on violation (signals non-lightlike input).
MVector complete_null_frame(const MVector& e0, const MVector& e1, double tol = 1e-6);

// Structure-group element of the 0-adapted frame bundle.
struct GaugeParameters {
  double mu = 1.0;    // nonzero
  double lambda = 0.0;

  // Group law read off from the product of the frame-change matrices:
  // applying g1 then g2 equals applying compose(g1, g2).
  static GaugeParameters compose(const GaugeParameters& g1, const GaugeParameters& g2) {
    return {g1.mu * g2.mu, g1.lambda + g1.mu * g2.lambda};
  }
};

// e0 -> mu e0,  e1 -> e1 + lambda e0,
// e2 -> (1/mu) e2 - (lambda/mu) e1 - (lambda^2 / 2mu) e0.
AdaptedFrame gauge_transform(const AdaptedFrame& F, const GaugeParameters& g);

// Coefficients of w in the frame: w = c0 e0 + c1 e1 + c2 e2.
// From the inner-product relations: c0 = <w,e2>, c1 = <w,e1>, c2 = <w,e0>.
struct FrameCoords {
  double c0 = 0, c1 = 0, c2 = 0;
};

FrameCoords frame_decompose(const MVector& w, const AdaptedFrame& F);

inline MVector frame_reconstruct(const FrameCoords& c, const AdaptedFrame& F) {
  return c.c0 * F.e0 + c.c1 * F.e1 + c.c2 * F.e2;
}

}  // namespace lightlike
