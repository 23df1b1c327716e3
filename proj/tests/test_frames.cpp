#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lightlike/frames.hpp"

using namespace lightlike;

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

std::mt19937 rng(777);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("standard frame passes verification") {
  const FrameDiagnostics d = verify_frame(standard_frame());
  CHECK(d.max_violation() < 1e-15);
  CHECK(d.pass(1e-12));
  CHECK(std::abs(std::abs(d.det) - 1.0) < 1e-15);
}

TEST_CASE("degenerate frames fail verification") {
  CHECK_FALSE(verify_frame({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}).pass(1e-9));
  AdaptedFrame F = standard_frame();
  F.e2 = 2.0 * F.e2;  // <e0,e2> becomes 2
  const FrameDiagnostics d = verify_frame(F);
  CHECK(d.e0e2 == doctest::Approx(1.0));
  CHECK_FALSE(d.pass(1e-9));
}

TEST_CASE("complete_null_frame known solutions") {
  const double r = 1.0 / kSqrt2;
  const MVector a = complete_null_frame({r, r, 0}, {0, 0, 1});
  CHECK((a - MVector{-r, r, 0}).inf_norm() < 1e-14);

  const MVector b = complete_null_frame({1, 1, 0}, {0, 0, 1});
  CHECK((b - MVector{-0.5, 0.5, 0}).inf_norm() < 1e-14);

  const MVector c = complete_null_frame({r, -r, 0}, {0, 0, 1});
  CHECK((c - MVector{-r, -r, 0}).inf_norm() < 1e-14);
}

TEST_CASE("complete_null_frame rejects bad input") {
  CHECK_THROWS_AS(complete_null_frame({0, 0, 0}, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(complete_null_frame({1, 0, 0}, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(complete_null_frame({1, 1, 0}, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("gauge transform examples") {
  const AdaptedFrame F = standard_frame();

  const AdaptedFrame id = gauge_transform(F, {1.0, 0.0});
  CHECK((id.e0 - F.e0).inf_norm() < 1e-15);
  CHECK((id.e1 - F.e1).inf_norm() < 1e-15);
  CHECK((id.e2 - F.e2).inf_norm() < 1e-15);

  const AdaptedFrame sc = gauge_transform(F, {2.0, 0.0});
  CHECK((sc.e0 - 2.0 * F.e0).inf_norm() < 1e-15);
  CHECK((sc.e1 - F.e1).inf_norm() < 1e-15);
  CHECK((sc.e2 - 0.5 * F.e2).inf_norm() < 1e-15);

  const AdaptedFrame sh = gauge_transform(F, {1.0, 1.0});
  CHECK((sh.e1 - (F.e1 + F.e0)).inf_norm() < 1e-15);
  CHECK((sh.e2 - (F.e2 - F.e1 - 0.5 * F.e0)).inf_norm() < 1e-15);
  CHECK(verify_frame(sh).pass(1e-12));

  CHECK_THROWS_AS(gauge_transform(F, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("gauge group law and relation preservation") {
  for (int i = 0; i < 30; ++i) {
    const GaugeParameters g1{uniform(0.2, 3.0), uniform(-2.0, 2.0)};
    const GaugeParameters g2{uniform(0.2, 3.0), uniform(-2.0, 2.0)};
    AdaptedFrame F = gauge_transform(standard_frame(), {uniform(0.3, 2.0), uniform(-1.0, 1.0)});
    REQUIRE(verify_frame(F).pass(1e-10));

    const AdaptedFrame two = gauge_transform(gauge_transform(F, g1), g2);
    const AdaptedFrame one = gauge_transform(F, GaugeParameters::compose(g1, g2));
    CHECK((two.e0 - one.e0).inf_norm() < 1e-10);
    CHECK((two.e1 - one.e1).inf_norm() < 1e-10);
    CHECK((two.e2 - one.e2).inf_norm() < 1e-10);
    CHECK(verify_frame(two).pass(1e-9));
  }
}

TEST_CASE("frame decomposition") {
  const AdaptedFrame F = standard_frame();
  const FrameCoords c0 = frame_decompose(F.e0, F);
  CHECK(c0.c0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(c0.c1) < 1e-12);
  CHECK(std::abs(c0.c2) < 1e-12);

  const MVector w = F.e0 + 2.0 * F.e1 + 3.0 * F.e2;
  const FrameCoords c = frame_decompose(w, F);
  CHECK(c.c0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.c1 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c.c2 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("decompose/reconstruct round trip vs direct linear solve") {
  for (int i = 0; i < 30; ++i) {
    const AdaptedFrame F =
        gauge_transform(standard_frame(), {uniform(0.3, 2.0), uniform(-1.5, 1.5)});
    const MVector w{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
    const FrameCoords c = frame_decompose(w, F);
    CHECK((frame_reconstruct(c, F) - w).inf_norm() < 1e-10);

    const MVector direct = Mat3::from_columns(F.e0, F.e1, F.e2).solve(w);
    CHECK(std::abs(direct.x0 - c.c0) < 1e-10);
    CHECK(std::abs(direct.x1 - c.c1) < 1e-10);
    CHECK(std::abs(direct.x2 - c.c2) < 1e-10);
  }
}
