#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lightlike/surface.hpp"

using namespace lightlike;

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
const Domain kBox{-1, 1, -1, 1};

SurfaceModel canonical(const char* spec) {
  return make_nonconical(ProfileFunction::parse(spec), kBox);
}
}  // namespace

TEST_CASE("closed-form examples at reference points") {
  CHECK(closed_form_example(ClosedFormId::FZero, 0, 0).inf_norm() < 1e-15);
  CHECK(closed_form_example(ClosedFormId::FOne, 0, 0).inf_norm() < 1e-14);
  CHECK(closed_form_example(ClosedFormId::FMinusOne, 0, 0).inf_norm() < 1e-14);

  const MVector p = closed_form_example(ClosedFormId::FZero, 0, 1);
  CHECK(std::abs(p.x0) < 1e-15);
  CHECK(p.x1 == doctest::Approx(-kSqrt2 / 3.0).epsilon(1e-14));
  CHECK(p.x2 == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("generated surface initial data") {
  const SurfaceModel S = canonical("const:0");
  CHECK(S.sample(0, 0).inf_norm() == 0.0);

  // x_u(0,0) = e0 of the standard frame.
  const double h = 1e-5;
  const MVector xu = (S.sample(h, 0) - S.sample(-h, 0)) / (2 * h);
  CHECK((xu - MVector{1 / kSqrt2, 1 / kSqrt2, 0}).inf_norm() < 1e-9);

  const AdaptedFrame F = S.frame(0, 0);
  const AdaptedFrame Fs = standard_frame();
  CHECK((F.e0 - Fs.e0).inf_norm() < 1e-12);
  CHECK((F.e1 - Fs.e1).inf_norm() < 1e-12);
  CHECK((F.e2 - Fs.e2).inf_norm() < 1e-12);
  CHECK(F.level == AdaptationLevel::Two);

  const MVector q = S.sample(0, 1);
  CHECK(std::abs(q.x0) < 1e-10);
  CHECK(q.x1 == doctest::Approx(-kSqrt2 / 3.0).epsilon(1e-10));
  CHECK(q.x2 == doctest::Approx(5.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("generated surfaces reproduce the closed forms") {
  const struct {
    const char* spec;
    ClosedFormId id;
  } cases[] = {{"const:0", ClosedFormId::FZero},
               {"const:1", ClosedFormId::FOne},
               {"const:-1", ClosedFormId::FMinusOne}};
  for (const auto& c : cases) {
    const SurfaceModel S = canonical(c.spec);
    double worst = 0.0;
    for (int i = 0; i < 41; ++i)
      for (int j = 0; j < 41; ++j) {
        const double u = -1.0 + 2.0 * i / 40, v = -1.0 + 2.0 * j / 40;
        worst = std::max(worst,
                         (S.sample(u, v) - closed_form_example(c.id, u, v)).inf_norm());
      }
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("frame field relations across the grid") {
  for (const char* spec : {"const:0", "const:1", "const:-1", "id", "sin"}) {
    const SurfaceModel S = canonical(spec);
    double worst = 0.0, e0_null = 0.0;
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j) {
        const double u = -1.0 + 2.0 * i / 20, v = -1.0 + 2.0 * j / 20;
        const AdaptedFrame F = S.frame(u, v);
        worst = std::max(worst, verify_frame(F).max_violation());
        e0_null = std::max(e0_null, std::abs(inner(F.e0, F.e0)));
      }
    CHECK(worst < 1e-7);
    CHECK(e0_null < 1e-8);
  }
}

TEST_CASE("plane and cone reference surfaces") {
  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  const SurfaceModel P = make_plane({0, 0, 0}, n, {0, 0, 1}, kBox);
  const double h = 1e-4;
  const MVector xu = (P.sample(h, 0.3) - P.sample(-h, 0.3)) / (2 * h);
  const MVector xv = (P.sample(0.3, h) - P.sample(0.3, -h)) / (2 * h);
  CHECK(std::abs(inner(xu, xu)) < 1e-12);
  CHECK(std::abs(inner(xu, xv)) < 1e-12);
  CHECK(inner(xv, xv) == doctest::Approx(1.0).epsilon(1e-12));

  const SurfaceModel C = make_cone({0, 0, 0}, kBox);
  for (double s : {-1.0, 0.0, 1.0})
    for (double v : {-1.0, 0.5}) {
      const MVector x = C.sample(s, v);
      CHECK(std::abs(inner(x, x)) < 1e-12);
    }
  CHECK(verify_frame(C.frame(0.2, -0.4)).pass(1e-12));

  CHECK_THROWS_AS(make_plane({0, 0, 0}, {1, 0, 0}, {0, 0, 1}, kBox), std::invalid_argument);
  CHECK_THROWS_AS(make_plane({0, 0, 0}, n, {0, 0, 2}, kBox), std::invalid_argument);
  CHECK_THROWS_AS(make_plane({0, 0, 0}, n, {1 / kSqrt2, 1 / kSqrt2, 0}, kBox),
                  std::invalid_argument);
}

TEST_CASE("reparametrization preserves the point set") {
  const SurfaceModel S = canonical("const:1");
  const SurfaceModel R0 = reparametrize(S, 0.0, 0.0);
  CHECK((R0.sample(0.3, -0.4) - S.sample(0.3, -0.4)).inf_norm() < 1e-15);

  const double r = 0.3, s = 0.1;
  const SurfaceModel R = reparametrize(S, r, s);
  for (double u : {-0.5, 0.2})
    for (double v : {-0.3, 0.4}) {
      const MVector a = R.sample(u, v);
      const MVector b = S.sample(u + r, v * std::exp(-r) + s);
      CHECK((a - b).inf_norm() < 1e-15);
    }
}

TEST_CASE("isometry covariance of sampling and frames") {
  const SurfaceModel S = canonical("sin");
  const Isometry T = Isometry::make(boost_x1(0.4) * rotation_x1x2(1.1), {1, -2, 0.5});
  const SurfaceModel TS = transformed(S, T);
  for (double u : {-0.7, 0.0, 0.6})
    for (double v : {-0.8, 0.3}) {
      CHECK((TS.sample(u, v) - (T.A * S.sample(u, v) + T.b)).inf_norm() < 1e-12);
      const AdaptedFrame F = TS.frame(u, v);
      CHECK(verify_frame(F).max_violation() < 1e-7);
    }
  Mat3 bad = Mat3::identity();
  bad.m[1][1] = 2.0;
  CHECK_THROWS_AS(transformed(S, {bad, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(make_nonconical(ProfileFunction::constant(0.0), {1, 2, 1, 2}),
                  std::invalid_argument);
}
