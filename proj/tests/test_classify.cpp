#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lightlike/classify.hpp"
#include "lightlike/surface.hpp"

using namespace lightlike;

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
const Domain kBox{-1, 1, -1, 1};

SurfaceModel canonical(const char* spec) {
  return make_nonconical(ProfileFunction::parse(spec), kBox);
}

ClassifyOptions small_grid(bool with_a5 = false) {
  ClassifyOptions o;
  o.nu = 9;
  o.nv = 9;
  o.compute_a5 = with_a5;
  return o;
}

bool collinear(const MVector& a, const MVector& b, double tol) {
  const MVector cr{a.x1 * b.x2 - a.x2 * b.x1, a.x2 * b.x0 - a.x0 * b.x2,
                   a.x0 * b.x1 - a.x1 * b.x0};
  return cr.euclid_norm() < tol * a.euclid_norm() * b.euclid_norm();
}
}  // namespace

TEST_CASE("induced metric on the reference surfaces") {
  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  const SurfaceModel P = make_plane({0, 0, 0}, n, {0, 0, 1}, kBox);
  const Metric2 mp = induced_metric(P, 0.2, -0.3, 1e-3);
  CHECK(std::abs(mp.E) < 1e-12);
  CHECK(std::abs(mp.F) < 1e-12);
  CHECK(mp.G == doctest::Approx(1.0).epsilon(1e-10));

  const SurfaceModel C = make_cone({0, 0, 0}, kBox);
  const Metric2 mc = induced_metric(C, 0.4, 0.7, 1e-3);
  CHECK(std::abs(mc.E) < 1e-10);
  CHECK(mc.rel_degeneracy() < 1e-10);

  const Metric2 mn = induced_metric(canonical("const:0"), 0.0, 0.0, 1e-3);
  CHECK(std::abs(mn.det()) < 1e-8);
  CHECK(mn.trace() > 0.1);  // rank 1, not rank 0
}

TEST_CASE("adapted frame field picks the null direction") {
  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  const SurfaceModel P = make_plane({0, 0, 0}, n, {0, 0, 1}, kBox);
  const FrameField fp = adapted_frame_field(P, 1e-3);
  const FramePoint a = fp(0.1, 0.2);
  CHECK(collinear(a.e0, n, 1e-8));
  CHECK(verify_frame({a.e0, a.e1, a.e2, AdaptationLevel::Zero}).max_violation() < 1e-8);

  const SurfaceModel C = make_cone({0, 0, 0}, kBox);
  const FrameField fc = adapted_frame_field(C, 1e-3);
  const FramePoint b = fc(0.3, 0.5);
  CHECK(collinear(b.e0, {1.0, std::cos(0.5), std::sin(0.5)}, 1e-6));

  // The gauge is fixed at the domain center, so a non-lightlike surface is
  // rejected already at construction.
  CHECK_THROWS(adapted_frame_field(make_spacelike_graph(kBox), 1e-3));
}

TEST_CASE("connection coefficients in canonical coordinates") {
  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  const FrameField plane =
      analytic_frame_field(make_plane({0, 0, 0}, n, {0, 0, 1}, kBox));
  for (int k = 3; k < 6; ++k)
    for (int dir = 0; dir < 2; ++dir)
      CHECK(std::abs(connection_coefficient(plane, static_cast<ConnectionForm>(k), 0.1,
                                            0.2, dir, 1e-3)) < 1e-10);

  const FrameField field = analytic_frame_field(canonical("const:1"));
  for (double u : {-0.5, 0.0, 0.5}) {
    CHECK(std::abs(connection_coefficient(field, ConnectionForm::W1, u, 0.2, 1, 1e-3) -
                   std::exp(u)) < 2e-5);
    CHECK(std::abs(connection_coefficient(field, ConnectionForm::W0, u, 0.2, 0, 1e-3) -
                   1.0) < 2e-5);
    CHECK(std::abs(connection_coefficient(field, ConnectionForm::W2, u, 0.2, 0, 1e-3)) < 2e-5);
  }
}

TEST_CASE("classifier trichotomy on reference surfaces") {
  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  const SurfaceModel P = make_plane({0.5, -1, 2}, n, {0, 0, 1}, kBox);
  const InvariantReport rp = compute_invariants(P, small_grid());
  CHECK(rp.verdict == Verdict::Plane);
  CHECK(rp.max_abs_a1 < 1e-6);

  const SurfaceModel C = make_cone({1, 2, 3}, kBox);
  const InvariantReport rc = compute_invariants(C, small_grid());
  REQUIRE(rc.verdict == Verdict::Cone);
  CHECK(rc.max_abs_a2 < 1e-6);
  CHECK((rc.vertex - MVector{1, 2, 3}).inf_norm() < 1e-6);
  CHECK(rc.vertex_spread < 1e-6);

  CHECK(classify(make_spacelike_graph(kBox), small_grid()) == Verdict::NotLightlike);
}

TEST_CASE("cone vertex transforms with the surface") {
  const Isometry T = Isometry::make(boost_x1(0.6) * rotation_x1x2(0.9), {-1, 0.5, 2});
  const SurfaceModel C = transformed(make_cone({1, 2, 3}, kBox), T);
  double spread = 0.0;
  const MVector p = cone_vertex(C, small_grid(), &spread);
  const MVector expected = T.A * MVector{1, 2, 3} + T.b;
  CHECK((p - expected).inf_norm() < 1e-6);
  CHECK(spread < 1e-5);
}

TEST_CASE("non-conical invariants match the normal form") {
  const InvariantReport r = compute_invariants(canonical("const:0"), small_grid(true));
  REQUIRE(r.verdict == Verdict::NonConical);
  for (const PointInvariants& p : r.points) {
    CHECK(std::abs(p.a2 - std::exp(-2.0 * p.u)) < 1e-4);
    CHECK(std::abs(p.f_rec) < 1e-3);
    CHECK(std::abs(p.u_canonical - p.u) < 1e-4);
  }
  CHECK(r.max_da2_defect < 1e-3);
  CHECK(r.max_da4_defect < 1e-2);
  // Center-row table: canonical v equals the sampler v for generated surfaces.
  for (const auto& s : r.f_table) CHECK(std::abs(s.v_canonical - s.v) < 1e-3);
}

TEST_CASE("recovered profile for f = sin v") {
  const InvariantReport r = compute_invariants(canonical("sin"), small_grid());
  REQUIRE(r.verdict == Verdict::NonConical);
  for (const PointInvariants& p : r.points)
    CHECK(std::abs(p.f_rec - std::sin(p.v)) < 1e-3);
}

TEST_CASE("constant profile survives reparametrization") {
  const SurfaceModel R = reparametrize(canonical("const:1"), 0.3, 0.1);
  const InvariantReport r = compute_invariants(R, small_grid());
  REQUIRE(r.verdict == Verdict::NonConical);
  for (const PointInvariants& p : r.points) {
    CHECK(std::abs(p.f_rec - 1.0) < 1e-3);
    // u-gauge shifted: a2 tracks the canonical u = u_sampler + r.
    CHECK(std::abs(p.u_canonical - (p.u + 0.3)) < 1e-3);
  }
}

TEST_CASE("relative invariant law under smooth gauges") {
  const FrameField base = analytic_frame_field(canonical("const:1"));
  auto mu = [](double u, double v) { return 1.3 + 0.2 * std::sin(u + 2 * v); };
  auto lambda = [](double u, double v) { return 0.4 * std::cos(u - v); };
  const FrameField gauged = gauge_transformed_field(base, mu, lambda);

  InvariantEngine plain(base, 1e-3), twisted(gauged, 1e-3);
  for (double u : {-0.4, 0.1, 0.5})
    for (double v : {-0.3, 0.4}) {
      const double ratio = twisted.a1(u, v) / plain.a1(u, v);
      CHECK(std::abs(ratio - mu(u, v)) < 1e-3);
      // a2 is a genuine invariant.
      CHECK(std::abs(twisted.a2(u, v) - plain.a2(u, v)) < 1e-4);
      CHECK(std::abs(plain.a2(u, v) - std::exp(-2.0 * u)) < 1e-4);
    }
}

TEST_CASE("structure equation residuals") {
  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  const FrameField plane =
      analytic_frame_field(make_plane({0, 0, 0}, n, {0, 0, 1}, kBox));
  CHECK(verify_structure_equations(plane, kBox, 5, 5, 1e-3).max_residual() < 1e-10);

  const SurfaceModel S = canonical("const:1");
  const FrameField field = analytic_frame_field(S);
  const double r1 = verify_structure_equations(field, S.domain(), 7, 7, 1e-3).max_residual();
  const double r2 =
      verify_structure_equations(field, S.domain(), 7, 7, 5e-4).max_residual();
  CHECK(r1 < 1e-4);
  CHECK(r2 < r1);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.5));  // second-order convergence

  auto mu = [](double u, double v) { return 1.2 + 0.3 * std::sin(u - v); };
  auto lambda = [](double u, double v) { return 0.3 * std::cos(2 * u + v); };
  const FrameField gauged = gauge_transformed_field(field, mu, lambda);
  CHECK(verify_structure_equations(gauged, S.domain(), 7, 7, 1e-3).max_residual() < 1e-4);
}

TEST_CASE("null ruling of the generated surfaces") {
  for (const char* spec : {"const:0", "sin"}) {
    const RuledReport r = check_ruled(canonical(spec));
    CHECK(r.max_line_deviation < 1e-9);
    CHECK(r.max_null_defect < 1e-8);
  }
  CHECK(check_ruled(make_cone({0, 0, 0}, kBox)).max_line_deviation < 1e-9);
  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  CHECK(check_ruled(make_plane({0, 0, 0}, n, {0, 0, 1}, kBox)).max_null_defect < 1e-12);
}
