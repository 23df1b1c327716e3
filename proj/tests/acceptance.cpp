// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Criteria mirror the documented guarantees of the library.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lightlike/classify.hpp"
#include "lightlike/ode.hpp"
#include "lightlike/surface.hpp"

using namespace lightlike;

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
const Domain kBox{-1, 1, -1, 1};
const char* kProfiles[] = {"const:0", "const:1", "const:-1", "id", "sin"};

int g_failures = 0;

void report(int index, bool ok, const std::string& what) {
  std::printf("%s  %2d. %s\n", ok ? "PASS" : "FAIL", index, what.c_str());
  if (!ok) ++g_failures;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

SurfaceModel canonical(const char* spec) {
  return make_nonconical(ProfileFunction::parse(spec), kBox);
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

ClassifyOptions grid9(bool with_a5 = false) {
  ClassifyOptions o;
  o.nu = 9;
  o.nv = 9;
  o.compute_a5 = with_a5;
  return o;
}

void criterion_closed_forms() {
  const struct {
    const char* spec;
    ClosedFormId id;
  } cases[] = {{"const:0", ClosedFormId::FZero},
               {"const:1", ClosedFormId::FOne},
               {"const:-1", ClosedFormId::FMinusOne}};
  double worst = 0.0, slowest = 0.0;
  for (const auto& c : cases) {
    const double t0 = now_seconds();
    const SurfaceModel S = canonical(c.spec);
    for (int i = 0; i < 41; ++i)
      for (int j = 0; j < 41; ++j) {
        const double u = -1.0 + 2.0 * i / 40, v = -1.0 + 2.0 * j / 40;
        worst =
            std::max(worst, (S.sample(u, v) - closed_form_example(c.id, u, v)).inf_norm());
      }
    slowest = std::max(slowest, now_seconds() - t0);
  }
  report(1, worst < 1e-7 && slowest < 1.0,
         "closed-form reproduction for f in {0,1,-1}: max error " + num(worst) + ", max " +
             num(slowest) + " s per surface");
}

void criterion_initial_data() {
  const SurfaceModel S = canonical("const:1");
  const double origin = S.sample(0, 0).inf_norm();
  const AdaptedFrame F = S.frame(0, 0), Fs = standard_frame();
  const double frame_err = std::max({(F.e0 - Fs.e0).inf_norm(), (F.e1 - Fs.e1).inf_norm(),
                                     (F.e2 - Fs.e2).inf_norm()});
  report(2, origin == 0.0 && frame_err < 1e-12,
         "initial data: |x(0,0)| = " + num(origin) + ", frame deviation " + num(frame_err));
}

void criterion_degeneracy() {
  double worst = 0.0;
  for (const char* spec : kProfiles) {
    const SurfaceModel S = canonical(spec);
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j) {
        const double u = -1.0 + 2.0 * i / 20, v = -1.0 + 2.0 * j / 20;
        const Metric2 m = induced_metric(S, u, v, 1e-3);
        worst = std::max(worst, std::abs(m.det()) / (m.trace() * m.trace()));
      }
  }
  report(3, worst < 1e-6, "metric degeneracy on all generated surfaces: max " + num(worst));
}

void criterion_ruling() {
  double line = 0.0, nullity = 0.0;
  for (const char* spec : kProfiles) {
    const RuledReport r = check_ruled(canonical(spec));
    line = std::max(line, r.max_line_deviation);
    nullity = std::max(nullity, r.max_null_defect);
  }
  report(4, line < 1e-9 && nullity < 1e-8,
         "null ruling: line deviation " + num(line) + ", direction nullity " + num(nullity));
}

void criterion_sl_equivalence() {
  double diff = 0.0, residual = 0.0;
  for (const char* spec : kProfiles) {
    const ProfileFunction f = ProfileFunction::parse(spec);
    const CanonicalInitialData ic = canonical_initial_data(f(0.0));
    const FrameCoefficients direct =
        integrate_frame_coefficients(f, -2, 2, ic.G0, ic.G1(), ic.G2(f(0.0)), 1e-3);
    const FrameCoefficients via_sl = build_G0_via_sl(f, -2, 2, ic.G0, ic.G0p, ic.G0pp, 1e-3);
    diff = std::max(diff, max_coefficient_difference(direct, via_sl));
    residual = std::max(residual, third_order_residual(direct, f));
  }
  report(5, diff < 1e-8 && residual < 1e-6,
         "Sturm-Liouville route equivalence " + num(diff) + ", third-order residual " +
             num(residual));
}

void criterion_frame_relations() {
  double worst = 0.0;
  for (const char* spec : kProfiles) {
    const SurfaceModel S = canonical(spec);
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j) {
        const double u = -1.0 + 2.0 * i / 20, v = -1.0 + 2.0 * j / 20;
        worst = std::max(worst, verify_frame(S.frame(u, v)).max_violation());
      }
  }
  report(6, worst < 1e-7, "frame relation drift along the frame fields: " + num(worst));
}

void criterion_structure_equations() {
  const SurfaceModel S = canonical("const:1");
  const FrameField field = analytic_frame_field(S);
  const double r1 = verify_structure_equations(field, S.domain(), 9, 9, 1e-3).max_residual();
  const double r2 = verify_structure_equations(field, S.domain(), 9, 9, 5e-4).max_residual();
  const double ratio = r2 > 0.0 ? r1 / r2 : 0.0;
  report(7, r1 < 1e-4 && ratio > 2.5 && ratio < 6.0,
         "structure equations: residual " + num(r1) + ", halving improvement x" + num(ratio));
}

void criterion_trichotomy() {
  bool ok = true;
  std::string detail;

  const MVector n{1 / kSqrt2, 1 / kSqrt2, 0};
  const InvariantReport rp =
      compute_invariants(make_plane({0, 0, 0}, n, {0, 0, 1}, kBox), grid9());
  ok = ok && rp.verdict == Verdict::Plane && rp.max_abs_a1 < 1e-6;
  detail += "plane |a1| " + num(rp.max_abs_a1);

  const InvariantReport rc = compute_invariants(make_cone({1, 2, 3}, kBox), grid9());
  const double vertex_err =
      rc.verdict == Verdict::Cone ? (rc.vertex - MVector{1, 2, 3}).inf_norm() : 1.0;
  ok = ok && rc.verdict == Verdict::Cone && vertex_err < 1e-6;
  detail += ", cone vertex error " + num(vertex_err);

  double f_err = 0.0;
  for (const char* spec : kProfiles) {
    const ProfileFunction f = ProfileFunction::parse(spec);
    const InvariantReport r = compute_invariants(canonical(spec), grid9());
    if (r.verdict != Verdict::NonConical) {
      ok = false;
      continue;
    }
    for (const PointInvariants& p : r.points)
      f_err = std::max(f_err, std::abs(p.f_rec - f(p.v)));
  }
  ok = ok && f_err < 1e-3;
  detail += ", recovered-f error " + num(f_err);
  report(8, ok, "classifier trichotomy: " + detail);
}

void criterion_invariance() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> d(-1.0, 1.0);

  const SurfaceModel S = canonical("const:1");
  ClassifyOptions opts;
  opts.nu = 5;
  opts.nv = 5;
  opts.compute_a5 = false;
  const InvariantReport base = compute_invariants(S, opts);

  double drift = 0.0;
  for (int k = 0; k < 10; ++k) {
    const Isometry T = Isometry::make(boost_x1(d(rng)) * rotation_x1x2(3.0 * d(rng)),
                                      {d(rng), d(rng), d(rng)});
    const InvariantReport r = compute_invariants(transformed(S, T), opts);
    if (r.verdict != Verdict::NonConical) {
      drift = 1.0;
      break;
    }
    for (std::size_t i = 0; i < base.points.size(); ++i) {
      drift = std::max(drift, std::abs(r.points[i].a2 - base.points[i].a2));
      drift = std::max(drift, std::abs(r.points[i].a4 - base.points[i].a4));
      drift = std::max(drift, std::abs(r.points[i].f_rec - base.points[i].f_rec));
    }
  }

  // Relative-invariant law under random smooth gauges of the frame bundle.
  const FrameField field = analytic_frame_field(S);
  double law = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double a = 0.2 * d(rng), b = d(rng), c = 1.4 + 0.2 * d(rng);
    auto mu = [a, b, c](double u, double v) { return c + a * std::sin(u + b * v); };
    auto lam = [a, b](double u, double v) { return 0.5 * a * std::cos(b * u - v); };
    InvariantEngine plain(field, 1e-3), twisted(gauge_transformed_field(field, mu, lam), 1e-3);
    for (double u : {-0.4, 0.3})
      for (double v : {-0.5, 0.2}) {
        const double ratio = twisted.a1(u, v) / plain.a1(u, v);
        law = std::max(law, std::abs(ratio - mu(u, v)));
      }
  }
  report(9, drift < 1e-3 && law < 1e-3,
         "invariance: isometry drift " + num(drift) + ", gauge ratio error " + num(law));
}

}  // namespace

int main() {
  now_seconds();  // start the clock
  criterion_closed_forms();
  criterion_initial_data();
  criterion_degeneracy();
  criterion_ruling();
  criterion_sl_equivalence();
  criterion_frame_relations();
  criterion_structure_equations();
  criterion_trichotomy();
  criterion_invariance();
  const double elapsed = now_seconds();
  report(10, elapsed < 60.0, "acceptance wall clock " + num(elapsed) + " s (< 60 s)");
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
