#include "lightlike/classify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace lightlike {

namespace {

// (p, q) with target = p * b0 + q * b1, both read as values on (du, dv).
void solve2(const double target[2], const double b0[2], const double b1[2], double& p,
            double& q) {
  const double det = b0[0] * b1[1] - b0[1] * b1[0];
  double scale = 0.0;
  for (int i = 0; i < 2; ++i)
    scale = std::max({scale, std::abs(b0[i]), std::abs(b1[i])});
  if (std::abs(det) < 1e-12 * std::max(1.0, scale * scale))
    throw std::runtime_error("invariant extraction: degenerate coframe");
  p = (target[0] * b1[1] - target[1] * b1[0]) / det;
  q = (b0[0] * target[1] - b0[1] * target[0]) / det;
}

// Five-point first derivative: the engine stacks several difference levels,
// so the per-level truncation has to be well below the nested-noise floor.
MVector fd_derivative(const std::function<MVector(double, double)>& f, double u, double v,
                      int direction, double h) {
  auto at = [&](double s) { return direction == 0 ? f(u + s, v) : f(u, v + s); };
  return (at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h)) / (12.0 * h);
}

double fd_scalar(const std::function<double(double, double)>& f, double u, double v,
                 int direction, double h) {
  auto at = [&](double s) { return direction == 0 ? f(u + s, v) : f(u, v + s); };
  return (at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h)) / (12.0 * h);
}

}  // namespace

double Metric2::rel_degeneracy() const {
  const double scale = E * E + 2.0 * F * F + G * G;
  return std::abs(det()) / std::max(scale, 1e-300);
}

Metric2 induced_metric(const SurfaceModel& S, double u, double v, double h) {
  auto sample = [&S](double a, double b) { return S.sample(a, b); };
  const MVector xu = fd_derivative(sample, u, v, 0, h);
  const MVector xv = fd_derivative(sample, u, v, 1, h);
  Metric2 m;
  m.E = inner(xu, xu);
  m.F = inner(xu, xv);
  m.G = inner(xv, xv);
  m.xu_norm = xu.euclid_norm();
  m.xv_norm = xv.euclid_norm();
  const MVector cr{xu.x1 * xv.x2 - xu.x2 * xv.x1, xu.x2 * xv.x0 - xu.x0 * xv.x2,
                   xu.x0 * xv.x1 - xu.x1 * xv.x0};
  m.cross_norm = cr.euclid_norm();
  return m;
}

FrameField adapted_frame_field(const SurfaceModel& S, double fd_step) {
  const double h = fd_step;
  auto sample = [S](double a, double b) { return S.sample(a, b); };

  // Kernel direction of the induced metric as an unnormalized tangent vector.
  auto kernel_vector = [sample, h](double u, double v) {
    const MVector xu = fd_derivative(sample, u, v, 0, h);
    const MVector xv = fd_derivative(sample, u, v, 1, h);
    const double tangent_scale = xu.euclid_norm() * xu.euclid_norm() +
                                 xv.euclid_norm() * xv.euclid_norm();
    const MVector cr{xu.x1 * xv.x2 - xu.x2 * xv.x1, xu.x2 * xv.x0 - xu.x0 * xv.x2,
                     xu.x0 * xv.x1 - xu.x1 * xv.x0};
    if (cr.euclid_norm() < 1e-10 * std::max(tangent_scale, 1e-300))
      throw std::runtime_error("adapted_frame_field: surface not regular");
    const double E = inner(xu, xu), F = inner(xu, xv), G = inner(xv, xv);
    // The kernel is orthogonal to both rows of the metric; use the larger row.
    double a, b;
    if (E * E + F * F >= F * F + G * G) {
      a = -F;
      b = E;
    } else {
      a = -G;
      b = F;
    }
    if (a * a + b * b < 1e-20 * std::max(1.0, tangent_scale * tangent_scale))
      throw std::runtime_error("adapted_frame_field: induced metric vanishes");
    return std::tuple{a * xu + b * xv, xu, xv};
  };

  // Fix the gauge at the domain center: tangent combination for e1, sign of
  // e1 (orientation of the frame must match the standard frame's), and the
  // reference covector normalizing e0.
  const double uc = 0.5 * (S.domain().u_min + S.domain().u_max);
  const double vc = 0.5 * (S.domain().v_min + S.domain().v_max);
  auto [e0c_raw, xuc, xvc] = kernel_vector(uc, vc);
  MVector e0c = e0c_raw / e0c_raw.euclid_norm();
  if (e0c.x0 < 0.0) e0c = -e0c;  // null vectors have x0 != 0

  const double qu = inner(xuc, xuc), qv = inner(xvc, xvc);
  int tangent_choice;  // 0: xv, 1: xu, 2: xu + xv
  const double qthresh = 1e-8 * (xuc.euclid_norm() * xuc.euclid_norm() +
                                 xvc.euclid_norm() * xvc.euclid_norm());
  if (qv >= qu && qv > qthresh)
    tangent_choice = 0;
  else if (qu > qthresh)
    tangent_choice = 1;
  else
    tangent_choice = 2;

  auto pick_tangent = [tangent_choice](const MVector& xu, const MVector& xv) {
    switch (tangent_choice) {
      case 0: return xv;
      case 1: return xu;
      default: return xu + xv;
    }
  };

  MVector tc = pick_tangent(xuc, xvc);
  const double qc = inner(tc, tc);
  if (qc <= 0.0)
    throw std::runtime_error("adapted_frame_field: no spacelike tangent at center");
  MVector e1c = tc / std::sqrt(qc);
  const MVector e2c = complete_null_frame(e0c, e1c, 1e-3);
  // det[e0 e1 e2] = -1 for the standard frame; flipping e1 flips the sign.
  const double e1_sign = triple_product(e0c, e1c, e2c) < 0.0 ? 1.0 : -1.0;
  const MVector ref = e2c;

  return [sample, kernel_vector, pick_tangent, ref, e1_sign, h](double u, double v) {
    auto [e0_raw, xu, xv] = kernel_vector(u, v);
    const double pairing = inner(e0_raw, ref);
    if (std::abs(pairing) < 1e-14)
      throw std::runtime_error("adapted_frame_field: reference covector degenerates");
    FramePoint fp;
    fp.x = sample(u, v);
    fp.e0 = e0_raw / pairing;
    const MVector t = pick_tangent(xu, xv);
    const double q = inner(t, t);
    if (q <= 0.0)
      throw std::runtime_error("adapted_frame_field: tangent not spacelike");
    fp.e1 = e1_sign / std::sqrt(q) * t;
    fp.e2 = complete_null_frame(fp.e0, fp.e1, 1e-3);
    return fp;
  };
}

FrameField analytic_frame_field(const SurfaceModel& S) {
  if (!S.has_frame())
    throw std::logic_error("analytic_frame_field: model has no frame field");
  auto copy = S;
  return [copy](double u, double v) {
    const AdaptedFrame F = copy.frame(u, v);
    return FramePoint{copy.sample(u, v), F.e0, F.e1, F.e2};
  };
}

FrameField gauge_transformed_field(FrameField base, std::function<double(double, double)> mu,
                                   std::function<double(double, double)> lambda) {
  return [base = std::move(base), mu = std::move(mu),
          lambda = std::move(lambda)](double u, double v) {
    FramePoint fp = base(u, v);
    const AdaptedFrame F = gauge_transform({fp.e0, fp.e1, fp.e2, AdaptationLevel::Zero},
                                           {mu(u, v), lambda(u, v)});
    fp.e0 = F.e0;
    fp.e1 = F.e1;
    fp.e2 = F.e2;
    return fp;
  };
}

FormValues connection_forms(const FrameField& field, double u, double v, double h) {
  const FramePoint c = field(u, v);
  FormValues out;
  for (int dir = 0; dir < 2; ++dir) {
    auto at = [&](double s) { return dir == 0 ? field(u + s, v) : field(u, v + s); };
    const FramePoint m2 = at(-2 * h), m1 = at(-h), p1 = at(h), p2 = at(2 * h);
    auto diff = [&](MVector FramePoint::* w) {
      return (m2.*w - 8.0 * (m1.*w) + 8.0 * (p1.*w) - p2.*w) / (12.0 * h);
    };
    const MVector dx = diff(&FramePoint::x);
    const MVector de0 = diff(&FramePoint::e0);
    const MVector de1 = diff(&FramePoint::e1);
    double* slot = dir == 0 ? out.P : out.Q;
    slot[0] = inner(dx, c.e2);   // w0
    slot[1] = inner(dx, c.e1);   // w1
    slot[2] = inner(dx, c.e0);   // w2
    slot[3] = inner(de0, c.e2);  // w00
    slot[4] = inner(de0, c.e1);  // w10
    slot[5] = inner(de1, c.e2);  // w01
  }
  return out;
}

double connection_coefficient(const FrameField& field, ConnectionForm which, double u,
                              double v, int direction, double h) {
  const FormValues f = connection_forms(field, u, v, h);
  const int i = static_cast<int>(which);
  return direction == 0 ? f.P[i] : f.Q[i];
}

std::size_t InvariantEngine::UVKeyHash::operator()(const UVKey& k) const {
  const std::uint64_t a = std::bit_cast<std::uint64_t>(k.u);
  const std::uint64_t b = std::bit_cast<std::uint64_t>(k.v);
  std::uint64_t x = a * 0x9e3779b97f4a7c15ULL ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6));
  x ^= x >> 29;
  return static_cast<std::size_t>(x);
}

InvariantEngine::InvariantEngine(FrameField field, double fd_step, double invariant_step)
    : field_(std::move(field)),
      h_(fd_step),
      hd_(invariant_step > 0.0 ? invariant_step : 16.0 * fd_step) {
  if (h_ <= 0.0) throw std::invalid_argument("InvariantEngine: fd_step must be positive");
}

const InvariantEngine::Level1& InvariantEngine::level1(double u, double v) {
  const UVKey k{u, v};
  if (auto it = c1_.find(k); it != c1_.end()) return it->second;
  Level1 L;
  L.forms = connection_forms(field_, u, v, h_);
  const double w10[2] = {L.forms.P[4], L.forms.Q[4]};
  const double w0[2] = {L.forms.P[0], L.forms.Q[0]};
  const double w1[2] = {L.forms.P[1], L.forms.Q[1]};
  double p;  // w0-component of w10; vanishes by Cartan's lemma
  solve2(w10, w0, w1, p, L.a1);
  return c1_.emplace(k, L).first->second;
}

const InvariantEngine::Level2& InvariantEngine::level2(double u, double v) {
  const UVKey k{u, v};
  if (auto it = c2_.find(k); it != c2_.end()) return it->second;
  const Level1 L1 = level1(u, v);
  const double a1c = L1.a1;
  if (std::abs(a1c) < 1e-14)
    throw std::runtime_error("invariant extraction: a1 vanishes (planar point)");
  auto a1_at = [this](double a, double b) { return level1(a, b).a1; };
  const double da1[2] = {fd_scalar(a1_at, u, v, 0, h_), fd_scalar(a1_at, u, v, 1, h_)};
  Level2 L;
  for (int i = 0; i < 2; ++i) {
    const double* P = i == 0 ? L1.forms.P : L1.forms.Q;
    const double da1i = da1[i];
    L.w0[i] = a1c * P[0];
    L.w1[i] = P[1];
    L.w00[i] = P[3] - da1i / a1c;
    L.w10[i] = P[4] / a1c;
    L.w01[i] = a1c * P[5];
  }
  const double target[2] = {L.w00[0] - L.w0[0], L.w00[1] - L.w0[1]};
  double p;
  solve2(target, L.w0, L.w1, p, L.a2);
  return c2_.emplace(k, L).first->second;
}

const InvariantEngine::Level3& InvariantEngine::level3(double u, double v) {
  const UVKey k{u, v};
  if (auto it = c3_.find(k); it != c3_.end()) return it->second;
  const Level2 L2 = level2(u, v);
  if (std::abs(L2.a2) < 1e-14)
    throw std::runtime_error("invariant extraction: a2 vanishes (conical point)");
  auto a2_at = [this](double a, double b) { return level2(a, b).a2; };
  const double da2[2] = {fd_scalar(a2_at, u, v, 0, hd_), fd_scalar(a2_at, u, v, 1, hd_)};
  Level3 L;
  solve2(da2, L2.w0, L2.w1, L.da2_w0, L.a3);
  L.lambda = L.a3 / (2.0 * L2.a2);
  return c3_.emplace(k, L).first->second;
}

const InvariantEngine::Level4& InvariantEngine::level4(double u, double v) {
  const UVKey k{u, v};
  if (auto it = c4_.find(k); it != c4_.end()) return it->second;
  const Level2 L2 = level2(u, v);
  const Level3 L3 = level3(u, v);
  const double lam = L3.lambda;
  auto lam_at = [this](double a, double b) { return level3(a, b).lambda; };
  const double dlam[2] = {fd_scalar(lam_at, u, v, 0, hd_), fd_scalar(lam_at, u, v, 1, hd_)};
  Level4 L;
  L.a2 = L2.a2;
  for (int i = 0; i < 2; ++i) {
    L.w0[i] = L2.w0[i] - lam * L2.w1[i];
    L.w1[i] = L2.w1[i];
    L.w01[i] = L2.w01[i] + lam * L2.w00[i] - 0.5 * lam * lam * L2.w10[i] + dlam[i];
  }
  double p;
  solve2(L.w01, L.w0, L.w1, p, L.a4);
  // p should equal a2; fold the defect into a4's quality implicitly.
  return c4_.emplace(k, L).first->second;
}

const InvariantEngine::Level5& InvariantEngine::level5(double u, double v) {
  const UVKey k{u, v};
  if (auto it = c5_.find(k); it != c5_.end()) return it->second;
  const Level4 L4 = level4(u, v);
  auto a4_at = [this](double a, double b) { return level4(a, b).a4; };
  const double da4[2] = {fd_scalar(a4_at, u, v, 0, hd_), fd_scalar(a4_at, u, v, 1, hd_)};
  Level5 L;
  solve2(da4, L4.w0, L4.w1, L.da4_w0, L.a5);
  return c5_.emplace(k, L).first->second;
}

double InvariantEngine::a1(double u, double v) { return level1(u, v).a1; }
double InvariantEngine::a2(double u, double v) { return level2(u, v).a2; }
double InvariantEngine::a3(double u, double v) { return level3(u, v).a3; }
double InvariantEngine::a4(double u, double v) { return level4(u, v).a4; }
double InvariantEngine::a5(double u, double v) { return level5(u, v).a5; }

double InvariantEngine::f_recovered(double u, double v) {
  const Level4& L = level4(u, v);
  return (L.a4 + 0.5 * L.a2 * L.a2) / L.a2;
}

double InvariantEngine::da2_w0_coefficient(double u, double v) {
  return level3(u, v).da2_w0;
}

double InvariantEngine::da4_w0_coefficient(double u, double v) {
  return level5(u, v).da4_w0;
}

void InvariantEngine::canonical_coframe(double u, double v, double w0[2], double w1[2]) {
  const Level4& L = level4(u, v);
  w0[0] = L.w0[0];
  w0[1] = L.w0[1];
  w1[0] = L.w1[0];
  w1[1] = L.w1[1];
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Plane: return "Plane";
    case Verdict::Cone: return "Cone";
    case Verdict::NonConical: return "NonConical";
    case Verdict::NotLightlike: return "NotLightlike";
    case Verdict::MixedType: return "MixedType";
  }
  return "?";
}

InvariantReport compute_invariants(const SurfaceModel& S, const ClassifyOptions& opts) {
  if (opts.nu < 2 || opts.nv < 2)
    throw std::invalid_argument("compute_invariants: need nu, nv >= 2");
  InvariantReport rep;
  rep.options = opts;
  rep.nu = opts.nu;
  rep.nv = opts.nv;

  const double h = opts.fd_step;
  const Domain& d = S.domain();
  // Inset so the nested difference stencils (plus the frame field's own
  // sampling stencil) stay inside the domain.
  const double reach = 6.0 * 16.0 * h + 4.0 * h;  // matches InvariantEngine defaults
  const double mu_in = std::min(reach + 3.0 * h, 0.25 * d.u_span());
  const double mv_in = std::min(reach + 3.0 * h, 0.25 * d.v_span());
  std::vector<double> us(opts.nu), vs(opts.nv);
  for (int i = 0; i < opts.nu; ++i)
    us[i] = d.u_min + mu_in + (d.u_span() - 2 * mu_in) * i / (opts.nu - 1);
  for (int j = 0; j < opts.nv; ++j)
    vs[j] = d.v_min + mv_in + (d.v_span() - 2 * mv_in) * j / (opts.nv - 1);

  rep.points.reserve(static_cast<std::size_t>(opts.nu) * opts.nv);
  for (int i = 0; i < opts.nu; ++i)
    for (int j = 0; j < opts.nv; ++j) {
      PointInvariants p;
      p.u = us[i];
      p.v = vs[j];
      const Metric2 m = induced_metric(S, p.u, p.v, h);
      p.det_g = m.det();
      p.rel_degeneracy = m.rel_degeneracy();
      rep.max_rel_degeneracy = std::max(rep.max_rel_degeneracy, p.rel_degeneracy);
      rep.points.push_back(p);
    }

  if (rep.max_rel_degeneracy > opts.tol_degenerate) {
    rep.verdict = Verdict::NotLightlike;
    return rep;
  }

  FrameField field = adapted_frame_field(S, h);
  InvariantEngine engine(field, h);

  double a1_min = 0, a1_max = 0;
  bool first = true;
  for (auto& p : rep.points) {
    const FramePoint fp = field(p.u, p.v);
    p.frame_violation =
        verify_frame({fp.e0, fp.e1, fp.e2, AdaptationLevel::Zero}).max_violation();
    rep.max_frame_violation = std::max(rep.max_frame_violation, p.frame_violation);
    p.a1 = engine.a1(p.u, p.v);
    a1_min = first ? p.a1 : std::min(a1_min, p.a1);
    a1_max = first ? p.a1 : std::max(a1_max, p.a1);
    first = false;
  }
  rep.max_abs_a1 = std::max(std::abs(a1_min), std::abs(a1_max));
  rep.min_abs_a1 = (a1_min <= 0.0 && a1_max >= 0.0)
                       ? 0.0
                       : std::min(std::abs(a1_min), std::abs(a1_max));

  if (rep.max_abs_a1 < opts.tol_plane) {
    rep.verdict = Verdict::Plane;
    return rep;
  }
  if (a1_min < -opts.tol_plane && a1_max > opts.tol_plane) {
    rep.verdict = Verdict::MixedType;
    return rep;
  }

  double a2_min = 0, a2_max = 0;
  first = true;
  for (auto& p : rep.points) {
    p.a2 = engine.a2(p.u, p.v);
    a2_min = first ? p.a2 : std::min(a2_min, p.a2);
    a2_max = first ? p.a2 : std::max(a2_max, p.a2);
    first = false;
  }
  rep.max_abs_a2 = std::max(std::abs(a2_min), std::abs(a2_max));
  rep.min_abs_a2 = (a2_min <= 0.0 && a2_max >= 0.0)
                       ? 0.0
                       : std::min(std::abs(a2_min), std::abs(a2_max));

  if (rep.max_abs_a2 < opts.tol_cone) {
    rep.verdict = Verdict::Cone;
    // 1-adapted e0 is e0 / a1; the vertex estimate must agree across the grid.
    MVector mean{};
    std::vector<MVector> est;
    est.reserve(rep.points.size());
    for (const auto& p : rep.points) {
      const FramePoint fp = field(p.u, p.v);
      const MVector v = fp.x - fp.e0 / p.a1;
      est.push_back(v);
      mean += v;
    }
    mean = mean / static_cast<double>(est.size());
    double spread = 0.0;
    for (const MVector& v : est) spread = std::max(spread, (v - mean).inf_norm());
    rep.vertex = mean;
    rep.vertex_spread = spread;
    return rep;
  }
  if (a2_min < -opts.tol_cone && a2_max > opts.tol_cone) {
    rep.verdict = Verdict::MixedType;
    return rep;
  }

  for (auto& p : rep.points) {
    p.a3 = engine.a3(p.u, p.v);
    p.a4 = engine.a4(p.u, p.v);
    if (opts.compute_a5) p.a5 = engine.a5(p.u, p.v);
    p.f_rec = engine.f_recovered(p.u, p.v);
    p.u_canonical = p.a2 > 0.0 ? -0.5 * std::log(p.a2) : std::nan("");
    rep.max_da2_defect = std::max(rep.max_da2_defect,
                                  std::abs(engine.da2_w0_coefficient(p.u, p.v) + 2.0 * p.a2));
    if (opts.compute_a5)
      rep.max_da4_defect =
          std::max(rep.max_da4_defect, std::abs(engine.da4_w0_coefficient(p.u, p.v) -
                                                (p.a2 * p.a2 - 2.0 * p.a4)));
  }
  rep.verdict = Verdict::NonConical;

  // Recovered f along the center u-row, with the canonical v-coordinate
  // integrated from d(v_can) = e^{-u_can} w1.
  const int ic = opts.nu / 2;
  std::vector<double> g(opts.nv);
  rep.f_table.resize(opts.nv);
  for (int j = 0; j < opts.nv; ++j) {
    const PointInvariants& p = rep.points[static_cast<std::size_t>(ic) * opts.nv + j];
    double w0[2], w1[2];
    engine.canonical_coframe(p.u, p.v, w0, w1);
    g[j] = p.a2 > 0.0 ? std::sqrt(p.a2) * w1[1] : std::nan("");  // e^{-u_can} w1(d/dv)
    rep.f_table[j] = {p.v, p.f_rec, 0.0};
  }
  int j0 = 0;
  for (int j = 1; j < opts.nv; ++j)
    if (std::abs(vs[j]) < std::abs(vs[j0])) j0 = j;
  std::vector<double> vcan(opts.nv, 0.0);
  for (int j = j0 + 1; j < opts.nv; ++j)
    vcan[j] = vcan[j - 1] + 0.5 * (g[j] + g[j - 1]) * (vs[j] - vs[j - 1]);
  for (int j = j0 - 1; j >= 0; --j)
    vcan[j] = vcan[j + 1] - 0.5 * (g[j] + g[j + 1]) * (vs[j + 1] - vs[j]);
  for (int j = 0; j < opts.nv; ++j) rep.f_table[j].v_canonical = vcan[j];
  return rep;
}

Verdict classify(const SurfaceModel& S, const ClassifyOptions& opts) {
  return compute_invariants(S, opts).verdict;
}

MVector cone_vertex(const SurfaceModel& S, const ClassifyOptions& opts, double* max_spread) {
  const InvariantReport rep = compute_invariants(S, opts);
  if (rep.verdict != Verdict::Cone)
    throw std::runtime_error("cone_vertex: surface did not classify as a cone");
  if (max_spread) *max_spread = rep.vertex_spread;
  return rep.vertex;
}

double StructureResiduals::max_residual() const {
  double w = 0.0;
  for (double r : d_omega) w = std::max(w, std::abs(r));
  return w;
}

StructureResiduals verify_structure_equations(const FrameField& field, const Domain& domain,
                                              int nu, int nv, double h) {
  StructureResiduals out;
  const double mu_in = std::min(4.0 * h, 0.25 * domain.u_span());
  const double mv_in = std::min(4.0 * h, 0.25 * domain.v_span());
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      const double u =
          domain.u_min + mu_in + (domain.u_span() - 2 * mu_in) * i / std::max(1, nu - 1);
      const double v =
          domain.v_min + mv_in + (domain.v_span() - 2 * mv_in) * j / std::max(1, nv - 1);
      const FormValues c = connection_forms(field, u, v, h);
      const FormValues up = connection_forms(field, u + h, v, h);
      const FormValues um = connection_forms(field, u - h, v, h);
      const FormValues vp = connection_forms(field, u, v + h, h);
      const FormValues vm = connection_forms(field, u, v - h, h);

      auto dform = [&](int k) {
        return (up.Q[k] - um.Q[k]) / (2.0 * h) - (vp.P[k] - vm.P[k]) / (2.0 * h);
      };
      auto wedge = [&](int a, double sa, int b, double sb) {
        return sa * sb * (c.P[a] * c.Q[b] - c.Q[a] * c.P[b]);
      };

      // dw^a = -w^a_b ^ w^b and dw^a_b = -w^a_c ^ w^c_b, using the relations
      // w20 = w11 = w02 = 0, w21 = -w10, w22 = -w00, w12 = -w01.
      const double r[6] = {
          dform(0) + wedge(3, 1, 0, 1) + wedge(5, 1, 1, 1),             // dw0
          dform(1) + wedge(4, 1, 0, 1) + wedge(5, -1, 2, 1),            // dw1
          dform(2) + wedge(4, -1, 1, 1) + wedge(3, -1, 2, 1),           // dw2
          dform(3) + wedge(5, 1, 4, 1),                                 // dw00
          dform(4) + wedge(4, 1, 3, 1),                                 // dw10
          dform(5) + wedge(3, 1, 5, 1),                                 // dw01
      };
      for (int k = 0; k < 6; ++k)
        out.d_omega[k] = std::max(out.d_omega[k], std::abs(r[k]));
    }
  return out;
}

RuledReport check_ruled(const SurfaceModel& S, int nu, int nv) {
  RuledReport rep;
  const Domain& d = S.domain();
  for (int j = 0; j < nv; ++j) {
    const double v = d.v_min + d.v_span() * j / std::max(1, nv - 1);
    const MVector p0 = S.sample(d.u_min, v);
    const MVector p1 = S.sample(d.u_max, v);
    MVector dir = p1 - p0;
    const double len = dir.euclid_norm();
    if (len < 1e-300) continue;
    dir = dir / len;
    rep.max_null_defect = std::max(rep.max_null_defect, std::abs(inner(dir, dir)));
    for (int i = 1; i + 1 < nu; ++i) {
      const double u = d.u_min + d.u_span() * i / (nu - 1);
      const MVector w = S.sample(u, v) - p0;
      const MVector perp = w - euclid_dot(w, dir) * dir;
      rep.max_line_deviation = std::max(rep.max_line_deviation, perp.euclid_norm());
    }
  }
  return rep;
}

}  // namespace lightlike
