#include "lightlike.h"

#include <algorithm>
#include <cstring>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "lightlike/classify.hpp"
#include "lightlike/io.hpp"
#include "lightlike/ode.hpp"
#include "lightlike/profile.hpp"
#include "lightlike/surface.hpp"

using namespace lightlike;

struct ll_profile {
  ProfileFunction f;
};

struct ll_surface {
  SurfaceModel model;
};

struct ll_report {
  nlohmann::ordered_json json;
  std::string verdict;
  bool pass = false;
  std::optional<MVector> vertex;
  std::optional<InvariantReport> inv;
};

namespace {

thread_local std::string g_error;

template <class Fn>
ll_status wrap(Fn&& fn) {
  try {
    fn();
    return LL_OK;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return LL_ERR_INVALID_ARGUMENT;
  } catch (const IntegrationError& e) {
    g_error = e.what();
    return LL_ERR_INTEGRATION;
  } catch (const std::runtime_error& e) {
    g_error = e.what();
    return LL_ERR_IO;
  } catch (const std::logic_error& e) {
    g_error = e.what();
    return LL_ERR_LOGIC;
  } catch (const std::exception& e) {
    g_error = e.what();
    return LL_ERR_UNKNOWN;
  } catch (...) {
    g_error = "unknown error";
    return LL_ERR_UNKNOWN;
  }
}

ll_status bad_argument(const char* msg) {
  g_error = msg;
  return LL_ERR_INVALID_ARGUMENT;
}

MVector to_vec(const double p[3]) { return {p[0], p[1], p[2]}; }

void from_vec(const MVector& v, double out[3]) {
  out[0] = v.x0;
  out[1] = v.x1;
  out[2] = v.x2;
}

Domain make_domain(double u_min, double u_max, double v_min, double v_max) {
  if (!(u_min < u_max) || !(v_min < v_max))
    throw std::invalid_argument("degenerate parameter range");
  return {u_min, u_max, v_min, v_max};
}

}  // namespace

const char* ll_last_error(void) { return g_error.c_str(); }

ll_status ll_profile_parse(const char* spec, ll_profile** out) {
  if (!spec || !out) return bad_argument("ll_profile_parse: null argument");
  return wrap([&] { *out = new ll_profile{ProfileFunction::parse(spec)}; });
}

ll_status ll_profile_eval(const ll_profile* p, double v, double* out) {
  if (!p || !out) return bad_argument("ll_profile_eval: null argument");
  return wrap([&] { *out = p->f(v); });
}

void ll_profile_free(ll_profile* p) { delete p; }

ll_status ll_surface_nonconical(const ll_profile* f, double u_min, double u_max,
                                double v_min, double v_max, double ode_step,
                                ll_surface** out) {
  if (!f || !out) return bad_argument("ll_surface_nonconical: null argument");
  return wrap([&] {
    if (!(ode_step > 0.0)) throw std::invalid_argument("ode_step must be positive");
    *out = new ll_surface{
        make_nonconical(f->f, make_domain(u_min, u_max, v_min, v_max), ode_step)};
  });
}

ll_status ll_surface_plane(const double point[3], const double null_dir[3],
                           const double spacelike_dir[3], double u_min, double u_max,
                           double v_min, double v_max, ll_surface** out) {
  if (!point || !null_dir || !spacelike_dir || !out)
    return bad_argument("ll_surface_plane: null argument");
  return wrap([&] {
    *out = new ll_surface{make_plane(to_vec(point), to_vec(null_dir),
                                     to_vec(spacelike_dir),
                                     make_domain(u_min, u_max, v_min, v_max))};
  });
}

ll_status ll_surface_cone(const double vertex[3], double s_min, double s_max,
                          double v_min, double v_max, ll_surface** out) {
  if (!vertex || !out) return bad_argument("ll_surface_cone: null argument");
  return wrap([&] {
    *out = new ll_surface{make_cone(to_vec(vertex), make_domain(s_min, s_max, v_min, v_max))};
  });
}

ll_status ll_surface_closed_form(const char* name, double u_min, double u_max,
                                 double v_min, double v_max, ll_surface** out) {
  if (!name || !out) return bad_argument("ll_surface_closed_form: null argument");
  return wrap([&] {
    const auto id = closed_form_id_from_string(name);
    if (!id)
      throw std::invalid_argument(std::string("unknown closed form: ") + name);
    *out = new ll_surface{make_closed_form(*id, make_domain(u_min, u_max, v_min, v_max))};
  });
}

ll_status ll_surface_spacelike(double u_min, double u_max, double v_min, double v_max,
                               ll_surface** out) {
  if (!out) return bad_argument("ll_surface_spacelike: null argument");
  return wrap([&] {
    *out = new ll_surface{make_spacelike_graph(make_domain(u_min, u_max, v_min, v_max))};
  });
}

ll_status ll_surface_from_csv(const char* path, ll_surface** out) {
  if (!path || !out) return bad_argument("ll_surface_from_csv: null argument");
  return wrap([&] { *out = new ll_surface{io::load_csv_surface(path)}; });
}

ll_status ll_surface_sample(const ll_surface* s, double u, double v, double x[3]) {
  if (!s || !x) return bad_argument("ll_surface_sample: null argument");
  return wrap([&] { from_vec(s->model.sample(u, v), x); });
}

ll_status ll_surface_frame(const ll_surface* s, double u, double v, double e0[3],
                           double e1[3], double e2[3]) {
  if (!s || !e0 || !e1 || !e2) return bad_argument("ll_surface_frame: null argument");
  return wrap([&] {
    const AdaptedFrame F = s->model.frame(u, v);
    from_vec(F.e0, e0);
    from_vec(F.e1, e1);
    from_vec(F.e2, e2);
  });
}

ll_status ll_surface_domain(const ll_surface* s, double* u_min, double* u_max,
                            double* v_min, double* v_max) {
  if (!s || !u_min || !u_max || !v_min || !v_max)
    return bad_argument("ll_surface_domain: null argument");
  const Domain& d = s->model.domain();
  *u_min = d.u_min;
  *u_max = d.u_max;
  *v_min = d.v_min;
  *v_max = d.v_max;
  return LL_OK;
}

void ll_surface_free(ll_surface* s) { delete s; }

ll_classify_options ll_classify_options_default(void) {
  const ClassifyOptions o;
  return {o.fd_step, o.tol_plane, o.tol_cone, o.tol_degenerate, o.nu, o.nv};
}

ll_status ll_surface_classify(const ll_surface* s, const ll_classify_options* opts,
                              ll_report** out) {
  if (!s || !out) return bad_argument("ll_surface_classify: null argument");
  return wrap([&] {
    ClassifyOptions o;
    if (opts) {
      o.fd_step = opts->fd_step;
      o.tol_plane = opts->tol_plane;
      o.tol_cone = opts->tol_cone;
      o.tol_degenerate = opts->tol_degenerate;
      o.nu = opts->nu;
      o.nv = opts->nv;
    }
    InvariantReport R = compute_invariants(s->model, o);
    auto* r = new ll_report;
    r->json = io::report_json(R);
    r->verdict = to_string(R.verdict);
    r->pass = R.verdict == Verdict::Plane || R.verdict == Verdict::Cone ||
              R.verdict == Verdict::NonConical;
    if (R.verdict == Verdict::Cone) r->vertex = R.vertex;
    r->inv = std::move(R);
    *out = r;
  });
}

ll_verify_options ll_verify_options_default(void) {
  return {1e-3, 17, 17, 1e-6, 1e-8, 1e-4};
}

ll_status ll_surface_verify(const ll_surface* s, const ll_verify_options* opts,
                            ll_report** out) {
  if (!s || !out) return bad_argument("ll_surface_verify: null argument");
  return wrap([&] {
    const ll_verify_options o = opts ? *opts : ll_verify_options_default();
    if (!(o.fd_step > 0.0) || o.nu < 2 || o.nv < 2)
      throw std::invalid_argument("ll_surface_verify: bad options");
    const SurfaceModel& S = s->model;
    const Domain& d = S.domain();

    double max_deg = 0.0;
    for (int i = 0; i < o.nu; ++i)
      for (int j = 0; j < o.nv; ++j) {
        const double u = d.u_min + d.u_span() * i / (o.nu - 1);
        const double v = d.v_min + d.v_span() * j / (o.nv - 1);
        max_deg = std::max(max_deg, induced_metric(S, u, v, o.fd_step).rel_degeneracy());
      }
    const bool lightlike_ok = max_deg < o.tol_degeneracy;

    const RuledReport ruled = check_ruled(S);
    const bool ruling_ok = ruled.max_line_deviation < o.tol_ruling &&
                           ruled.max_null_defect < 10.0 * o.tol_ruling;

    nlohmann::ordered_json residuals = {
        {"max_rel_degeneracy", max_deg},
        {"ruling_line_deviation", ruled.max_line_deviation},
        {"ruling_null_defect", ruled.max_null_defect}};

    bool structure_ok = false;
    if (lightlike_ok) {
      const FrameField field =
          S.has_frame() ? analytic_frame_field(S) : adapted_frame_field(S, o.fd_step);
      const double r1 =
          verify_structure_equations(field, d, o.nu, o.nv, o.fd_step).max_residual();
      const double r2 =
          verify_structure_equations(field, d, o.nu, o.nv, o.fd_step / 2).max_residual();
      residuals["structure_max"] = r1;
      residuals["structure_max_half_step"] = r2;
      residuals["structure_ratio"] = r2 > 0.0 ? r1 / r2 : 0.0;
      structure_ok = r1 < o.tol_structure;
    }
    if (S.coefficients())
      residuals["frame_relation_drift"] = S.coefficients()->frame_relation_drift();

    ClassifyOptions co;
    co.fd_step = o.fd_step;
    const Verdict verdict = classify(S, co);

    auto* r = new ll_report;
    r->verdict = to_string(verdict);
    r->pass = lightlike_ok && ruling_ok && structure_ok;
    r->json["verdict"] = r->verdict;
    r->json["thresholds"] = {{"fd_step", o.fd_step},
                             {"tol_degeneracy", o.tol_degeneracy},
                             {"tol_ruling", o.tol_ruling},
                             {"tol_structure", o.tol_structure}};
    r->json["residuals"] = std::move(residuals);
    *out = r;
  });
}

ll_status ll_report_verdict(const ll_report* r, const char** out) {
  if (!r || !out) return bad_argument("ll_report_verdict: null argument");
  *out = r->verdict.c_str();
  return LL_OK;
}

ll_status ll_report_pass(const ll_report* r, int* out) {
  if (!r || !out) return bad_argument("ll_report_pass: null argument");
  *out = r->pass ? 1 : 0;
  return LL_OK;
}

ll_status ll_report_vertex(const ll_report* r, double out[3]) {
  if (!r || !out) return bad_argument("ll_report_vertex: null argument");
  if (!r->vertex) {
    g_error = "ll_report_vertex: report has no vertex";
    return LL_ERR_LOGIC;
  }
  from_vec(*r->vertex, out);
  return LL_OK;
}

ll_status ll_report_json(const ll_report* r, char** out) {
  if (!r || !out) return bad_argument("ll_report_json: null argument");
  return wrap([&] {
    const std::string text = r->json.dump(2) + "\n";
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void ll_report_free(ll_report* r) { delete r; }

void ll_string_free(char* s) { delete[] s; }

ll_status ll_export_obj(const ll_surface* s, const char* path, int nu, int nv) {
  if (!s || !path) return bad_argument("ll_export_obj: null argument");
  return wrap([&] { io::write_obj(path, s->model, nu, nv); });
}

ll_status ll_export_csv(const ll_surface* s, const ll_report* r, const char* path) {
  if (!s || !r || !path) return bad_argument("ll_export_csv: null argument");
  return wrap([&] {
    if (!r->inv) throw std::logic_error("ll_export_csv: report is not a classification");
    io::write_csv(path, s->model, *r->inv);
  });
}

ll_status ll_export_report(const ll_report* r, const char* path) {
  if (!r || !path) return bad_argument("ll_export_report: null argument");
  return wrap([&] { io::write_json(path, r->json); });
}
