#ifndef LIGHTLIKE_H
#define LIGHTLIKE_H

/* C interface to the lightlike-surface library. All objects are opaque
 * handles created and destroyed here; functions return LL_OK or an error
 * code, with a thread-local message available from ll_last_error(). */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LL_OK = 0,
  LL_ERR_INVALID_ARGUMENT = 1,
  LL_ERR_INTEGRATION = 2,
  LL_ERR_IO = 3,
  LL_ERR_LOGIC = 4,
  LL_ERR_UNKNOWN = 5
} ll_status;

/* Message of the most recent failure on this thread; never NULL. */
const char* ll_last_error(void);

typedef struct ll_profile ll_profile;
typedef struct ll_surface ll_surface;
typedef struct ll_report ll_report;

/* ---- profile functions ---------------------------------------------- */

/* Grammar: const:<k> | id | sin[:amp[:freq[:phase]]] | table:<path>. */
ll_status ll_profile_parse(const char* spec, ll_profile** out);
ll_status ll_profile_eval(const ll_profile* p, double v, double* out);
void ll_profile_free(ll_profile* p);

/* ---- surfaces ------------------------------------------------------- */

/* Non-conical surface generated from f over [u_min,u_max] x [v_min,v_max];
 * the v-range must contain 0. */
ll_status ll_surface_nonconical(const ll_profile* f, double u_min, double u_max,
                                double v_min, double v_max, double ode_step,
                                ll_surface** out);

ll_status ll_surface_plane(const double point[3], const double null_dir[3],
                           const double spacelike_dir[3], double u_min, double u_max,
                           double v_min, double v_max, ll_surface** out);

ll_status ll_surface_cone(const double vertex[3], double s_min, double s_max,
                          double v_min, double v_max, ll_surface** out);

/* name: "f0" | "f1" | "fm1" (exact example parametrizations). */
ll_status ll_surface_closed_form(const char* name, double u_min, double u_max,
                                 double v_min, double v_max, ll_surface** out);

/* Spacelike graph surface (negative control for the verifier). */
ll_status ll_surface_spacelike(double u_min, double u_max, double v_min, double v_max,
                               ll_surface** out);

/* Spline-interpolated surface from a CSV sample grid with columns
 * u,v,x0,x1,x2 (header required). */
ll_status ll_surface_from_csv(const char* path, ll_surface** out);

ll_status ll_surface_sample(const ll_surface* s, double u, double v, double x[3]);

/* Analytic frame field; LL_ERR_LOGIC if the surface carries none. */
ll_status ll_surface_frame(const ll_surface* s, double u, double v, double e0[3],
                           double e1[3], double e2[3]);

ll_status ll_surface_domain(const ll_surface* s, double* u_min, double* u_max,
                            double* v_min, double* v_max);

void ll_surface_free(ll_surface* s);

/* ---- classification and verification -------------------------------- */

typedef struct {
  double fd_step;
  double tol_plane;
  double tol_cone;
  double tol_degenerate;
  int nu;
  int nv;
} ll_classify_options;

ll_classify_options ll_classify_options_default(void);

ll_status ll_surface_classify(const ll_surface* s, const ll_classify_options* opts,
                              ll_report** out);

typedef struct {
  double fd_step; /* base step for structure-equation residuals */
  int nu;
  int nv;
  double tol_degeneracy;
  double tol_ruling;
  double tol_structure;
} ll_verify_options;

ll_verify_options ll_verify_options_default(void);

/* Runs the residual suites (degeneracy, ruling, structure equations at
 * fd_step and fd_step/2, frame-relation drift where a frame exists). */
ll_status ll_surface_verify(const ll_surface* s, const ll_verify_options* opts,
                            ll_report** out);

/* ---- reports -------------------------------------------------------- */

/* Pointer stays valid while the report lives. */
ll_status ll_report_verdict(const ll_report* r, const char** out);

/* 1 if every threshold of the producing run was met, else 0. */
ll_status ll_report_pass(const ll_report* r, int* out);

/* LL_ERR_LOGIC unless the verdict is Cone. */
ll_status ll_report_vertex(const ll_report* r, double out[3]);

/* Serialized report; free with ll_string_free. */
ll_status ll_report_json(const ll_report* r, char** out);

void ll_report_free(ll_report* r);
void ll_string_free(char* s);

/* ---- exports -------------------------------------------------------- */

ll_status ll_export_obj(const ll_surface* s, const char* path, int nu, int nv);

/* CSV of the classification grid; the report must come from ll_surface_classify
 * on the same surface. */
ll_status ll_export_csv(const ll_surface* s, const ll_report* r, const char* path);

ll_status ll_export_report(const ll_report* r, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* LIGHTLIKE_H */
