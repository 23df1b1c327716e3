#include <cstdio>
#include <cstdlib>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lightlike.h"

namespace {

struct Options {
  std::string profile = "const:0";
  std::string surface = "nonconical";
  std::string input_csv;
  double u_range[2] = {-1.0, 1.0};
  double v_range[2] = {-1.0, 1.0};
  int nu = 41;
  int nv = 41;
  double ode_step = 1e-3;
  double fd_step = 0.0;  // 0: per-command default
  double tol_plane = 1e-5;
  double tol_cone = 1e-5;
  std::string out_dir = "out";
  std::string formats = "obj,csv,json";
};

[[noreturn]] void fail(ll_status st) {
  std::fprintf(stderr, "error: %s\n", ll_last_error());
  std::exit(st == LL_ERR_INTEGRATION ? 2 : 1);
}

void check(ll_status st) {
  if (st != LL_OK) fail(st);
}

using SurfacePtr = std::unique_ptr<ll_surface, decltype(&ll_surface_free)>;
using ReportPtr = std::unique_ptr<ll_report, decltype(&ll_report_free)>;

SurfacePtr own(ll_surface* s) { return {s, &ll_surface_free}; }
ReportPtr own(ll_report* r) { return {r, &ll_report_free}; }

std::vector<double> parse_numbers(const std::string& text, char sep) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, sep)) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: bad number '%s' in '%s'\n", cell.c_str(), text.c_str());
      std::exit(1);
    }
  }
  return out;
}

std::set<std::string> parse_formats(const std::string& formats) {
  std::set<std::string> out;
  std::istringstream in(formats);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    if (cell != "obj" && cell != "csv" && cell != "json") {
      std::fprintf(stderr, "error: unknown format '%s'\n", cell.c_str());
      std::exit(1);
    }
    out.insert(cell);
  }
  return out;
}

SurfacePtr make_nonconical_surface(const Options& o) {
  ll_profile* f = nullptr;
  check(ll_profile_parse(o.profile.c_str(), &f));
  ll_surface* s = nullptr;
  const ll_status st = ll_surface_nonconical(f, o.u_range[0], o.u_range[1], o.v_range[0],
                                             o.v_range[1], o.ode_step, &s);
  ll_profile_free(f);
  check(st);
  return own(s);
}

SurfacePtr make_surface(const Options& o) {
  if (!o.input_csv.empty()) {
    ll_surface* s = nullptr;
    check(ll_surface_from_csv(o.input_csv.c_str(), &s));
    return own(s);
  }
  const std::string& name = o.surface;
  ll_surface* s = nullptr;
  if (name == "nonconical") return make_nonconical_surface(o);
  if (name == "plane") {
    const double inv_sqrt2 = 0.70710678118654752440;
    const double point[3] = {0, 0, 0};
    const double null_dir[3] = {inv_sqrt2, inv_sqrt2, 0};
    const double spacelike_dir[3] = {0, 0, 1};
    check(ll_surface_plane(point, null_dir, spacelike_dir, o.u_range[0], o.u_range[1],
                           o.v_range[0], o.v_range[1], &s));
    return own(s);
  }
  if (name == "cone" || name.rfind("cone:", 0) == 0) {
    double vertex[3] = {0, 0, 0};
    if (name.size() > 5) {
      const std::vector<double> p = parse_numbers(name.substr(5), ',');
      if (p.size() != 3) {
        std::fprintf(stderr, "error: cone vertex needs three coordinates\n");
        std::exit(1);
      }
      vertex[0] = p[0];
      vertex[1] = p[1];
      vertex[2] = p[2];
    }
    check(ll_surface_cone(vertex, o.u_range[0], o.u_range[1], o.v_range[0], o.v_range[1], &s));
    return own(s);
  }
  if (name.rfind("closedform:", 0) == 0) {
    check(ll_surface_closed_form(name.substr(11).c_str(), o.u_range[0], o.u_range[1],
                                 o.v_range[0], o.v_range[1], &s));
    return own(s);
  }
  if (name == "spacelike") {
    check(ll_surface_spacelike(o.u_range[0], o.u_range[1], o.v_range[0], o.v_range[1], &s));
    return own(s);
  }
  std::fprintf(stderr, "error: unknown surface '%s'\n", name.c_str());
  std::exit(1);
}

ReportPtr classify_surface(const ll_surface* s, const Options& o) {
  ll_classify_options co = ll_classify_options_default();
  if (o.fd_step > 0.0) co.fd_step = o.fd_step;
  co.tol_plane = o.tol_plane;
  co.tol_cone = o.tol_cone;
  ll_report* r = nullptr;
  check(ll_surface_classify(s, &co, &r));
  return own(r);
}

void print_verdict(const ll_report* r) {
  const char* verdict = nullptr;
  check(ll_report_verdict(r, &verdict));
  std::printf("verdict: %s\n", verdict);
}

int cmd_generate(const Options& o) {
  if (o.nu < 2 || o.nv < 2) {
    std::fprintf(stderr, "error: --nu/--nv must be at least 2\n");
    return 1;
  }
  const std::set<std::string> formats = parse_formats(o.formats);
  SurfacePtr s = make_nonconical_surface(o);
  ReportPtr r = classify_surface(s.get(), o);
  if (formats.count("obj"))
    check(ll_export_obj(s.get(), (o.out_dir + "/surface.obj").c_str(), o.nu, o.nv));
  if (formats.count("csv"))
    check(ll_export_csv(s.get(), r.get(), (o.out_dir + "/samples.csv").c_str()));
  if (formats.count("json"))
    check(ll_export_report(r.get(), (o.out_dir + "/report.json").c_str()));
  print_verdict(r.get());
  return 0;
}

int cmd_classify(const Options& o) {
  SurfacePtr s = make_surface(o);
  ReportPtr r = classify_surface(s.get(), o);
  if (parse_formats(o.formats).count("json"))
    check(ll_export_report(r.get(), (o.out_dir + "/report.json").c_str()));
  print_verdict(r.get());
  return 0;
}

int cmd_verify(const Options& o) {
  SurfacePtr s = make_surface(o);
  ll_verify_options vo = ll_verify_options_default();
  if (o.fd_step > 0.0) vo.fd_step = o.fd_step;
  ll_report* raw = nullptr;
  check(ll_surface_verify(s.get(), &vo, &raw));
  ReportPtr r = own(raw);
  if (parse_formats(o.formats).count("json"))
    check(ll_export_report(r.get(), (o.out_dir + "/report.json").c_str()));
  print_verdict(r.get());
  int pass = 0;
  check(ll_report_pass(r.get(), &pass));
  std::printf("verify: %s\n", pass ? "pass" : "FAIL");
  return pass ? 0 : 2;
}

void add_range_option(CLI::App* cmd, const char* flag, double (&range)[2],
                      const char* desc) {
  cmd->add_option_function<std::string>(
      flag,
      [&range, flag](const std::string& text) {
        const std::vector<double> r = parse_numbers(text, ':');
        if (r.size() != 2 || !(r[0] < r[1])) {
          std::fprintf(stderr, "error: %s expects a:b with a < b\n", flag);
          std::exit(1);
        }
        range[0] = r[0];
        range[1] = r[1];
      },
      desc);
}

void add_common(CLI::App* cmd, Options& o) {
  add_range_option(cmd, "--u-range", o.u_range, "u parameter range a:b");
  add_range_option(cmd, "--v-range", o.v_range, "v parameter range a:b");
  cmd->add_option("--nu", o.nu, "grid points in u");
  cmd->add_option("--nv", o.nv, "grid points in v");
  cmd->add_option("--step", o.ode_step, "ODE integration step")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--fd-step", o.fd_step, "finite-difference step")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-plane", o.tol_plane, "max |a1| for a Plane verdict");
  cmd->add_option("--tol-cone", o.tol_cone, "max |a2| for a Cone verdict");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--format", o.formats, "comma-separated outputs: obj,csv,json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lightlike surfaces: generation, classification, verification"};
  app.require_subcommand(1);
  Options o;

  CLI::App* gen = app.add_subcommand("generate", "integrate a surface from f and export it");
  gen->add_option("--f", o.profile, "profile spec: const:<k> | id | sin[:amp[:freq[:phase]]] | table:<path>");
  add_common(gen, o);

  CLI::App* cls = app.add_subcommand("classify", "classify a surface by its invariants");
  cls->add_option("--f", o.profile, "profile spec for --surface nonconical");
  cls->add_option("--surface", o.surface,
                  "builtin: plane | cone[:x,y,z] | nonconical | closedform:<f0|f1|fm1> | spacelike");
  cls->add_option("--in", o.input_csv, "CSV sample grid (columns u,v,x0,x1,x2)");
  add_common(cls, o);

  CLI::App* ver = app.add_subcommand("verify", "run the residual suites on a surface");
  ver->add_option("--f", o.profile, "profile spec for --surface nonconical");
  ver->add_option("--surface", o.surface,
                  "builtin: plane | cone[:x,y,z] | nonconical | closedform:<f0|f1|fm1> | spacelike");
  ver->add_option("--in", o.input_csv, "CSV sample grid (columns u,v,x0,x1,x2)");
  add_common(ver, o);

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) return cmd_generate(o);
  if (cls->parsed()) return cmd_classify(o);
  return cmd_verify(o);
}
