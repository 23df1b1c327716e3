#include "lightlike/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lightlike/cubic_spline.hpp"

namespace lightlike::io {

namespace fs = std::filesystem;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string obj_mesh(const SurfaceModel& S, int nu, int nv) {
  if (nu < 2 || nv < 2) throw std::invalid_argument("obj_mesh: grid must be at least 2x2");
  const Domain& d = S.domain();
  std::ostringstream out;
  for (int i = 0; i < nu; ++i) {
    const double u = d.u_min + d.u_span() * i / (nu - 1);
    for (int j = 0; j < nv; ++j) {
      const double v = d.v_min + d.v_span() * j / (nv - 1);
      const MVector x = S.sample(u, v);
      out << "v " << format_double(x.x1) << ' ' << format_double(x.x2) << ' '
          << format_double(x.x0) << '\n';
    }
  }
  for (int i = 0; i + 1 < nu; ++i)
    for (int j = 0; j + 1 < nv; ++j) {
      const int a = i * nv + j + 1;  // OBJ indices are 1-based
      out << "f " << a << ' ' << a + 1 << ' ' << a + nv + 1 << ' ' << a + nv << '\n';
    }
  return out.str();
}

void write_obj(const std::string& path, const SurfaceModel& S, int nu, int nv) {
  write_atomic(path, obj_mesh(S, nu, nv));
}

std::string csv_samples(const SurfaceModel& S, const InvariantReport& R) {
  std::ostringstream out;
  out << "u,v,x0,x1,x2,a1,a2,a4,f_rec,det_g\n";
  for (const PointInvariants& p : R.points) {
    const MVector x = S.sample(p.u, p.v);
    out << format_double(p.u) << ',' << format_double(p.v) << ','
        << format_double(x.x0) << ',' << format_double(x.x1) << ','
        << format_double(x.x2) << ',' << format_double(p.a1) << ','
        << format_double(p.a2) << ',' << format_double(p.a4) << ','
        << format_double(p.f_rec) << ',' << format_double(p.det_g) << '\n';
  }
  return out.str();
}

void write_csv(const std::string& path, const SurfaceModel& S, const InvariantReport& R) {
  write_atomic(path, csv_samples(S, R));
}

nlohmann::ordered_json report_json(const InvariantReport& R) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(R.verdict);
  j["thresholds"] = {{"tol_plane", R.options.tol_plane},
                     {"tol_cone", R.options.tol_cone},
                     {"tol_degenerate", R.options.tol_degenerate},
                     {"fd_step", R.options.fd_step}};
  j["residuals"] = {{"max_rel_degeneracy", R.max_rel_degeneracy},
                    {"max_frame_violation", R.max_frame_violation},
                    {"max_abs_a1", R.max_abs_a1},
                    {"min_abs_a1", R.min_abs_a1},
                    {"max_abs_a2", R.max_abs_a2},
                    {"min_abs_a2", R.min_abs_a2},
                    {"max_da2_defect", R.max_da2_defect},
                    {"max_da4_defect", R.max_da4_defect}};
  if (R.verdict == Verdict::Cone) {
    j["vertex"] = {{"point", {R.vertex.x0, R.vertex.x1, R.vertex.x2}},
                   {"spread", R.vertex_spread}};
  }
  if (R.verdict == Verdict::NonConical) {
    auto table = nlohmann::ordered_json::array();
    for (const auto& s : R.f_table)
      table.push_back({{"v", s.v}, {"f", s.f}, {"v_canonical", s.v_canonical}});
    j["f_table"] = std::move(table);
  }
  return j;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  write_atomic(path, j.dump(2) + "\n");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

// Grid samples of one coordinate with row splines along v, then a spline
// across the rows at evaluation time.
struct GridComponent {
  std::vector<double> us;
  std::vector<CubicSpline> rows;  // one per u, over v

  double eval(double u, double v) const {
    std::vector<double> col(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) col[i] = rows[i](v);
    return CubicSpline(us, std::move(col))(u);
  }
};

}  // namespace

SurfaceModel load_csv_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = split_csv_line(line);
  int col[5] = {-1, -1, -1, -1, -1};
  const char* names[5] = {"u", "v", "x0", "x1", "x2"};
  for (std::size_t i = 0; i < header.size(); ++i)
    for (int k = 0; k < 5; ++k)
      if (header[i] == names[k]) col[k] = static_cast<int>(i);
  for (int k = 0; k < 5; ++k)
    if (col[k] < 0)
      throw std::runtime_error(path + ": missing column " + names[k]);

  std::map<double, std::map<double, MVector>> grid;  // u -> v -> x
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    double val[5];
    for (int k = 0; k < 5; ++k) {
      if (static_cast<std::size_t>(col[k]) >= cells.size())
        throw std::runtime_error(path + ": short row at line " + std::to_string(line_no));
      try {
        val[k] = std::stod(cells[col[k]]);
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": bad number at line " + std::to_string(line_no));
      }
    }
    grid[val[0]][val[1]] = {val[2], val[3], val[4]};
  }
  if (grid.size() < 4) throw std::runtime_error(path + ": need at least 4 distinct u values");

  const std::size_t nv = grid.begin()->second.size();
  if (nv < 4) throw std::runtime_error(path + ": need at least 4 distinct v values");
  std::vector<double> us;
  auto comps = std::make_shared<std::array<GridComponent, 3>>();
  for (const auto& [u, row] : grid) {
    if (row.size() != nv) throw std::runtime_error(path + ": ragged sample grid");
    us.push_back(u);
    std::vector<double> vs;
    std::vector<double> y[3];
    for (const auto& [v, x] : row) {
      vs.push_back(v);
      for (int k = 0; k < 3; ++k) y[k].push_back(x[k]);
    }
    for (int k = 0; k < 3; ++k) (*comps)[k].rows.emplace_back(vs, std::move(y[k]));
  }
  for (int k = 0; k < 3; ++k) (*comps)[k].us = us;

  Domain d;
  d.u_min = us.front();
  d.u_max = us.back();
  d.v_min = grid.begin()->second.begin()->first;
  d.v_max = grid.begin()->second.rbegin()->first;
  return {SurfaceModel::Kind::Custom, d,
          [comps](double u, double v) {
            return MVector{(*comps)[0].eval(u, v), (*comps)[1].eval(u, v),
                           (*comps)[2].eval(u, v)};
          },
          "csv:" + path};
}

}  // namespace lightlike::io
