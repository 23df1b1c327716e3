#pragma once

#include <string>

#include <json.hpp>

#include "lightlike/classify.hpp"
#include "lightlike/surface.hpp"

namespace lightlike::io {

// Fixed 17-significant-digit decimal form (printf %.17g).
std::string format_double(double x);

// Writes via a temp file in the same directory, then renames into place.
void write_atomic(const std::string& path, const std::string& content);

// Mesh over an (nu x nv) grid of the surface domain. Vertex lines are
// "v x1 x2 x0" (vertical axis last), faces are quads.
std::string obj_mesh(const SurfaceModel& S, int nu, int nv);
void write_obj(const std::string& path, const SurfaceModel& S, int nu, int nv);

// One row per report grid point, header "u,v,x0,x1,x2,a1,a2,a4,f_rec,det_g".
std::string csv_samples(const SurfaceModel& S, const InvariantReport& R);
void write_csv(const std::string& path, const SurfaceModel& S, const InvariantReport& R);

// Classification report with the fixed key order: verdict, thresholds,
// residuals, then vertex (Cone) or f_table (NonConical).
nlohmann::ordered_json report_json(const InvariantReport& R);

void write_json(const std::string& path, const nlohmann::ordered_json& j);

// Surface from a CSV sample grid with (at least) columns u,v,x0,x1,x2 over a
// full rectangular grid. The sampler interpolates with nested natural cubic
// splines. Throws std::runtime_error on malformed input.
SurfaceModel load_csv_surface(const std::string& path);

}  // namespace lightlike::io
