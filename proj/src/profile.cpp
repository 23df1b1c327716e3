#include "lightlike/profile.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lightlike {

ProfileFunction ProfileFunction::constant(double k) {
  ProfileFunction p;
  p.kind_ = Kind::Constant;
  p.k_ = k;
  std::ostringstream os;
  os << "const:" << k;
  p.spec_ = os.str();
  return p;
}

ProfileFunction ProfileFunction::identity() {
  ProfileFunction p;
  p.kind_ = Kind::Identity;
  p.spec_ = "id";
  return p;
}

ProfileFunction ProfileFunction::sinusoid(double amplitude, double frequency, double phase) {
  ProfileFunction p;
  p.kind_ = Kind::Sinusoid;
  p.amp_ = amplitude;
  p.freq_ = frequency;
  p.phase_ = phase;
  std::ostringstream os;
  os << "sin:" << amplitude << ":" << frequency << ":" << phase;
  p.spec_ = os.str();
  return p;
}

ProfileFunction ProfileFunction::table(std::vector<double> v, std::vector<double> f) {
  if (v.size() != f.size() || v.size() < 3)
    throw std::invalid_argument("ProfileFunction::table: need >= 3 matching samples");
  ProfileFunction p;
  p.kind_ = Kind::Table;
  // Centered differences on the table grid for f'; one-sided at the ends.
  std::vector<double> df(v.size());
  const std::size_t n = v.size();
  df[0] = (f[1] - f[0]) / (v[1] - v[0]);
  df[n - 1] = (f[n - 1] - f[n - 2]) / (v[n - 1] - v[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    df[i] = (f[i + 1] - f[i - 1]) / (v[i + 1] - v[i - 1]);
  p.table_ = std::make_shared<CubicSpline>(v, f);
  p.table_df_ = std::make_shared<CubicSpline>(std::move(v), std::move(df));
  p.spec_ = "table";
  return p;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& s, const std::string& ctx) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("profile spec: bad number '" + s + "' in " + ctx);
  }
}

ProfileFunction load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("profile table: cannot open " + path);
  std::vector<double> v, f;
  std::string line;
  while (std::getline(in, line)) {
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream ls(line);
    double a, b;
    if (ls >> a >> b) {
      v.push_back(a);
      f.push_back(b);
    }
  }
  if (v.size() < 3)
    throw std::invalid_argument("profile table: need >= 3 samples in " + path);
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1]))
      throw std::invalid_argument("profile table: v-grid must be strictly increasing");
  return ProfileFunction::table(std::move(v), std::move(f));
}

}  // namespace

ProfileFunction ProfileFunction::parse(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& head = parts[0];
  if (head == "const") {
    if (parts.size() != 2) throw std::invalid_argument("profile spec: const:<k>");
    return constant(parse_number(parts[1], spec));
  }
  if (head == "id") {
    if (parts.size() != 1) throw std::invalid_argument("profile spec: id takes no arguments");
    return identity();
  }
  if (head == "sin") {
    if (parts.size() > 4) throw std::invalid_argument("profile spec: sin[:amp[:freq[:phase]]]");
    const double amp = parts.size() > 1 ? parse_number(parts[1], spec) : 1.0;
    const double freq = parts.size() > 2 ? parse_number(parts[2], spec) : 1.0;
    const double phase = parts.size() > 3 ? parse_number(parts[3], spec) : 0.0;
    return sinusoid(amp, freq, phase);
  }
  if (head == "table") {
    if (parts.size() != 2) throw std::invalid_argument("profile spec: table:<path>");
    return load_table(parts[1]);
  }
  throw std::invalid_argument("profile spec: unknown variant '" + head + "'");
}

double ProfileFunction::operator()(double v) const {
  switch (kind_) {
    case Kind::Constant: return k_;
    case Kind::Identity: return v;
    case Kind::Sinusoid: return amp_ * std::sin(freq_ * v + phase_);
    case Kind::Table: return (*table_)(v);
  }
  return 0.0;
}

double ProfileFunction::derivative(double v) const {
  switch (kind_) {
    case Kind::Constant: return 0.0;
    case Kind::Identity: return 1.0;
    case Kind::Sinusoid: return amp_ * freq_ * std::cos(freq_ * v + phase_);
    case Kind::Table: return (*table_df_)(v);
  }
  return 0.0;
}

}  // namespace lightlike
