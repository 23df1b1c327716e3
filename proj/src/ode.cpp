#include "lightlike/ode.hpp"

#include <algorithm>
#include <cmath>

namespace lightlike {

namespace {

bool all_finite(const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(y[i])) return false;
  return true;
}

void rk4_step(const OdeRhs& rhs, double v, double h, const double* y, double* out,
              std::vector<double>& k1, std::vector<double>& k2, std::vector<double>& k3,
              std::vector<double>& k4, std::vector<double>& tmp) {
  const std::size_t n = k1.size();
  rhs(v, y, k1.data());
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  rhs(v + 0.5 * h, tmp.data(), k2.data());
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  rhs(v + 0.5 * h, tmp.data(), k3.data());
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  rhs(v + h, tmp.data(), k4.data());
  for (std::size_t i = 0; i < n; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace

DenseTrajectory DenseTrajectory::from_samples(std::size_t dim, std::vector<double> nodes,
                                              std::vector<double> y, std::vector<double> yp) {
  DenseTrajectory t;
  if (nodes.empty() || y.size() != nodes.size() * dim || yp.size() != y.size())
    throw std::invalid_argument("DenseTrajectory::from_samples: size mismatch");
  t.dim_ = dim;
  t.nodes_ = std::move(nodes);
  t.y_ = std::move(y);
  t.yp_ = std::move(yp);
  return t;
}

DenseTrajectory DenseTrajectory::integrate(const OdeRhs& rhs, std::span<const double> y0,
                                           double v_lo, double v_hi, double step) {
  if (step <= 0.0) throw std::invalid_argument("DenseTrajectory: step must be positive");
  if (v_lo > 0.0 || v_hi < 0.0 || v_lo >= v_hi)
    throw std::invalid_argument("DenseTrajectory: v-range must contain 0");
  const std::size_t dim = y0.size();

  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  // One outward sweep; returns (nodes, states) excluding the origin node.
  auto sweep = [&](double v_end) {
    std::vector<double> nodes, states;
    if (v_end == 0.0) return std::pair{nodes, states};
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(v_end) / step)));
    const double h = v_end / n;
    std::vector<double> y(y0.begin(), y0.end());
    std::vector<double> ynext(dim);
    double v = 0.0;
    for (int i = 1; i <= n; ++i) {
      rk4_step(rhs, v, h, y.data(), ynext.data(), k1, k2, k3, k4, tmp);
      v = (i == n) ? v_end : h * i;
      if (!all_finite(ynext.data(), dim))
        throw IntegrationError("ODE integration blew up", v);
      y = ynext;
      nodes.push_back(v);
      states.insert(states.end(), y.begin(), y.end());
    }
    return std::pair{nodes, states};
  };

  auto [fnodes, fstates] = sweep(v_hi);
  auto [bnodes, bstates] = sweep(v_lo);

  DenseTrajectory t;
  t.dim_ = dim;
  const std::size_t total = bnodes.size() + 1 + fnodes.size();
  t.nodes_.reserve(total);
  t.y_.reserve(total * dim);
  for (std::size_t i = bnodes.size(); i-- > 0;) {
    t.nodes_.push_back(bnodes[i]);
    t.y_.insert(t.y_.end(), bstates.begin() + i * dim, bstates.begin() + (i + 1) * dim);
  }
  t.nodes_.push_back(0.0);
  t.y_.insert(t.y_.end(), y0.begin(), y0.end());
  t.nodes_.insert(t.nodes_.end(), fnodes.begin(), fnodes.end());
  t.y_.insert(t.y_.end(), fstates.begin(), fstates.end());

  t.yp_.resize(t.y_.size());
  for (std::size_t i = 0; i < t.nodes_.size(); ++i)
    rhs(t.nodes_[i], &t.y_[i * dim], &t.yp_[i * dim]);
  return t;
}

std::size_t DenseTrajectory::locate(double v) const {
  const double lo = nodes_.front(), hi = nodes_.back();
  const double slack = 1e-9 * std::max(1.0, std::abs(hi - lo));
  if (v < lo - slack || v > hi + slack)
    throw std::out_of_range("DenseTrajectory::eval: v outside integrated range");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), v);
  std::size_t k = static_cast<std::size_t>(it - nodes_.begin());
  k = std::clamp<std::size_t>(k, 1, nodes_.size() - 1);
  return k - 1;
}

void DenseTrajectory::eval(double v, double* out) const {
  const std::size_t i = locate(v);
  const double h = nodes_[i + 1] - nodes_[i];
  const double s = (v - nodes_[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double b0 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double b1 = s3 - 2.0 * s2 + s;
  const double b2 = -2.0 * s3 + 3.0 * s2;
  const double b3 = s3 - s2;
  const double* ya = &y_[i * dim_];
  const double* yb = &y_[(i + 1) * dim_];
  const double* pa = &yp_[i * dim_];
  const double* pb = &yp_[(i + 1) * dim_];
  for (std::size_t c = 0; c < dim_; ++c)
    out[c] = b0 * ya[c] + b1 * h * pa[c] + b2 * yb[c] + b3 * h * pb[c];
}

double DenseTrajectory::component(double v, std::size_t i) const {
  std::vector<double> buf(dim_);
  eval(v, buf.data());
  return buf[i];
}

SLBasis solve_sl_basis(const ProfileFunction& f, double v_lo, double v_hi, double step) {
  OdeRhs rhs = [f](double v, const double* y, double* dy) {
    const double fv = f(v);
    dy[0] = y[1];
    dy[1] = 0.5 * fv * y[0];
    dy[2] = y[3];
    dy[3] = 0.5 * fv * y[2];
    dy[4] = y[0] * y[0];
    dy[5] = y[0] * y[2];
    dy[6] = y[2] * y[2];
  };
  const double y0[7] = {1, 0, 0, 1, 0, 0, 0};
  return {DenseTrajectory::integrate(rhs, y0, v_lo, v_hi, step)};
}

double SLBasis::wronskian_drift() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.nodes().size(); ++i) {
    const double* y = traj.node_state(i);
    worst = std::max(worst, std::abs(y[0] * y[3] - y[2] * y[1] - 1.0));
  }
  return worst;
}

SLSolution solve_sturm_liouville(const ProfileFunction& f, double v_lo, double v_hi,
                                 double h0, double hp0, double step) {
  OdeRhs rhs = [f](double v, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = 0.5 * f(v) * y[0];
  };
  const double y0[2] = {h0, hp0};
  return {DenseTrajectory::integrate(rhs, y0, v_lo, v_hi, step)};
}

CanonicalInitialData canonical_initial_data(double f0) {
  constexpr double r = 0.7071067811865475244;  // 1/sqrt(2)
  CanonicalInitialData d;
  d.G0 = {r, r, 0.0};
  d.G0p = {r, r, 1.0};
  d.G0pp = {r * (f0 + 1.5), r * (f0 - 0.5), 1.0};
  return d;
}

double FrameCoefficients::frame_relation_drift() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < traj_.nodes().size(); ++i) {
    const double* y = traj_.node_state(i);
    const MVector g0{y[0], y[1], y[2]}, g1{y[3], y[4], y[5]}, g2{y[6], y[7], y[8]};
    worst = std::max(worst, std::abs(inner(g0, g0)));
    worst = std::max(worst, std::abs(inner(g0, g1)));
    worst = std::max(worst, std::abs(inner(g1, g1) - 1.0));
    worst = std::max(worst, std::abs(inner(g0, g2) - 1.0));
    worst = std::max(worst, std::abs(inner(g1, g2)));
    worst = std::max(worst, std::abs(inner(g2, g2)));
  }
  return worst;
}

FrameCoefficients integrate_frame_coefficients(const ProfileFunction& f, double v_lo,
                                               double v_hi, const MVector& G0_0,
                                               const MVector& G1_0, const MVector& G2_0,
                                               double step) {
  OdeRhs rhs = [f](double v, const double* y, double* dy) {
    const double fv = f(v);
    for (int c = 0; c < 3; ++c) {
      dy[c] = y[3 + c];                          // G0' = G1
      dy[3 + c] = fv * y[c] - y[6 + c];          // G1' = f G0 - G2
      dy[6 + c] = -fv * y[3 + c];                // G2' = -f G1
      dy[9 + c] = y[c];                          // I'  = G0
    }
  };
  const double y0[12] = {G0_0.x0, G0_0.x1, G0_0.x2, G1_0.x0, G1_0.x1, G1_0.x2,
                         G2_0.x0, G2_0.x1, G2_0.x2, 0.0,     0.0,     0.0};
  return {f, DenseTrajectory::integrate(rhs, y0, v_lo, v_hi, step)};
}

FrameCoefficients build_G0_via_sl(const ProfileFunction& f, double v_lo, double v_hi,
                                  const MVector& G0_0, const MVector& G0p_0,
                                  const MVector& G0pp_0, double step) {
  const SLBasis basis = solve_sl_basis(f, v_lo, v_hi, step);
  const double f0 = f(0.0);

  // Component j of G0 is alpha h1^2 + beta h1 h2 + gamma h2^2; the (value,
  // first, second derivative) map at v = 0 gives the coefficient system.
  Mat3 M;
  M.m[0][0] = 1.0; M.m[0][1] = 0.0; M.m[0][2] = 0.0;
  M.m[1][0] = 0.0; M.m[1][1] = 1.0; M.m[1][2] = 0.0;
  M.m[2][0] = f0;  M.m[2][1] = 0.0; M.m[2][2] = 2.0;
  MVector alpha, beta, gamma;
  for (int j = 0; j < 3; ++j) {
    const MVector c = M.solve({G0_0[j], G0p_0[j], G0pp_0[j]});
    alpha[j] = c.x0;
    beta[j] = c.x1;
    gamma[j] = c.x2;
  }

  const auto& nodes = basis.traj.nodes();
  std::vector<double> y(nodes.size() * 12), yp(nodes.size() * 12);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double* s = basis.traj.node_state(i);
    const double h1 = s[0], h1p = s[1], h2 = s[2], h2p = s[3];
    const double i11 = s[4], i12 = s[5], i22 = s[6];
    const double fv = f(nodes[i]);
    double* row = &y[i * 12];
    double* prow = &yp[i * 12];
    for (int j = 0; j < 3; ++j) {
      const double a = alpha[j], b = beta[j], g = gamma[j];
      const double g0 = a * h1 * h1 + b * h1 * h2 + g * h2 * h2;
      const double g1 = 2.0 * a * h1 * h1p + b * (h1p * h2 + h1 * h2p) + 2.0 * g * h2 * h2p;
      // f g0 - g0'' collapses to minus twice the derivative-square terms.
      const double g2 = -2.0 * (a * h1p * h1p + b * h1p * h2p + g * h2p * h2p);
      const double ii = a * i11 + b * i12 + g * i22;
      row[j] = g0;
      row[3 + j] = g1;
      row[6 + j] = g2;
      row[9 + j] = ii;
      prow[j] = g1;
      prow[3 + j] = fv * g0 - g2;
      prow[6 + j] = -fv * g1;
      prow[9 + j] = g0;
    }
  }
  return {f, DenseTrajectory::from_samples(12, nodes, std::move(y), std::move(yp))};
}

double max_coefficient_difference(const FrameCoefficients& a, const FrameCoefficients& b) {
  double worst = 0.0;
  double buf[12];
  for (double v : a.trajectory().nodes()) {
    if (v < b.v_min() || v > b.v_max()) continue;
    b.trajectory().eval(v, buf);
    const MVector db[4] = {a.G0(v) - MVector{buf[0], buf[1], buf[2]},
                           a.G1(v) - MVector{buf[3], buf[4], buf[5]},
                           a.G2(v) - MVector{buf[6], buf[7], buf[8]},
                           a.I(v) - MVector{buf[9], buf[10], buf[11]}};
    for (const MVector& d : db) worst = std::max(worst, d.inf_norm());
  }
  return worst;
}

double third_order_residual(const FrameCoefficients& G, const ProfileFunction& f) {
  const auto& nodes = G.trajectory().nodes();
  const std::size_t n = nodes.size();
  if (n < 5) return 0.0;

  // G0'' at the nodes via the identity f G0 - G2.
  std::vector<MVector> w(n), g0(n), g1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* s = G.trajectory().node_state(i);
    g0[i] = {s[0], s[1], s[2]};
    g1[i] = {s[3], s[4], s[5]};
    w[i] = f(nodes[i]) * g0[i] - MVector{s[6], s[7], s[8]};
  }

  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    // 5-point first-derivative stencil; requires locally uniform spacing
    // (the two RK sweeps may use slightly different steps near v = 0).
    const double h = nodes[i + 1] - nodes[i];
    bool uniform = true;
    for (int k = -2; k < 2; ++k)
      if (std::abs((nodes[i + k + 1] - nodes[i + k]) - h) > 1e-12 * std::max(1.0, std::abs(h)))
        uniform = false;
    if (!uniform) continue;
    const MVector g0ppp =
        (w[i - 2] - 8.0 * w[i - 1] + 8.0 * w[i + 1] - w[i + 2]) / (12.0 * h);
    const MVector res = g0ppp - 2.0 * f(nodes[i]) * g1[i] - f.derivative(nodes[i]) * g0[i];
    worst = std::max(worst, res.inf_norm());
  }
  return worst;
}

}  // namespace lightlike
