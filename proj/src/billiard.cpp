#include "isoharmonic/billiard.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>

namespace isoharmonic {

Eigen::VectorXd BilliardConfig::e() const {
  Eigen::VectorXd out(b.size() + alpha.size());
  out << b, alpha;
  std::sort(out.data(), out.data() + out.size());
  return out;
}

std::vector<EndpointType> BilliardConfig::caustic_side() const {
  std::vector<EndpointType> s;
  for (Eigen::Index k = 0; k < alpha.size(); ++k)
    s.push_back(alpha[k] > b[k] ? EndpointType::left : EndpointType::right);
  return s;
}

std::pair<double, double> BilliardConfig::segment(int i) const {
  const Eigen::VectorXd ev = e();
  if (i == 0) return {0.0, ev[0]};
  return {ev[2 * i - 1], ev[2 * i]};
}

void validate_billiard(const BilliardConfig& c) {
  const int d = c.d();
  if (d < 2 || c.alpha.size() != d - 1) fail(ErrorKind::argument, "billiard: need d >= 2 and d - 1 caustics");
  if (c.b[0] <= 0.0) fail(ErrorKind::argument, "billiard: b must be positive");
  for (int j = 0; j + 1 < d; ++j)
    if (c.b[j] >= c.b[j + 1]) fail(ErrorKind::argument, "billiard: b must be strictly ascending");
  const Eigen::VectorXd ev = c.e();
  for (Eigen::Index j = 0; j + 1 < ev.size(); ++j)
    if (ev[j] >= ev[j + 1]) fail(ErrorKind::argument, "billiard: parameters b, alpha must be distinct");
  if (ev[0] <= 0.0) fail(ErrorKind::argument, "billiard: caustic parameters must be positive");
  if (ev[2 * d - 2] != c.b[d - 1]) fail(ErrorKind::argument, "billiard: e_{2d-1} must be b_d");
  for (int j = 0; j + 1 < d; ++j)
    if (c.alpha[j] != ev[2 * j] && c.alpha[j] != ev[2 * j + 1])
      fail(ErrorKind::argument, "billiard: alpha_" + std::to_string(j + 1) + " is not e_{2j-1} or e_{2j}");
}

IntervalSystem reciprocal_system(const BilliardConfig& c) {
  validate_billiard(c);
  const Eigen::VectorXd ev = c.e();
  IntervalSystem E;
  E.c.resize(ev.size() + 1);
  for (Eigen::Index j = 0; j < ev.size(); ++j) E.c[j] = 1.0 / ev[j];
  E.c[ev.size()] = 0.0;
  return E;
}

HatData billiard_hat(const BilliardConfig& c) {
  validate_billiard(c);
  const int d = c.d();
  const int g = d - 1;
  if (c.alpha[0] >= c.b[0]) fail(ErrorKind::argument, "billiard: hat form needs alpha_1 < b_1");
  HatData h;
  h.x_hat.resize(g);
  h.u_hat.resize(g);
  const double bd = c.b[d - 1];
  for (int j = 1; j <= g; ++j) {
    h.x_hat[j - 1] = bd / c.b[d - 1 - j];
    h.u_hat[j - 1] = bd / c.alpha[d - 1 - j];
  }
  for (int j = 0; j + 1 < g; ++j)
    h.sigma.push_back(h.x_hat[j] < h.u_hat[j] ? EndpointType::left : EndpointType::right);
  return h;
}

BilliardConfig billiard_from_hat(const HatData& h, double bd) {
  const Eigen::Index g = h.x_hat.size();
  const Eigen::Index d = g + 1;
  BilliardConfig c;
  c.b.resize(d);
  c.alpha.resize(g);
  c.b[d - 1] = bd;
  for (Eigen::Index j = 1; j <= g; ++j) {
    c.b[d - 1 - j] = bd / h.x_hat[j - 1];
    c.alpha[d - 1 - j] = bd / h.u_hat[j - 1];
  }
  validate_billiard(c);
  return c;
}

Eigen::VectorXd jacobi_coords(const Eigen::VectorXd& p, const Eigen::VectorXd& b) {
  const Eigen::Index d = b.size();
  auto F = [&](double lam) {
    double s = -1.0;
    for (Eigen::Index k = 0; k < d; ++k) s += p[k] * p[k] / (b[k] - lam);
    return s;
  };
  Eigen::VectorXd lam(d);
  const double scale = b.cwiseAbs().maxCoeff();
  const double delta = 1e-15 * scale;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double lo = k == 0 ? b[0] - p.squaredNorm() - 1.0 : b[k - 1] + delta;
    const double hi = b[k] - delta;
    const double flo = F(lo), fhi = F(hi);
    if (flo >= 0.0) {
      lam[k] = lo;
    } else if (fhi <= 0.0) {
      lam[k] = b[k];
    } else {
      boost::uintmax_t it = 200;
      auto r = boost::math::tools::toms748_solve(F, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52),
                                                 it);
      lam[k] = 0.5 * (r.first + r.second);
    }
  }
  return lam;
}

Eigen::VectorXd point_from_jacobi(const Eigen::VectorXd& lam, const Eigen::VectorXd& b) {
  const Eigen::Index d = b.size();
  Eigen::VectorXd x(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    double num = 1.0, den = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) num *= b[k] - lam[i];
    for (Eigen::Index j = 0; j < d; ++j)
      if (j != k) den *= b[k] - b[j];
    x[k] = std::sqrt(std::max(0.0, num / den));
  }
  return x;
}

BilliardState tangent_start(const BilliardConfig& c, const Eigen::VectorXd& lambda_rest,
                            const std::vector<int>& signs) {
  validate_billiard(c);
  const Eigen::Index d = c.d();
  if (lambda_rest.size() != d - 1) fail(ErrorKind::argument, "tangent_start: need d - 1 Jacobi coordinates");
  Eigen::VectorXd lam(d);
  lam << 0.0, lambda_rest;
  for (Eigen::Index i = 1; i < d; ++i) {
    const auto [lo, hi] = c.segment(int(i));
    if (lam[i] < lo || lam[i] > hi) fail(ErrorKind::argument, "tangent_start: lambda outside its segment");
  }
  BilliardState s;
  s.point = point_from_jacobi(lam, c.b);
  s.direction = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double w = 1.0;
    for (Eigen::Index k = 0; k + 1 < d; ++k) w *= lam[i] - c.alpha[k];
    for (Eigen::Index j = 0; j < d; ++j)
      if (j != i) w /= lam[i] - lam[j];
    if (w < -1e-12) fail(ErrorKind::argument, "tangent_start: no real tangent direction");
    Eigen::VectorXd n = (s.point.array() / (c.b.array() - lam[i])).matrix();
    n.normalize();
    double sign = i == 0 ? -1.0 : 1.0;
    if (i > 0 && Eigen::Index(signs.size()) >= i && signs[i - 1] < 0) sign = -1.0;
    s.direction += sign * std::sqrt(std::max(0.0, w)) * n;
  }
  s.direction.normalize();
  return s;
}

double tangency_defect(const BilliardState& s, const Eigen::VectorXd& b, double alpha) {
  const Eigen::ArrayXd den = b.array() - alpha;
  const double A = (s.direction.array().square() / den).sum();
  const double B = (s.point.array() * s.direction.array() / den).sum();
  const double C = (s.point.array().square() / den).sum() - 1.0;
  return std::abs(B * B - A * C) / (B * B + std::abs(A * C) + 1e-300);
}

namespace {

// Coordinate whose segment has parameter value e_k (0-based) as an endpoint: e_0 -> lambda_1,
// e_1, e_2 -> lambda_2, ...
int owner_of(const Eigen::VectorXd& ev, double value) {
  Eigen::Index k = 0;
  for (; k < ev.size(); ++k)
    if (ev[k] == value) break;
  return int((k + 1) / 2);
}

// Sign of d lambda_i / ds along the line p + s v (F(lambda, x) = 0 differentiated implicitly).
int lambda_slope_sign(const Eigen::VectorXd& x, const Eigen::VectorXd& v, const Eigen::ArrayXd& b, double lam) {
  const double s = (x.array() * v.array() / (b - lam)).sum();
  return s > 0.0 ? -1 : (s < 0.0 ? 1 : 0);
}

constexpr int kMonitorSamples = 256;

}  // namespace

Trajectory simulate(const BilliardConfig& c, const BilliardState& start, int n_bounces) {
  validate_billiard(c);
  const Eigen::Index d = c.d();
  const Eigen::VectorXd ev = c.e();
  const Eigen::ArrayXd b = c.b.array();
  Trajectory tr;
  Eigen::VectorXd p = start.point, v = start.direction.normalized();
  tr.points.push_back(p);
  tr.directions.push_back(v);
  Eigen::VectorXi total = Eigen::VectorXi::Zero(d);
  for (int k = 0; k < n_bounces; ++k) {
    Eigen::VectorXi ev_count = Eigen::VectorXi::Zero(d);
    const double L = -2.0 * (p.array() * v.array() / b).sum() / (v.array().square() / b).sum();
    if (!(L > 0.0)) fail(ErrorKind::domain, "simulate: direction does not point inward");
    for (Eigen::Index j = 0; j + 1 < d; ++j) {
      const Eigen::ArrayXd den = b - c.alpha[j];
      const double A = (v.array().square() / den).sum();
      const double B = (p.array() * v.array() / den).sum();
      const double s = -B / A;
      if (s > 0.0 && s < L) ++ev_count[owner_of(ev, c.alpha[j])];
    }
    Eigen::VectorXi prev_sign = Eigen::VectorXi::Zero(d);
    Eigen::VectorXi monitored = Eigen::VectorXi::Zero(d);
    for (int q = 1; q < kMonitorSamples; ++q) {
      const Eigen::VectorXd x = p + (L * q / kMonitorSamples) * v;
      const Eigen::VectorXd lam = jacobi_coords(x, c.b);
      for (Eigen::Index i = 0; i < d; ++i) {
        const int sg = lambda_slope_sign(x, v, b, lam[i]);
        if (sg != 0 && prev_sign[i] != 0 && sg != prev_sign[i]) ++monitored[i];
        if (sg != 0) prev_sign[i] = sg;
      }
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      if (v[j] == 0.0) continue;
      const double s = -p[j] / v[j];
      if (s > 0.0 && s < L) ++ev_count[owner_of(ev, c.b[j])];
    }
    p += L * v;
    // back onto the ellipsoid
    p /= std::sqrt((p.array().square() / b).sum());
    const Eigen::VectorXd n = (p.array() / b).matrix().normalized();
    const Eigen::VectorXd vin = v;
    v = vin - 2.0 * vin.dot(n) * n;
    v.normalize();
    ++ev_count[0];
    ++monitored[0];
    if (monitored != ev_count) tr.monitor_agrees = false;
    const double ain = std::acos(std::clamp(vin.dot(n), -1.0, 1.0));
    const double aout = std::acos(std::clamp(v.dot(-n), -1.0, 1.0));
    tr.reflection_defect = std::max(tr.reflection_defect, std::abs(ain - aout));
    for (Eigen::Index j = 0; j + 1 < d; ++j)
      tr.tangency_drift = std::max(tr.tangency_drift, tangency_defect({p, v}, c.b, c.alpha[j]));
    if (tr.tangency_drift > 1e-7) fail(ErrorKind::conservation, "simulate: caustic tangency drifted");
    tr.points.push_back(p);
    tr.directions.push_back(v);
    tr.events.push_back(ev_count);
    total += ev_count;
  }
  tr.winding = total / 2;
  tr.closure_gap = (p - start.point).norm() + (v - start.direction.normalized()).norm();
  return tr;
}

BilliardPath deform_billiard(const BilliardConfig& config, const std::function<Eigen::VectorXd(double)>& b_path,
                             int steps, int n, const QuadOptions& opt) {
  const HatData hat0 = billiard_hat(config);
  if ((b_path(0.0) - config.b).cwiseAbs().maxCoeff() > 1e-12 * config.b.cwiseAbs().maxCoeff())
    fail(ErrorKind::argument, "deform_billiard: b_path(0) must match the configuration");
  const Eigen::Index d = config.d();
  auto x_path = [&](double s) {
    const Eigen::VectorXd b = b_path(s);
    Eigen::VectorXd x(d - 1);
    for (Eigen::Index j = 1; j < d; ++j) x[j - 1] = b[d - 1] / b[d - 1 - j];
    return x;
  };
  TCurveConfig start = normalize(hat0);
  DeformationPath dp = integrate_path(start, x_path, steps, PolePolicy::pinned_at_infinity, {}, opt);
  BilliardPath out;
  out.complete = dp.complete;
  out.diagnostic = dp.diagnostic;
  for (const PathStep& st : dp.steps) {
    BilliardStep bs;
    bs.config = billiard_from_hat(st.hat, b_path(st.s)[d - 1]);
    bs.certificate = chebyshev_poly(reciprocal_system(bs.config), n, opt);
    out.steps.push_back(std::move(bs));
  }
  return out;
}

BilliardConfig five_periodic_config(const QuadOptions& opt) {
  HatData guess;
  guess.x_hat = Eigen::Vector2d(2.621, 3.107);
  guess.u_hat = Eigen::Vector2d(1.679, 3.393);
  guess.sigma = {EndpointType::right};
  const InversionResult r = invert_frequencies(guess, Eigen::Vector2d(0.4, 0.8), {}, opt);
  return billiard_from_hat(r.hat, 1.0);
}

}  // namespace isoharmonic
