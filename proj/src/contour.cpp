#include "isoharmonic/contour.hpp"

#include "isoharmonic/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace isoharmonic {

namespace {

const cplx kPhase[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};

// prod_{j not in {skip1, skip2}} sqrt|x - a_j| and the upper-edge phase of v at x
double rest_abs(const Eigen::VectorXd& a, double x, Eigen::Index skip1, Eigen::Index skip2) {
  double p = 1.0;
  for (Eigen::Index j = 0; j < a.size(); ++j)
    if (j != skip1 && j != skip2) p *= std::sqrt(std::abs(x - a[j]));
  return p;
}

cplx phase_at(const Eigen::VectorXd& a, double x) {
  int above = 0;
  for (Eigen::Index j = 0; j < a.size(); ++j)
    if (a[j] > x) ++above;
  return kPhase[above % 4];
}

double tail_scale(const Eigen::VectorXd& a) {
  if (a.size() < 2) return 1.0;
  return std::max(1e-3, a[a.size() - 1] - a[a.size() - 2]);
}

double head_scale(const Eigen::VectorXd& a) {
  if (a.size() < 2) return 1.0;
  return std::max(1e-3, a[1] - a[0]);
}

}  // namespace

Eigen::Index locate(const RealCurve& c, double x) {
  const Eigen::VectorXd& a = c.points();
  Eigen::Index k = 0;
  while (k < a.size() && a[k] < x) ++k;
  return k - 1;
}

cplx edge_integral(const RealCurve& c, const Prefactor& f, Eigen::Index k, int nodes) {
  const Eigen::VectorXd& a = c.points();
  const double m = 0.5 * (a[k] + a[k + 1]), h = 0.5 * (a[k + 1] - a[k]);
  const cplx ph = kPhase[(a.size() - 1 - k) % 4];
  cplx s = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double x = m + h * std::cos(std::numbers::pi * (2.0 * j + 1.0) / (2.0 * nodes));
    s += f(cplx(x, 0.0)) / rest_abs(a, x, k, k + 1);
  }
  return s * (std::numbers::pi / nodes) / ph;
}

cplx tail_integral(const RealCurve& c, const Prefactor& f, int nodes) {
  const Eigen::VectorXd& a = c.points();
  const Eigen::Index last = a.size() - 1;
  const double l = tail_scale(a);
  const GaussRule& g = gauss_legendre(nodes);
  cplx s = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double x = g.x[j];
    const double sv = l * (1.0 + x) / (1.0 - x);
    const double z = a[last] + sv * sv;
    const double jac = 2.0 * l / ((1.0 - x) * (1.0 - x));
    s += g.w[j] * 2.0 * f(cplx(z, 0.0)) / rest_abs(a, z, last, -1) * jac;
  }
  return s;
}

cplx head_integral(const RealCurve& c, const Prefactor& f, int nodes) {
  const Eigen::VectorXd& a = c.points();
  const double l = head_scale(a);
  const GaussRule& g = gauss_legendre(nodes);
  const cplx ph = kPhase[a.size() % 4];
  cplx s = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double x = g.x[j];
    const double sv = l * (1.0 + x) / (1.0 - x);
    const double z = a[0] - sv * sv;
    const double jac = 2.0 * l / ((1.0 - x) * (1.0 - x));
    s += g.w[j] * 2.0 * f(cplx(z, 0.0)) / rest_abs(a, z, 0, -1) * jac;
  }
  return s / ph;
}

cplx gated(const std::function<cplx(int)>& rule, const QuadOptions& opt) {
  int n = opt.nodes;
  cplx prev = rule(n);
  while (2 * n <= opt.max_nodes) {
    cplx next = rule(2 * n);
    const bool ok = std::abs(next - prev) <= opt.gate * std::max(1.0, std::abs(next));
    prev = next;
    n *= 2;
    if (ok) break;
  }
  return prev;
}

cplx edge_integral(const RealCurve& c, const Prefactor& f, Eigen::Index k, const QuadOptions& opt) {
  return gated([&](int n) { return edge_integral(c, f, k, n); }, opt);
}

cplx tail_integral(const RealCurve& c, const Prefactor& f, const QuadOptions& opt) {
  return gated([&](int n) { return tail_integral(c, f, n); }, opt);
}

cplx head_integral(const RealCurve& c, const Prefactor& f, const QuadOptions& opt) {
  return gated([&](int n) { return head_integral(c, f, n); }, opt);
}

cplx from_branch_integral(const RealCurve& c, const Prefactor& f, Eigen::Index k, double x) {
  const Eigen::VectorXd& a = c.points();
  if (x == a[k]) return 0.0;
  const double dir = x > a[k] ? 1.0 : -1.0;
  const cplx ph = phase_at(a, x);
  const double S = std::sqrt(std::abs(x - a[k]));
  auto g = [&](double s) -> cplx {
    const double z = a[k] + dir * s * s;
    return 2.0 * f(cplx(z, 0.0)) / rest_abs(a, z, k, -1);
  };
  return dir * adaptive_legendre(g, 0.0, S) / ph;
}

cplx upper_edge_integral(const RealCurve& c, const Prefactor& f, double x, const QuadOptions& opt) {
  const Eigen::VectorXd& a = c.points();
  const Eigen::Index n = a.size();
  if (x == a[0]) return 0.0;
  const Eigen::Index k = locate(c, x);
  if (k < 0) return from_branch_integral(c, f, 0, x);
  cplx s = 0.0;
  if (k == n - 1) {
    for (Eigen::Index i = 0; i + 1 < n; ++i) s += edge_integral(c, f, i, opt);
    return s + from_branch_integral(c, f, n - 1, x);
  }
  for (Eigen::Index i = 0; i < k; ++i) s += edge_integral(c, f, i, opt);
  if (x == a[k + 1]) return s + edge_integral(c, f, k, opt);
  if (x - a[k] <= a[k + 1] - x) return s + from_branch_integral(c, f, k, x);
  return s + edge_integral(c, f, k, opt) + from_branch_integral(c, f, k + 1, x);
}

cplx path_integral(const RealCurve& c, const Prefactor& f, cplx z, const QuadOptions& opt) {
  if (z.imag() < 0) fail(ErrorKind::domain, "path_integral: lower half-plane");
  cplx s = upper_edge_integral(c, f, z.real(), opt);
  if (z.imag() == 0.0) return s;
  const double x = z.real();
  auto g = [&](double t) -> cplx {
    const cplx w(x, t * t);
    return 2.0 * t * f(w) / c.v(w) * cplx(0, 1);
  };
  return s + adaptive_legendre(g, 0.0, std::sqrt(z.imag()));
}

}  // namespace isoharmonic
