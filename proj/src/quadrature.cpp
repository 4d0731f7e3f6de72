#include "isoharmonic/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace isoharmonic {

namespace {

GaussRule make_legendre(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

cplx legendre_panel(const std::function<cplx(double)>& f, double a, double b, int n) {
  const GaussRule& g = gauss_legendre(n);
  const double m = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx s = 0.0;
  for (int k = 0; k < n; ++k) s += g.w[k] * f(m + h * g.x[k]);
  return s * h;
}

cplx adaptive_rec(const std::function<cplx(double)>& f, double a, double b, cplx coarse,
                  double tol, int depth) {
  const double m = 0.5 * (a + b);
  cplx left = legendre_panel(f, a, m, 24), right = legendre_panel(f, m, b, 24);
  cplx fine = left + right;
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(fine - coarse) <= std::max(tol, floor)) return fine;
  return adaptive_rec(f, a, m, left, 0.5 * tol, depth - 1) +
         adaptive_rec(f, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_legendre(n)).first;
  return it->second;
}

std::vector<double> chebyshev_nodes(int n) {
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[k] = std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
  return x;
}

cplx gauss_chebyshev(const std::function<cplx(double)>& f, int n) {
  cplx s = 0.0;
  for (int k = 0; k < n; ++k) s += f(std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n)));
  return s * (std::numbers::pi / n);
}

cplx adaptive_legendre(const std::function<cplx(double)>& f, double a, double b, double tol,
                       int max_depth) {
  cplx coarse = legendre_panel(f, a, b, 48);
  return adaptive_rec(f, a, b, coarse, tol * std::max(1.0, std::abs(coarse)), max_depth);
}

}  // namespace isoharmonic
