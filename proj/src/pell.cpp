#include "isoharmonic/pell.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

namespace isoharmonic {

namespace {

constexpr int kSamplesPerInterval = 512;

// Real roots of p (companion matrix eigenvalues), ascending.
std::vector<double> real_roots(const PolyR& p_in) {
  const PolyR p = poly_trim(p_in);
  const Eigen::Index n = p.size() - 1;
  std::vector<double> out;
  if (n < 1) return out;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) C(0, k) = -p[n - 1 - k] / p[n];
  for (Eigen::Index k = 1; k < n; ++k) C(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  const double scale = std::max(1.0, C.cwiseAbs().maxCoeff());
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx r = es.eigenvalues()[k];
    if (std::abs(r.imag()) <= 1e-7 * scale) out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Square root of a polynomial with positive leading coefficient, by Newton iteration
// Q <- (Q + S/Q)/2 on the reversed power series.
PolyR poly_sqrt(const PolyR& S) {
  const Eigen::Index deg = S.size() - 1;
  if (deg % 2 != 0 || S[deg] <= 0.0) fail(ErrorKind::degenerate, "poly_sqrt: odd degree or negative leading term");
  const Eigen::Index m = deg / 2 + 1;  // number of coefficients of Q
  Eigen::VectorXd r = S.reverse().head(m);
  auto series_inverse = [](const Eigen::VectorXd& a, Eigen::Index len) {
    Eigen::VectorXd b = Eigen::VectorXd::Zero(len);
    b[0] = 1.0 / a[0];
    for (Eigen::Index k = 1; k < len; ++k) {
      double s = 0.0;
      for (Eigen::Index j = 1; j <= k && j < a.size(); ++j) s += a[j] * b[k - j];
      b[k] = -s / a[0];
    }
    return b;
  };
  auto series_mul = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b, Eigen::Index len) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(len);
    for (Eigen::Index i = 0; i < std::min(len, a.size()); ++i)
      for (Eigen::Index j = 0; i + j < len && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  Eigen::VectorXd q = Eigen::VectorXd::Zero(m);
  q[0] = std::sqrt(r[0]);
  for (Eigen::Index len = 1; len < m;) {
    len = std::min(2 * len, m);
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXd inv = series_inverse(q.head(len), len);
      const Eigen::VectorXd sq = series_mul(r.head(len), inv, len);
      q.head(len) = 0.5 * (q.head(len) + sq);
    }
  }
  return q.reverse();
}

std::vector<std::pair<double, double>> bands_of(const IntervalSystem& E) {
  std::vector<std::pair<double, double>> b;
  for (int k = 1; k <= E.d(); ++k) b.emplace_back(E.left(k), E.right(k));
  return b;
}

}  // namespace

std::optional<RegularData> detect_regular(const Eigen::VectorXd& f, int q_max, double tol) {
  long n = 1;
  std::vector<std::pair<long, long>> frac;
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    double x = f[j];
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    bool found = false;
    for (int it = 0; it < 64; ++it) {
      const double a = std::floor(x);
      const long p2 = long(a) * p1 + p0, q2 = long(a) * q1 + q0;
      if (q2 > q_max) break;
      if (std::abs(f[j] - double(p2) / double(q2)) <= tol) {
        frac.emplace_back(p2, q2);
        found = true;
        break;
      }
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      const double rest = x - a;
      if (rest < 1e-300) break;
      x = 1.0 / rest;
    }
    if (!found) return std::nullopt;
    n = std::lcm(n, frac.back().second);
    if (n > q_max) return std::nullopt;
  }
  RegularData out;
  out.n = int(n);
  const Eigen::Index d = f.size() + 1;
  out.winding.resize(d);
  out.winding[0] = int(n);
  for (Eigen::Index k = 1; k < d; ++k) {
    const auto& [p, q] = frac[d - 1 - k];
    out.winding[k] = int(p * (n / q));
  }
  return out;
}

cplx akhiezer(const IntervalSystem& E, const EtaData& et, int n, cplx z, const QuadOptions& opt) {
  if (z.imag() < 0.0) return std::conj(akhiezer(E, et, n, std::conj(z), opt));
  const cplx G = green_function(E, et, z, opt);
  return std::exp(double(n) * (G + cplx(0.0, std::numbers::pi)));
}

cplx akhiezer(const IntervalSystem& E, int n, cplx z, const QuadOptions& opt) {
  const Eigen::VectorXd f = frequency_map(E, opt);
  for (Eigen::Index j = 0; j < f.size(); ++j)
    if (std::abs(n * f[j] - std::round(n * f[j])) > 1e-7) fail(ErrorKind::regularity, "akhiezer: E is not n-regular");
  return akhiezer(E, eta(E, opt), n, z, opt);
}

PellCertificate pell_residual(const PolyR& P_in, const IntervalSystem& E) {
  const PolyR P = poly_trim(P_in);
  const int d = E.d();
  const int n = int(P.size()) - 1;
  if (n < d) fail(ErrorKind::argument, "pell_residual: deg P < d");
  const PolyR delta = E.curve().delta_poly();
  PolyR num = poly_mul(P, P);
  num[0] -= 1.0;
  PolyR quo, rem;
  poly_divmod(num, delta, quo, rem);
  PellCertificate c;
  c.n = n;
  c.P = P;
  const double scale = std::max(1.0, num.cwiseAbs().maxCoeff());
  c.division_remainder = rem.cwiseAbs().maxCoeff() / scale;
  c.Q = poly_sqrt(quo);
  PolyR q2 = poly_mul(c.Q, c.Q);
  c.sqrt_defect = (q2 - quo).cwiseAbs().maxCoeff() / std::max(1.0, quo.cwiseAbs().maxCoeff());

  const Eigen::VectorXd a = E.ascending();
  double res = 0.0;
  for (Eigen::Index k = 0; k + 1 < a.size(); ++k) {
    for (int s = 0; s <= kSamplesPerInterval; ++s) {
      const double x = a[k] + (a[k + 1] - a[k]) * s / kSamplesPerInterval;
      const double pv = poly_eval(P, x), qv = poly_eval(c.Q, x);
      res = std::max(res, std::abs(pv * pv - poly_eval(delta, x) * qv * qv - 1.0));
    }
  }
  c.residual = res;

  const auto zeros = real_roots(c.Q);
  c.signature = Eigen::VectorXi::Zero(d);
  for (int k = 1; k <= d; ++k)
    for (double z : zeros)
      if (z >= E.left(k) && z <= E.right(k)) ++c.signature[k - 1];
  c.winding.resize(d);
  c.winding[0] = n;
  for (int j = 0; j + 1 < d; ++j) c.winding[j + 1] = c.winding[j] - c.signature[j] - 1;
  c.winding_consistent = c.winding[d - 1] - c.signature[d - 1] - 1 == 0;
  return c;
}

PellCertificate chebyshev_poly(const IntervalSystem& E, int n, const QuadOptions& opt) {
  const Eigen::VectorXd f = frequency_map(E, opt);
  for (Eigen::Index j = 0; j < f.size(); ++j)
    if (std::abs(n * f[j] - std::round(n * f[j])) > 1e-7)
      fail(ErrorKind::regularity, "chebyshev_poly: E is not n-regular");
  if (n < E.d()) fail(ErrorKind::argument, "chebyshev_poly: n < d");
  const EtaData et = eta(E, opt);
  const double lo = E.c[E.c.size() - 1], hi = E.c[0];
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  const int m = n + 1;
  Eigen::VectorXd vals(m), ts(m);
  for (int k = 0; k < m; ++k) {
    ts[k] = std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * m));
    const cplx A = akhiezer(E, et, n, cplx(mid + half * ts[k], 1e-12), opt);
    vals[k] = (0.5 * (A + 1.0 / A)).real();
  }
  // Chebyshev coefficients by discrete orthogonality, then the monomial form in z.
  PolyR tpoly(2);
  tpoly << -mid / half, 1.0 / half;
  PolyR Tprev = PolyR::Constant(1, 1.0), Tcur = tpoly;
  PolyR P = PolyR::Zero(1);
  for (int j = 0; j <= n; ++j) {
    double cj = 0.0;
    for (int k = 0; k < m; ++k) cj += vals[k] * std::cos(j * std::acos(ts[k]));
    cj *= (j == 0 ? 1.0 : 2.0) / m;
    const PolyR& Tj = j == 0 ? Tprev : Tcur;
    P = poly_add<double>(P, cj * Tj);
    if (j >= 1) {
      PolyR next = poly_add<double>(2.0 * poly_mul(tpoly, Tcur), -Tprev);
      Tprev = Tcur;
      Tcur = next;
    }
  }
  PellCertificate c = pell_residual(P, E);
  if (c.division_remainder > 1e-8) fail(ErrorKind::regularity, "chebyshev_poly: P^2 - 1 is not divisible by Delta");
  if (c.sqrt_defect > 1e-8) fail(ErrorKind::degenerate, "chebyshev_poly: quotient is not a square");
  return c;
}

int equioscillation_count(const PolyR& P, const IntervalSystem& E, double tol) {
  const auto crit = real_roots(poly_deriv(P));
  int count = 0;
  for (const auto& [l, r] : bands_of(E)) {
    std::vector<double> pts{l};
    for (double z : crit)
      if (z > l && z < r) pts.push_back(z);
    pts.push_back(r);
    std::sort(pts.begin(), pts.end());
    int prev = 0;
    for (double z : pts) {
      const double v = poly_eval(P, z);
      if (std::abs(std::abs(v) - 1.0) > tol) continue;
      const int s = v > 0 ? 1 : -1;
      if (prev == s) return -1;
      prev = s;
      ++count;
    }
  }
  return count;
}

Eigen::VectorXd gap_critical_points(const PolyR& P, const IntervalSystem& E) {
  const auto crit = real_roots(poly_deriv(P));
  const Eigen::VectorXd a = E.ascending();
  std::vector<double> out;
  for (Eigen::Index j = 1; j + 1 < a.size(); j += 2)
    for (double z : crit)
      if (z > a[j] && z < a[j + 1]) out.push_back(z);
  return Eigen::Map<Eigen::VectorXd>(out.data(), Eigen::Index(out.size()));
}

}  // namespace isoharmonic
