#include "isoharmonic/measures.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <numbers>

namespace isoharmonic {

namespace {

Eigen::VectorXcd solve_square(const Eigen::MatrixXcd& M, const Eigen::VectorXcd& rhs, const char* what) {
  if (M.rows() == 0) return Eigen::VectorXcd(0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& s = svd.singularValues();
  if (s[s.size() - 1] == 0.0 || s[0] / s[s.size() - 1] > 1e12) fail(ErrorKind::conditioning, what);
  return M.fullPivLu().solve(rhs);
}

double root_in(const PolyR& p, double lo, double hi) {
  auto f = [&](double x) { return poly_eval(p, x); };
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) fail(ErrorKind::convergence, "eta: no sign change of k in a gap");
  boost::uintmax_t it = 200;
  auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), it);
  return 0.5 * (r.first + r.second);
}

// w = (z - m)/(z - y0) sends y0 to infinity; m is the hull center, which keeps
// the image well scaled when y0 is far away.
struct Inversion {
  double m, y0;
  cplx operator()(cplx z) const { return (z - m) / (z - y0); }
  double operator()(double z) const { return (z - m) / (z - y0); }
};

Inversion inversion(const IntervalSystem& E, double y0) {
  if (E.contains(y0)) fail(ErrorKind::domain, "pole lies in E");
  // any m != y0 works; the endpoint farthest from y0 keeps the image well spread
  const double hi = E.c[0], lo = E.c[E.c.size() - 1];
  return {std::abs(hi - y0) >= std::abs(lo - y0) ? hi : lo, y0};
}

// Image of E and, for each interval of E, the label of its image.
std::pair<IntervalSystem, std::vector<int>> invert(const IntervalSystem& E, const Inversion& T) {
  Eigen::VectorXd w(E.c.size());
  for (Eigen::Index i = 0; i < E.c.size(); ++i) w[i] = T(E.c[i]);
  IntervalSystem F = IntervalSystem::from_endpoints(w);
  std::vector<int> label(E.d());
  for (int k = 1; k <= E.d(); ++k) {
    const double m = T(0.5 * (E.left(k) + E.right(k)));
    for (int kk = 1; kk <= F.d(); ++kk)
      if (m >= F.left(kk) && m <= F.right(kk)) label[k - 1] = kk;
  }
  return {F, label};
}

}  // namespace

EtaData eta(const IntervalSystem& E, const QuadOptions& opt) {
  const int d = E.d();
  if (d < 1) fail(ErrorKind::argument, "eta: empty interval system");
  const RealCurve c = E.curve();
  const Eigen::VectorXd a = c.points();
  Eigen::MatrixXcd M(d - 1, d - 1);
  Eigen::VectorXcd rhs(d - 1);
  for (int j = 0; j + 1 < d; ++j) {
    for (int m = 0; m < d; ++m) {
      const cplx I = edge_integral(c, [m](cplx z) { return std::pow(z, m); }, 2 * j + 1, opt);
      if (m + 1 < d)
        M(j, m) = I;
      else
        rhs[j] = -I;
    }
  }
  Eigen::VectorXcd sol = solve_square(M, rhs, "eta: gap system");
  EtaData out;
  out.k = PolyR::Zero(d);
  for (int m = 0; m + 1 < d; ++m) out.k[m] = sol[m].real();
  out.k[d - 1] = 1.0;
  out.gap_zeros.resize(d - 1);
  for (int j = 0; j + 1 < d; ++j) out.gap_zeros[j] = root_in(out.k, a[2 * j + 1], a[2 * j + 2]);
  return out;
}

Eigen::VectorXd equilibrium_measure(const IntervalSystem& E, const QuadOptions& opt) {
  const EtaData et = eta(E, opt);
  const RealCurve c = E.curve();
  const int d = E.d();
  const PolyC k = to_complex(et.k);
  Eigen::VectorXd out(d);
  for (int i = 0; i < d; ++i) {
    const cplx I = edge_integral(c, [&](cplx z) { return poly_eval(k, z); }, 2 * i, opt);
    out[d - 1 - i] = std::abs(I) / std::numbers::pi;
  }
  return out;
}

Eigen::VectorXd partial_sums(const Eigen::VectorXd& ascending_masses) {
  const Eigen::Index n = ascending_masses.size();
  Eigen::VectorXd f(std::max<Eigen::Index>(n - 1, 0));
  double s = 0.0;
  for (Eigen::Index j = 0; j + 1 < n; ++j) f[j] = s += ascending_masses[j];
  return f;
}

Eigen::VectorXd frequency_map(const IntervalSystem& E, const QuadOptions& opt) {
  return partial_sums(equilibrium_measure(E, opt).reverse());
}

EtaHatData eta_hat(const TCurveConfig& config, const QuadOptions& opt) {
  const int g = config.g;
  const double y0 = config.y0;
  const RealCurve c = config.curve();
  if (y0 >= c.points()[0]) fail(ErrorKind::contour, "eta_hat: y0 must lie left of the bands");
  Eigen::MatrixXcd M(g + 1, g + 1);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(g + 1);
  for (int j = 0; j < g; ++j)
    for (int m = 0; m <= g; ++m)
      M(j, m) = edge_integral(c, [m, y0](cplx z) { return std::pow(z, m) / (z - y0); }, 2 * j + 1, opt);
  for (int m = 0; m <= g; ++m) M(g, m) = std::pow(y0, m);
  rhs[g] = 1.0;
  // gap rows are an overall phase times a real row; rotate them real
  for (int j = 0; j < g; ++j) {
    Eigen::Index im;
    M.row(j).cwiseAbs().maxCoeff(&im);
    const cplx ph = M(j, im) / std::abs(M(j, im));
    M.row(j) /= ph;
  }
  Eigen::VectorXcd sol = solve_square(M, rhs, "eta_hat: gap system");
  EtaHatData out;
  out.h = sol.real();
  out.v0 = c.v_upper(y0);
  out.rep = {-out.v0 * to_complex(out.h), y0};
  return out;
}

HarmonicMeasures harmonic_measures(const TCurveConfig& config, const QuadOptions& opt) {
  const int g = config.g;
  const RealCurve c = config.curve();
  const EtaHatData eh = eta_hat(config, opt);
  const Prefactor f = eh.rep.as_prefactor();
  HarmonicMeasures out;
  out.masses.resize(g + 1);
  for (int i = 0; i < g; ++i) out.masses[i] = std::abs(edge_integral(c, f, 2 * i, opt)) / std::numbers::pi;
  out.masses[g] = std::abs(tail_integral(c, f, opt)) / std::numbers::pi;
  out.raw_sum = out.masses.sum();
  out.masses /= out.raw_sum;
  return out;
}

Eigen::VectorXd harmonic_frequencies(const TCurveConfig& config, const QuadOptions& opt) {
  return partial_sums(harmonic_measures(config, opt).masses);
}

Eigen::VectorXd harmonic_measures(const IntervalSystem& E, double y0, const QuadOptions& opt) {
  auto [F, label] = invert(E, inversion(E, y0));
  const Eigen::VectorXd mF = equilibrium_measure(F, opt);
  Eigen::VectorXd out(E.d());
  for (int k = 1; k <= E.d(); ++k) out[k - 1] = mF[label[k - 1] - 1];
  return out;
}

cplx green_function(const IntervalSystem& E, const EtaData& et, cplx z, const QuadOptions& opt) {
  const PolyC k = to_complex(et.k);
  return path_integral(E.curve(), [&](cplx w) { return poly_eval(k, w); }, z, opt);
}

cplx green_function(const IntervalSystem& E, cplx z, const QuadOptions& opt) {
  return green_function(E, eta(E, opt), z, opt);
}

cplx green_function(const IntervalSystem& E, cplx z, double y0, const QuadOptions& opt) {
  if (z == cplx(y0, 0.0)) fail(ErrorKind::pole, "green_function: z at the pole");
  const Inversion T = inversion(E, y0);
  const IntervalSystem F = invert(E, T).first;
  const cplx w = T(z);
  if (w.imag() <= 0.0) return std::conj(green_function(F, std::conj(w), opt));
  return green_function(F, w, opt);
}

cplx green_function(const TCurveConfig& config, const EtaHatData& eh, cplx z, const QuadOptions& opt) {
  if (z.real() <= config.y0) fail(ErrorKind::domain, "green_function: Re z must exceed y0");
  return path_integral(config.curve(), eh.rep.as_prefactor(), z, opt);
}

}  // namespace isoharmonic
