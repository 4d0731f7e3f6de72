#include "isoharmonic/schlesinger.hpp"

#include "isoharmonic/bell.hpp"
#include "isoharmonic/deform.hpp"

#include <cmath>

namespace isoharmonic {

namespace {

Eigen::Matrix2cd comm(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) { return a * b - b * a; }

// l-th central difference of f at y, Richardson-extrapolated from steps h and h/2.
cplx central_derivative(const std::function<cplx(double)>& f, double y, int l, double h) {
  if (l == 0) return f(y);
  auto diff = [&](double s) {
    cplx acc = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= l; ++k) {
      acc += (k % 2 ? -binom : binom) * f(y + (0.5 * l - k) * s);
      binom = binom * (l - k) / (k + 1);
    }
    return acc / std::pow(s, l);
  };
  return (4.0 * diff(0.5 * h) - diff(h)) / 3.0;
}

// Coefficient c_n of the expansion of p/q at y (q(y) != 0).
cplx taylor_ratio(const PolyC& p, const PolyC& q, double y, int n) {
  auto shifted = [y](const PolyC& a, int len) {
    // coefficients of a(y + s) in s, up to s^{len-1}
    PolyC out = PolyC::Zero(len);
    PolyC d = a;
    double fact = 1.0;
    for (int k = 0; k < len; ++k) {
      out[k] = d.size() ? poly_eval(d, cplx(y)) / fact : cplx(0.0);
      d = poly_deriv(d);
      fact *= (k + 1);
    }
    return out;
  };
  PolyC ps = shifted(p, n + 1), qs = shifted(q, n + 1);
  PolyC r = PolyC::Zero(n + 1);
  for (int k = 0; k <= n; ++k) {
    cplx s = ps[k];
    for (int j = 1; j <= k; ++j) s -= qs[j] * r[k - j];
    r[k] = s / qs[0];
  }
  return r[n];
}

// d/du (p/q) at y.
cplx ratio_derivative(const PolyC& p, const PolyC& q, double y) { return taylor_ratio(p, q, y, 1); }

}  // namespace

Eigen::Matrix2cd ResidueSet::matrix(Eigen::Index j) const {
  Eigen::Matrix2cd m;
  m << A11[j], A12[j], A21[j], -A11[j];
  return m;
}

Eigen::Matrix2cd ResidueSet::sum() const {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  for (Eigen::Index j = 0; j < size(); ++j) s += matrix(j);
  return s;
}

ResidueSet residue_matrices(const TCurveConfig& config, const OmegaData& om, cplx t) {
  const int g = config.g;
  const RealCurve c = config.curve();
  ResidueSet r;
  r.points = c.points();
  r.t = t;
  r.omega_inf = omega_eval_infinity(config, om);
  r.phi_q0 = phi_eval_regular(config, config.y0);
  for (int i = 0; i < g; ++i) r.x_index.push_back(config.index_of_x(i));
  for (int m = 0; m + 1 < g; ++m) r.u_index.push_back(config.index_of_u(m));
  const Eigen::Index n = r.points.size();
  r.A11.resize(n);
  r.A12.resize(n);
  r.A21.resize(n);
  r.beta.resize(n);
  std::vector<cplx> dl(g);
  for (int l = 0; l < g; ++l) dl[l] = phi_inv_derivative(config, l);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = r.points[j];
    const double ay = a - config.y0;
    r.A12[j] = t / 4.0 * omega_eval_branch(config, om, j) * phi_eval_branch(c, j) * std::pow(ay, g);
    if (std::abs(r.A12[j]) < 1e-300) fail(ErrorKind::degenerate, "A12 vanishes at a branch point");
    cplx s = 0.0;
    double fact = 1.0;
    for (int l = 0; l < g; ++l) {
      if (l > 0) fact *= l;
      s += dl[l] / (fact * std::pow(ay, g - l));
    }
    r.beta[j] = r.A12[j] * (s - 0.5 * g * r.omega_inf);
    r.A11[j] = -0.25 - double(g) / (2.0 * t) * r.beta[j];
    r.A21[j] = (1.0 / 16.0 - r.A11[j] * r.A11[j]) / r.A12[j];
  }
  return r;
}

ResidueSet residue_matrices(const TCurveConfig& config, cplx t, const QuadOptions& opt) {
  return residue_matrices(config, omega_third_kind(config, opt), t);
}

Eigen::VectorXcd betas_by_differentiation(const TCurveConfig& config, const ResidueSet& r, double h) {
  const int g = config.g;
  const RealCurve c = config.curve();
  Eigen::VectorXcd out(r.size());
  double fact = 1.0;
  for (int l = 2; l < g; ++l) fact *= l;
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    const double a = r.points[j];
    auto f = [&](double y) { return c.v_upper(y) / (a - y); };
    const cplx d = central_derivative(f, config.y0, g - 1, h) / fact;
    out[j] = r.A12[j] * (d - 0.5 * g * r.omega_inf);
  }
  return out;
}

RhsSet constrained_rhs(const ResidueSet& r, const Eigen::MatrixXcd& du_dx, int i) {
  const Eigen::Index n = r.size();
  const int xi = r.x_index.at(i);
  std::vector<int> u_of(n, -1);
  for (std::size_t m = 0; m < r.u_index.size(); ++m) u_of[r.u_index[m]] = int(m);
  std::vector<Eigen::Matrix2cd> A(n);
  for (Eigen::Index j = 0; j < n; ++j) A[j] = r.matrix(j);
  const auto& a = r.points;
  RhsSet out;
  out.self = xi;
  out.rhs.assign(n, Eigen::Matrix2cd::Zero());
  Eigen::Matrix2cd total = Eigen::Matrix2cd::Zero();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == xi) continue;
    Eigen::Matrix2cd d = comm(A[xi], A[j]) / (a[xi] - a[j]);
    const int mj = u_of[j];
    for (std::size_t k = 0; k < r.u_index.size(); ++k) {
      const int uk = r.u_index[k];
      if (uk == j) continue;
      d += comm(A[uk], A[j]) / (a[uk] - a[j]) * du_dx(k, i);
    }
    if (mj >= 0) {
      Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
      for (Eigen::Index l = 0; l < n; ++l)
        if (l != j) s += comm(A[l], A[j]) / (a[l] - a[j]);
      d -= du_dx(mj, i) * s;
    }
    out.rhs[j] = d;
    total += d;
  }
  out.rhs[xi] = -total;
  Eigen::Matrix2cd self = Eigen::Matrix2cd::Zero();
  for (Eigen::Index j = 0; j < n; ++j)
    if (j != xi) self -= comm(A[xi], A[j]) / (a[xi] - a[j]);
  for (std::size_t k = 0; k < r.u_index.size(); ++k) {
    const int uk = r.u_index[k];
    self += comm(A[uk], A[xi]) / (a[uk] - a[xi]) * du_dx(k, i);
  }
  out.self_direct = self;
  return out;
}

SchlesingerReport verify_schlesinger(const TCurveConfig& config, cplx t, int i, double h, const QuadOptions& opt) {
  if (i < 0 || i >= config.g) fail(ErrorKind::argument, "verify_schlesinger: direction out of range");
  const Eigen::VectorXd target = harmonic_frequencies(config, opt);
  const DependentDerivatives dd = dependent_derivatives(config, opt);
  const ResidueSet r0 = residue_matrices(config, t, opt);
  const RhsSet rhs = constrained_rhs(r0, dd.du_dx, i);
  NewtonOptions nopt;
  nopt.tol = 1e-13;
  auto at = [&](double s) {
    Eigen::VectorXd x = config.x;
    x[i] += s;
    const Eigen::VectorXd u = config.u + s * dd.du_dx.col(i).real();
    const double y0 = config.y0 + s * dd.dy0_dx[i].real();
    TCurveConfig c = invert_frequencies(x, config.sigma, target, u, y0, nopt, opt).config;
    c.c_hat1 = config.c_hat1;
    c.c_hat2 = config.c_hat2;
    return residue_matrices(c, t, opt);
  };
  const ResidueSet rp = at(h), rm = at(-h);
  SchlesingerReport rep;
  rep.direction = i;
  rep.h = h;
  rep.entry_residual.resize(r0.size(), 4);
  for (Eigen::Index j = 0; j < r0.size(); ++j) {
    const Eigen::Matrix2cd fd = (rp.matrix(j) - rm.matrix(j)) / (2.0 * h);
    const Eigen::Matrix2cd e = fd - rhs.rhs[j];
    for (int q = 0; q < 4; ++q) rep.entry_residual(j, q) = std::abs(e(q / 2, q % 2));
  }
  rep.residual = rep.entry_residual.maxCoeff();
  rep.self_form_gap = (rhs.self_direct - rhs.rhs[rhs.self]).cwiseAbs().maxCoeff();
  return rep;
}

double IdentityReport::max_defect() const {
  double m = 0.0;
  for (const auto& d : defects) m = std::max(m, d.second);
  return m;
}

IdentityReport identity_checks(const TCurveConfig& config, cplx t, const QuadOptions& opt) {
  const int g = config.g;
  const double y0 = config.y0;
  const RealCurve c = config.curve();
  const OmegaData om = omega_third_kind(config, opt);
  const ResidueSet r = residue_matrices(config, om, t);
  const Eigen::Index n = r.size();
  IdentityReport rep;
  auto add = [&](const std::string& name, cplx v, double scale = 1.0) {
    rep.defects.emplace_back(name, std::abs(v) / std::max(1.0, scale));
  };

  // res0 .. res2
  const PolyC N = om.rep.numerator;
  const PolyC delta = to_complex(c.delta_poly());
  for (int s = 0; s <= g + 3; ++s) {
    cplx lhs = 0.0;
    double scale = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx term = r.A12[j] / std::pow(r.points[j] - y0, s);
      lhs += term;
      scale = std::max(scale, std::abs(term));
    }
    cplx rhs = 0.0;
    std::string name;
    if (s < g) {
      name = "res0 s=" + std::to_string(s);
    } else if (s == g) {
      rhs = -t * r.phi_q0;
      name = "res1";
    } else {
      rhs = -t * taylor_ratio(N, delta, y0, s - g);
      name = "res2 s=" + std::to_string(s);
    }
    add(name, lhs - rhs, scale);
  }

  // res3, res4 for every dependent point
  PeriodData pd;
  const auto vb = v_basis(config);
  (void)normalized_basis(config, &pd, opt);
  const cplx phi_q0 = r.phi_q0;
  for (int m = 0; m + 1 < g; ++m) {
    const Eigen::Index km = config.index_of_u(m);
    const double um = r.points[km];
    const PolyC Dm = to_complex(poly_deflate(c.delta_poly(), um));
    // Omega phi / du = R / Delta with R = N / (u - y0); expressed as N / ((u - y0) D_m (u - u_m))
    PolyC R_den = poly_mul(Dm, PolyC((PolyC(2) << -y0, 1.0).finished()));
    cplx s3 = 0.0;
    double scale3 = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == km) continue;
      const cplx term = 0.5 * omega_eval_branch(config, om, j) * phi_eval_branch(c, j) / (r.points[j] - um);
      s3 += term;
      scale3 = std::max(scale3, std::abs(term));
    }
    const cplx res_um = 2.0 * ratio_derivative(N, R_den, um);
    add("res3 m=" + std::to_string(m + 1), s3 + res_um + 2.0 * phi_q0 / (y0 - um), scale3);

    const WForm w = w_dependent(config, m, vb, pd, opt);
    auto w_branch_value = [&](Eigen::Index j) {
      const cplx pre = w.pole_weight / (r.points[j] - um) + w.rep.prefactor(r.points[j]);
      return pre * phi_eval_branch(c, j);
    };
    cplx s4 = 0.0;
    double scale4 = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == km) continue;
      const cplx term = 0.5 * omega_eval_branch(config, om, j) * w_branch_value(j);
      s4 += term;
      scale4 = std::max(scale4, std::abs(term));
    }
    PolyC S = poly_add<cplx>(PolyC::Constant(1, w.pole_weight),
                             poly_mul(PolyC((PolyC(2) << -um, 1.0).finished()), w.rep.numerator));
    const cplx res4_um = 2.0 * ratio_derivative(poly_mul(N, S), R_den, um);
    const cplx w_q0 = (w.pole_weight / (y0 - um) + w.rep.prefactor(y0)) * phi_q0;
    add("res4 m=" + std::to_string(m + 1), s4 + res4_um + 2.0 * w_q0, scale4);
  }

  // sums over the residue matrices
  cplx sb = 0.0, s21 = 0.0, s12 = 0.0, s11 = 0.0;
  double det_gap = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    sb += r.beta[j];
    s21 += r.A21[j];
    s12 += r.A12[j];
    s11 += r.A11[j];
    det_gap = std::max(det_gap, std::abs(r.matrix(j).determinant() + 1.0 / 16.0));
  }
  add("sum beta + t", sb + t);
  add("sum A21", s21);
  add("sum A12", s12);
  add("sum A11 + 1/4", s11 + 0.25);
  rep.defects.emplace_back("det + 1/16", det_gap);
  return rep;
}

}  // namespace isoharmonic
