#include "isoharmonic/periods.hpp"

#include "isoharmonic/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace isoharmonic {

namespace {

constexpr cplx I1(0.0, 1.0);

void check_pole(const RealCurve& c, const DifferentialRep& rep, Eigen::Index k) {
  if (!rep.pole) return;
  const double p = *rep.pole;
  if (p >= c.points()[k] && p <= c.points()[k + 1]) fail(ErrorKind::contour, "pole on the integration contour");
}

DifferentialRep monomial_rep(int k) { return {poly_monomial<cplx>(k), std::nullopt}; }

// phi-weighted singular part w/(u - p) du/v reduced to a polynomial numerator modulo exact forms.
PolyC reduced_numerator(const RealCurve& c, Eigen::Index k, cplx weight) {
  PolyR delta = c.delta_poly();
  PolyR D = poly_deflate(delta, c.points()[k]);
  const double Dp = poly_eval(D, c.points()[k]);
  PolyR q = poly_deflate(D, c.points()[k]);
  PolyR r = poly_add<double>(poly_deriv(D), -q);
  return r.cast<cplx>() * (weight / Dp);
}

Eigen::MatrixXcd solve_checked(const Eigen::MatrixXcd& M, const Eigen::MatrixXcd& rhs, const char* what) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[s.size() - 1] == 0.0 || s[0] / s[s.size() - 1] > 1e12)
    fail(ErrorKind::conditioning, what);
  return M.fullPivLu().solve(rhs);
}

double bounded_pole_check(const TCurveConfig& config) {
  Eigen::VectorXd a = config.branch_points();
  if (config.y0 > a[0]) fail(ErrorKind::contour, "y0 in a bounded gap lies on an a-cycle");
  return config.y0;
}

}  // namespace

cplx singular_integral(const RealCurve& c, const DifferentialRep& rep, Eigen::Index k, const QuadOptions& opt) {
  if (k < 0 || k + 1 >= c.size()) fail(ErrorKind::argument, "singular_integral: interval index out of range");
  check_pole(c, rep, k);
  return edge_integral(c, rep.as_prefactor(), k, opt);
}

cplx singular_integral(const TCurveConfig& config, const DifferentialRep& rep, Eigen::Index k,
                       const QuadOptions& opt) {
  return singular_integral(config.curve(), rep, k, opt);
}

cplx a_period(const RealCurve& c, const DifferentialRep& rep, int j, const QuadOptions& opt) {
  return 2.0 * singular_integral(c, rep, 2 * j + 1, opt);
}

cplx b_period(const RealCurve& c, const DifferentialRep& rep, int j, const QuadOptions& opt) {
  cplx s = 0.0;
  for (int i = 0; i <= j; ++i) s += singular_integral(c, rep, 2 * i, opt);
  return -2.0 * s;
}

PeriodData compute_periods(const RealCurve& c, const QuadOptions& opt) {
  const int g = c.genus();
  if (g < 1) fail(ErrorKind::argument, "compute_periods: genus must be positive");
  PeriodData pd;
  pd.raw_a.resize(g, g);
  pd.raw_b.resize(g, g);
  for (int k = 0; k < g; ++k) {
    DifferentialRep m = monomial_rep(k);
    for (int j = 0; j < g; ++j) {
      pd.raw_a(j, k) = a_period(c, m, j, opt);
      pd.raw_b(j, k) = b_period(c, m, j, opt);
    }
  }
  Eigen::MatrixXcd inv = solve_checked(pd.raw_a, Eigen::MatrixXcd::Identity(g, g), "ill-conditioned a-period matrix");
  pd.coeffs = inv.transpose();
  pd.riemann = pd.raw_b * pd.coeffs.transpose();
  pd.node_count = opt.nodes;
  return pd;
}

std::vector<DifferentialRep> normalized_basis(const PeriodData& pd) {
  std::vector<DifferentialRep> out;
  for (Eigen::Index k = 0; k < pd.coeffs.rows(); ++k) out.push_back({pd.coeffs.row(k).transpose(), std::nullopt});
  return out;
}

std::vector<DifferentialRep> normalized_basis(const TCurveConfig& config, PeriodData* out, const QuadOptions& opt) {
  PeriodData pd = compute_periods(config.curve(), opt);
  auto basis = normalized_basis(pd);
  if (out) *out = std::move(pd);
  return basis;
}

Eigen::MatrixXcd riemann_matrix(const TCurveConfig& config, const QuadOptions& opt) {
  return compute_periods(config.curve(), opt).riemann;
}

std::vector<DifferentialRep> v_basis(const TCurveConfig& config) {
  const int g = config.g;
  const RealCurve c = config.curve();
  const cplx phi_q0 = 1.0 / c.v_upper(config.y0);
  std::vector<DifferentialRep> out;
  PolyC yfac(2);
  yfac << -config.y0, 1.0;
  for (int i = 0; i + 1 < g; ++i) {
    PolyC q = yfac;
    for (int al = 0; al + 1 < g; ++al)
      if (al != i) q = poly_mul(q, PolyC((PolyC(2) << -config.u[al], 1.0).finished()));
    const cplx qi = poly_eval(q, cplx(config.u[i]));
    if (qi == 0.0) fail(ErrorKind::degenerate, "v_basis: y0 coincides with a dependent branch point");
    const cplx phi_u = phi_eval_branch(c, config.index_of_u(i));
    out.push_back({q / (phi_u * qi), std::nullopt});
  }
  PolyC p = poly_from_roots<cplx>(config.u);
  const cplx py = poly_eval(p, cplx(config.y0));
  if (py == 0.0) fail(ErrorKind::degenerate, "v_basis: y0 coincides with a dependent branch point");
  out.push_back({p / (phi_q0 * py), std::nullopt});
  return out;
}

OmegaData omega_third_kind(const TCurveConfig& config, const QuadOptions& opt) {
  const int g = config.g;
  const double y0 = bounded_pole_check(config);
  const RealCurve c = config.curve();
  OmegaData om;
  om.v0 = c.v_upper(y0);
  auto vb = v_basis(config);
  DifferentialRep base{PolyC::Constant(1, om.v0), y0};
  Eigen::MatrixXcd M(g, g);
  Eigen::VectorXcd rhs(g);
  for (int j = 0; j < g; ++j) {
    for (int k = 0; k < g; ++k) M(j, k) = a_period(c, vb[k], j, opt);
    rhs[j] = -4.0 * std::numbers::pi * I1 * config.c_hat2[j] - a_period(c, base, j, opt);
  }
  om.delta = solve_checked(M, rhs, "singular delta system");
  PolyC sum = PolyC::Zero(g);
  for (int k = 0; k < g; ++k) sum = poly_add<cplx>(sum, om.delta[k] * vb[k].numerator);
  PolyC yfac(2);
  yfac << -y0, 1.0;
  om.rep = {poly_add<cplx>(PolyC::Constant(1, om.v0), poly_mul(yfac, sum)), y0};
  return om;
}

cplx eval_at_branch(const TCurveConfig& config, const DifferentialRep& rep, Eigen::Index k) {
  const RealCurve c = config.curve();
  const double a = c.points()[k];
  if (rep.pole && *rep.pole == a) fail(ErrorKind::pole, "evaluation at a pole");
  return rep.prefactor(a) * phi_eval_branch(c, k);
}

cplx eval_at_regular(const TCurveConfig& config, const DifferentialRep& rep, double y, int sheet) {
  if (rep.pole && *rep.pole == y) fail(ErrorKind::pole, "evaluation at a pole");
  return rep.prefactor(y) * phi_eval_regular(config, y, sheet);
}

cplx omega_eval_branch(const TCurveConfig& config, const OmegaData& om, Eigen::Index k) {
  return eval_at_branch(config, om.rep, k);
}

cplx omega_eval_infinity(const TCurveConfig& config, const OmegaData& om) {
  const PolyC& n = om.rep.numerator;
  return n.size() > config.g ? -2.0 * n[config.g] : cplx(0.0);
}

cplx omega_eval_regular(const TCurveConfig& config, const OmegaData& om, double y, int sheet) {
  return eval_at_regular(config, om.rep, y, sheet);
}

WForm w_infinity(const TCurveConfig& config, const std::vector<DifferentialRep>& omega, PeriodData& pd,
                 const QuadOptions& opt) {
  const int g = config.g;
  const RealCurve c = config.curve();
  DifferentialRep ug = monomial_rep(g);
  pd.I.resize(g);
  for (int k = 0; k < g; ++k) pd.I[k] = a_period(c, ug, k, opt);
  PolyC num = -0.5 * poly_monomial<cplx>(g);
  for (int k = 0; k < g; ++k) num = poly_add<cplx>(num, 0.5 * pd.I[k] * omega[k].numerator);
  return {{num, std::nullopt}, std::nullopt, 0.0};
}

namespace {

cplx w_period(const TCurveConfig& config, const WForm& w, int j, const QuadOptions& opt, bool b) {
  const RealCurve c = config.curve();
  auto per = [&](const DifferentialRep& r) { return b ? b_period(c, r, j, opt) : a_period(c, r, j, opt); };
  cplx s = per(w.rep);
  if (w.pole) {
    Eigen::Index k = 0;
    while (c.points()[k] != *w.pole) ++k;
    s += per({reduced_numerator(c, k, w.pole_weight), std::nullopt});
  }
  return s;
}

}  // namespace

cplx w_a_period(const TCurveConfig& config, const WForm& w, int j, const QuadOptions& opt) {
  return w_period(config, w, j, opt, false);
}

cplx w_b_period(const TCurveConfig& config, const WForm& w, int j, const QuadOptions& opt) {
  return w_period(config, w, j, opt, true);
}

WForm w_branch(const TCurveConfig& config, Eigen::Index k, const std::vector<DifferentialRep>& omega, PeriodData& pd,
               const QuadOptions& opt) {
  const int g = config.g;
  const RealCurve c = config.curve();
  if (pd.beta_W.rows() != c.size()) pd.beta_W = Eigen::MatrixXcd::Zero(c.size(), g);
  const cplx weight = 1.0 / phi_eval_branch(c, k);
  DifferentialRep red{reduced_numerator(c, k, weight), std::nullopt};
  PolyC num = PolyC::Zero(g);
  for (int j = 0; j < g; ++j) {
    const cplx beta = a_period(c, red, j, opt);
    pd.beta_W(k, j) = beta;
    num = poly_add<cplx>(num, -beta * omega[j].numerator);
  }
  return {{num, std::nullopt}, c.points()[k], weight};
}

WForm w_dependent(const TCurveConfig& config, int m, const std::vector<DifferentialRep>& vb, PeriodData& pd,
                  const QuadOptions& opt) {
  const int g = config.g;
  const RealCurve c = config.curve();
  if (pd.gamma_W.rows() != g - 1) pd.gamma_W = Eigen::MatrixXcd::Zero(g - 1, g);
  const Eigen::Index k = config.index_of_u(m);
  const cplx weight = 1.0 / phi_eval_branch(c, k);
  DifferentialRep red{reduced_numerator(c, k, weight), std::nullopt};
  Eigen::MatrixXcd M(g, g);
  Eigen::VectorXcd rhs(g);
  for (int j = 0; j < g; ++j) {
    for (int l = 0; l < g; ++l) M(j, l) = a_period(c, vb[l], j, opt);
    rhs[j] = a_period(c, red, j, opt);
  }
  Eigen::VectorXcd gamma = solve_checked(M, rhs, "singular gamma system");
  pd.gamma_W.row(m) = gamma.transpose();
  PolyC num = PolyC::Zero(g);
  for (int l = 0; l < g; ++l) num = poly_add<cplx>(num, -gamma[l] * vb[l].numerator);
  return {{num, std::nullopt}, c.points()[k], weight};
}

Eigen::VectorXcd abel_q0(const TCurveConfig& config, const std::vector<DifferentialRep>& omega,
                         const QuadOptions& opt) {
  const RealCurve c = config.curve();
  const double y0 = config.y0;
  const double l = std::max(1.0, std::abs(c.points()[0] - y0));
  Eigen::VectorXcd out(omega.size());
  for (std::size_t k = 0; k < omega.size(); ++k) {
    auto rule = [&](int n) {
      const GaussRule& gr = gauss_legendre(n);
      cplx s = 0.0;
      for (int j = 0; j < n; ++j) {
        const double x = gr.x[j];
        const double sv = l * (1.0 + x) / (1.0 - x);
        const double z = y0 - sv * sv;
        const double jac = 2.0 * l / ((1.0 - x) * (1.0 - x));
        s += gr.w[j] * omega[k].prefactor(z) / c.v_upper(z) * 2.0 * sv * jac;
      }
      return s;
    };
    out[k] = gated(rule, opt);
  }
  return out;
}

Eigen::VectorXcd c_hat1_from_omega(const TCurveConfig& config, const OmegaData& om, const QuadOptions& opt) {
  const RealCurve c = config.curve();
  Eigen::VectorXcd out(config.g);
  for (int j = 0; j < config.g; ++j) out[j] = b_period(c, om.rep, j, opt) / (4.0 * std::numbers::pi * I1);
  return out;
}

Eigen::VectorXcd abel_infinity(const IntervalSystem& E, const QuadOptions& opt) {
  if (E.d() < 2) fail(ErrorKind::argument, "abel_infinity: need at least two intervals");
  const RealCurve c = E.curve();
  PeriodData pd = compute_periods(c, opt);
  auto omega = normalized_basis(pd);
  Eigen::VectorXcd out(omega.size());
  for (std::size_t k = 0; k < omega.size(); ++k) out[k] = 2.0 * tail_integral(c, omega[k].as_prefactor(), opt);
  return out;
}

}  // namespace isoharmonic
