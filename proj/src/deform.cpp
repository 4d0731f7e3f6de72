#include "isoharmonic/deform.hpp"

#include <cmath>

namespace isoharmonic {

namespace {

struct Problem {
  std::function<std::optional<Eigen::VectorXd>(const Eigen::VectorXd&)> residual;  // empty if inadmissible
};

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Damped Newton with a forward-difference Jacobian.
std::pair<Eigen::VectorXd, int> newton(const Problem& p, Eigen::VectorXd z, const NewtonOptions& nopt,
                                       double& residual) {
  auto F0 = p.residual(z);
  if (!F0) fail(ErrorKind::region, "invert_frequencies: initial guess is not admissible");
  Eigen::VectorXd F = *F0;
  residual = inf_norm(F);
  const Eigen::Index n = z.size();
  int it = 0;
  while (residual > nopt.tol) {
    if (++it > nopt.max_iter) fail(ErrorKind::convergence, "invert_frequencies: no convergence");
    Eigen::MatrixXd J(F.size(), n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double h = nopt.fd_step * std::max(1.0, std::abs(z[k]));
      Eigen::VectorXd zk = z;
      zk[k] += h;
      auto Fk = p.residual(zk);
      if (!Fk) {
        zk[k] = z[k] - h;
        Fk = p.residual(zk);
        if (!Fk) fail(ErrorKind::region, "invert_frequencies: Jacobian stencil leaves the admissible region");
        J.col(k) = (F - *Fk) / h;
      } else {
        J.col(k) = (*Fk - F) / h;
      }
    }
    const Eigen::VectorXd step = -J.fullPivLu().solve(F);
    double lambda = 1.0;
    bool admissible = false, accepted = false;
    for (int halving = 0; halving < 30; ++halving, lambda *= 0.5) {
      const Eigen::VectorXd trial = z + lambda * step;
      auto Ft = p.residual(trial);
      if (!Ft) continue;
      admissible = true;
      const double rt = inf_norm(*Ft);
      if (rt < residual || halving == 29) {
        z = trial;
        F = *Ft;
        residual = rt;
        accepted = true;
        break;
      }
    }
    if (!admissible) fail(ErrorKind::region, "invert_frequencies: iteration left the admissible region");
    if (!accepted) fail(ErrorKind::convergence, "invert_frequencies: line search stalled");
  }
  return {z, it};
}

std::optional<TCurveConfig> try_config(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double y0,
                                       const std::vector<EndpointType>& sigma) {
  ValidationResult vr = validate_config(int(x.size()), x, u, y0, Eigen::VectorXd::Zero(x.size()),
                                        Eigen::VectorXd::Zero(x.size()), sigma);
  if (!vr.ok() || y0 >= 0.0) return std::nullopt;
  return vr.config;
}

std::optional<TCurveConfig> try_hat(const HatData& h) {
  try {
    return normalize(h);
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

}  // namespace

InversionResult invert_frequencies(const Eigen::VectorXd& x, const std::vector<EndpointType>& sigma,
                                   const Eigen::VectorXd& target, const Eigen::VectorXd& u_guess, double y0_guess,
                                   const NewtonOptions& nopt, const QuadOptions& opt) {
  const int g = int(x.size());
  if (target.size() != g) fail(ErrorKind::argument, "invert_frequencies: target must have length g");
  if (u_guess.size() != g - 1) fail(ErrorKind::argument, "invert_frequencies: guess must have length g-1");
  Problem p;
  p.residual = [&](const Eigen::VectorXd& z) -> std::optional<Eigen::VectorXd> {
    auto c = try_config(x, z.head(g - 1), z[g - 1], sigma);
    if (!c) return std::nullopt;
    return Eigen::VectorXd(harmonic_frequencies(*c, opt) - target);
  };
  Eigen::VectorXd z(g);
  z << u_guess, y0_guess;
  InversionResult out;
  auto [zs, it] = newton(p, z, nopt, out.residual);
  out.iterations = it;
  out.config = *try_config(x, zs.head(g - 1), zs[g - 1], sigma);
  out.hat = denormalize(out.config);
  return out;
}

InversionResult invert_frequencies(const HatData& guess, const Eigen::VectorXd& target, const NewtonOptions& nopt,
                                   const QuadOptions& opt) {
  const Eigen::Index g = guess.x_hat.size();
  if (target.size() != g) fail(ErrorKind::argument, "invert_frequencies: target must have length g");
  auto with = [&](const Eigen::VectorXd& u) {
    HatData h = guess;
    h.u_hat = u;
    return h;
  };
  Problem p;
  p.residual = [&](const Eigen::VectorXd& u) -> std::optional<Eigen::VectorXd> {
    const HatData h = with(u);
    if (!try_hat(h)) return std::nullopt;
    return Eigen::VectorXd(frequency_map(intervals_from_hat(h), opt) - target);
  };
  InversionResult out;
  auto [us, it] = newton(p, guess.u_hat, nopt, out.residual);
  out.iterations = it;
  out.hat = with(us);
  out.config = normalize(out.hat);
  return out;
}

DependentDerivatives dependent_derivatives(const TCurveConfig& config, const QuadOptions& opt) {
  const int g = config.g;
  const double y0 = config.y0;
  const OmegaData om = omega_third_kind(config, opt);
  const auto vb = v_basis(config);
  const ResidueSet r = residue_matrices(config, om, 1.0);
  const cplx t = r.t;
  DependentDerivatives d;
  d.du_dx.resize(g - 1, g);
  d.du_dx_g.resize(g - 1, g);
  d.dy0_dx.resize(g);
  d.dy0_dx_g.resize(g);
  d.dy0_dx_split.resize(g);
  double gap = 0.0;
  auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::max(std::abs(a), std::abs(b))); };
  for (int i = 0; i < g; ++i) {
    const int kx = config.index_of_x(i);
    const double x = config.x[i];
    const cplx om_x = omega_eval_branch(config, om, kx);
    for (int m = 0; m + 1 < g; ++m) {
      const int ku = config.index_of_u(m);
      const double um = config.u[m];
      if (std::abs(r.A12[ku]) == 0.0) fail(ErrorKind::degenerate, "A12 vanishes at a dependent point");
      d.du_dx_g(m, i) = -om_x / omega_eval_branch(config, om, ku) * eval_at_branch(config, vb[m], kx);
      cplx num = std::pow(um - y0, g - 1), den = std::pow(x - y0, g - 1);
      for (int a = 0; a + 1 < g; ++a) {
        if (a == m) continue;
        num *= x - config.u[a];
        den *= um - config.u[a];
      }
      d.du_dx(m, i) = -r.A12[kx] / r.A12[ku] * num / den;
      gap = std::max(gap, rel(d.du_dx(m, i), d.du_dx_g(m, i)));
    }
    d.dy0_dx_g[i] = -0.25 * om_x * eval_at_branch(config, vb[g - 1], kx);
    cplx num = 1.0, den = r.phi_q0 * std::pow(x - y0, g);
    for (int a = 0; a + 1 < g; ++a) {
      num *= x - config.u[a];
      den *= y0 - config.u[a];
    }
    d.dy0_dx[i] = -r.A12[kx] / t * num / den;
    gap = std::max(gap, rel(d.dy0_dx[i], d.dy0_dx_g[i]));
  }
  for (int i = 0; i < g; ++i) {
    const int kx = config.index_of_x(i);
    cplx s = -r.A12[kx] / (t * r.phi_q0 * std::pow(config.x[i] - y0, g));
    for (int m = 0; m + 1 < g; ++m) {
      const int ku = config.index_of_u(m);
      s -= r.A12[ku] / (t * r.phi_q0 * std::pow(config.u[m] - y0, g)) * d.du_dx(m, i);
    }
    d.dy0_dx_split[i] = s;
    gap = std::max(gap, rel(s, d.dy0_dx[i]));
  }
  d.cross_check = gap;
  return d;
}

ChebyshevDynamics chebyshev_dynamics(const TCurveConfig& config, const QuadOptions& opt) {
  const int g = config.g;
  const double y0 = config.y0;
  const DependentDerivatives d = dependent_derivatives(config, opt);
  const Eigen::MatrixXd du = d.du_dx.real();
  const Eigen::VectorXd dy = d.dy0_dx.real();
  auto d_dw = [y0](double w) { return (1.0 - y0) * (-y0) / ((w - y0) * (w - y0)); };
  auto d_dy0 = [y0](double w) { return w * (1.0 - w) / ((w - y0) * (w - y0)); };
  ChebyshevDynamics out;
  out.du_hat_dx.resize(g, g);
  out.dx_hat_dx.resize(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j + 1 < g; ++j)
      out.du_hat_dx(j, i) = d_dw(config.u[j]) * du(j, i) + d_dy0(config.u[j]) * dy[i];
    out.du_hat_dx(g - 1, i) = -dy[i];
    for (int k = 0; k < g; ++k)
      out.dx_hat_dx(k, i) = (k == i ? d_dw(config.x[k]) : 0.0) + d_dy0(config.x[k]) * dy[i];
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(out.dx_hat_dx);
  if (!lu.isInvertible() || lu.rcond() < 1e-12) fail(ErrorKind::conditioning, "chebyshev_dynamics: singular dx_hat/dx");
  // D X = U  <=>  X^T D^T = U^T
  out.du_hat_dx_hat = out.dx_hat_dx.transpose().fullPivLu().solve(out.du_hat_dx.transpose()).transpose();
  return out;
}

std::function<Eigen::VectorXd(double)> linear_path(const Eigen::VectorXd& x_start, const Eigen::VectorXd& x_end) {
  return [x_start, x_end](double s) { return Eigen::VectorXd((1.0 - s) * x_start + s * x_end); };
}

namespace {

constexpr int kMaxCorrectorIterations = 8;
constexpr int kMaxHalvings = 6;

PathStep advance(const PathStep& cur, double s_next, const std::function<Eigen::VectorXd(double)>& x_path,
                 PolePolicy policy, const Eigen::VectorXd& target, const NewtonOptions& nopt,
                 const QuadOptions& opt) {
  const Eigen::VectorXd xn = x_path(s_next);
  PathStep next;
  next.s = s_next;
  InversionResult res;
  if (policy == PolePolicy::evolve) {
    const DependentDerivatives d = dependent_derivatives(cur.config, opt);
    const Eigen::VectorXd dx = xn - cur.config.x;
    const Eigen::VectorXd u = cur.config.u + d.du_dx.real() * dx;
    const double y0 = cur.config.y0 + d.dy0_dx.real().dot(dx);
    res = invert_frequencies(xn, cur.config.sigma, target, u, y0, nopt, opt);
  } else {
    const ChebyshevDynamics cd = chebyshev_dynamics(cur.config, opt);
    HatData guess = cur.hat;
    guess.x_hat = xn;
    guess.u_hat = cur.hat.u_hat + cd.du_hat_dx_hat * (xn - cur.hat.x_hat);
    res = invert_frequencies(guess, target, nopt, opt);
  }
  if (res.iterations > kMaxCorrectorIterations) fail(ErrorKind::convergence, "corrector needed too many iterations");
  next.config = res.config;
  next.config.c_hat1 = cur.config.c_hat1;
  next.config.c_hat2 = cur.config.c_hat2;
  next.hat = res.hat;
  next.drift = res.residual;
  next.iterations = res.iterations;
  return next;
}

PathStep advance_halving(const PathStep& cur, double s_next, const std::function<Eigen::VectorXd(double)>& x_path,
                         PolePolicy policy, const Eigen::VectorXd& target, const NewtonOptions& nopt,
                         const QuadOptions& opt, int depth) {
  try {
    return advance(cur, s_next, x_path, policy, target, nopt, opt);
  } catch (const NumericalError&) {
    if (depth >= kMaxHalvings) throw;
    const double mid = 0.5 * (cur.s + s_next);
    const PathStep half = advance_halving(cur, mid, x_path, policy, target, nopt, opt, depth + 1);
    return advance_halving(half, s_next, x_path, policy, target, nopt, opt, depth + 1);
  }
}

}  // namespace

DeformationPath integrate_path(const TCurveConfig& start, const std::function<Eigen::VectorXd(double)>& x_path,
                               int steps, PolePolicy policy, const NewtonOptions& nopt, const QuadOptions& opt) {
  if (steps < 0) fail(ErrorKind::argument, "integrate_path: negative step count");
  DeformationPath path;
  path.policy = policy;
  PathStep first;
  first.config = start;
  first.hat = denormalize(start);
  if (policy == PolePolicy::evolve) {
    path.target = harmonic_frequencies(start, opt);
  } else {
    path.target = frequency_map(intervals_from_hat(first.hat), opt);
  }
  path.steps.push_back(first);
  for (int k = 1; k <= steps; ++k) {
    const double s = double(k) / steps;
    try {
      path.steps.push_back(advance_halving(path.steps.back(), s, x_path, policy, path.target, nopt, opt, 0));
    } catch (const NumericalError& e) {
      path.complete = false;
      path.diagnostic = "step " + std::to_string(k) + ": " + e.what();
      break;
    }
  }
  return path;
}

}  // namespace isoharmonic
