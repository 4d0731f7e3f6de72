#include "fixtures.hpp"
#include "isoharmonic/deform.hpp"
#include "isoharmonic/measures.hpp"

#include <doctest.h>

using namespace fixtures;

TEST_CASE("frequency inversion round trip") {
  const TCurveConfig c = config_g2();
  const Vec target = harmonic_frequencies(c);
  const InversionResult r = invert_frequencies(c.x, c.sigma, target, c.u.array() + 1e-3, c.y0 - 1e-3);
  CHECK((r.config.u - c.u).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(r.config.y0 - c.y0) < 1e-10);
  const InversionResult r2 = invert_frequencies(c.x, c.sigma, target, c.u.array() - 2e-3, c.y0 + 2e-3);
  CHECK((r2.config.u - r.config.u).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("pinned inversion recovers the cubic preimage") {
  const IntervalSystem E = cubic_preimage();
  const std::vector<EndpointType> sigma{EndpointType::left};
  HatData hat = hat_from_intervals(E, sigma);
  const HatData truth = hat;
  hat.u_hat.array() *= 1.0 + 1e-3;
  const InversionResult r = invert_frequencies(hat, vec({1.0 / 3.0, 2.0 / 3.0}));
  CHECK((r.hat.u_hat - truth.u_hat).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("dependent derivatives") {
  const TCurveConfig c = config_g2();
  const DependentDerivatives dd = dependent_derivatives(c);
  CHECK(dd.cross_check < 1e-9);
  const Vec target = harmonic_frequencies(c);
  for (int i = 0; i < c.g; ++i) {
    const double h = 1e-5 * std::max(1.0, std::abs(c.x[i]));
    auto solve = [&](double s) {
      Vec x = c.x;
      x[i] += s;
      NewtonOptions n;
      n.tol = 1e-13;
      return invert_frequencies(x, c.sigma, target, c.u, c.y0, n).config;
    };
    const TCurveConfig p = solve(h), m = solve(-h);
    const double du = (p.u[0] - m.u[0]) / (2 * h);
    const double dy = (p.y0 - m.y0) / (2 * h);
    CHECK(std::abs(dd.du_dx(0, i).real() - du) < 1e-6 * std::max(1.0, std::abs(du)));
    CHECK(std::abs(dd.dy0_dx[i].real() - dy) < 1e-6 * std::max(1.0, std::abs(dy)));
  }
}

TEST_CASE("chebyshev dynamics") {
  const TCurveConfig c = config_g2();
  const ChebyshevDynamics cd = chebyshev_dynamics(c);
  CHECK((cd.du_hat_dx_hat * cd.dx_hat_dx - cd.du_hat_dx).cwiseAbs().maxCoeff() < 1e-9);
  const DependentDerivatives dd = dependent_derivatives(c);
  // u_hat_g = 1 - y0
  const Eigen::RowVectorXd dy0_dx_hat = dd.dy0_dx.real().transpose() * cd.dx_hat_dx.inverse();
  CHECK((cd.du_hat_dx_hat.row(c.g - 1) + dy0_dx_hat).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("path integration") {
  const TCurveConfig c = config_g2();
  const DeformationPath zero = integrate_path(c, [&](double) { return Vec(c.x); }, 1);
  REQUIRE(zero.complete);
  CHECK((zero.steps.back().config.u - c.u).cwiseAbs().maxCoeff() < 1e-12);

  const Vec x_end = vec({2.2, 5.5});
  const DeformationPath p = integrate_path(c, linear_path(c.x, x_end), 20);
  REQUIRE(p.complete);
  double drift = 0.0;
  for (const PathStep& s : p.steps) drift = std::max(drift, s.drift);
  CHECK(drift <= 1e-10);
  const Vec eq0 = harmonic_measures(c).masses;
  CHECK((harmonic_measures(p.steps.back().config).masses - eq0).cwiseAbs().maxCoeff() < 1e-9);

  const TCurveConfig& last = p.steps.back().config;
  const InversionResult direct = invert_frequencies(x_end, c.sigma, p.target, last.u, last.y0);
  CHECK((direct.config.u - last.u).cwiseAbs().maxCoeff() < 1e-10);
}
