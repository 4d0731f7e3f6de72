#include "fixtures.hpp"
#include "isoharmonic/billiard.hpp"
#include "isoharmonic/measures.hpp"

#include <doctest.h>

using namespace fixtures;

TEST_CASE("jacobi coordinates") {
  const Vec b = vec({0.3, 0.5, 1.0});
  const Vec lambda = vec({0.1, 0.35, 0.7});
  const Vec p = point_from_jacobi(lambda, b);
  CHECK((jacobi_coords(p, b) - lambda).cwiseAbs().maxCoeff() < 1e-12);

  // a point on the ellipsoid sum x_j^2 / b_j = 1 has lambda_1 = 0
  Vec q = vec({0.2, 0.3, 0.0});
  q[2] = std::sqrt(b[2] * (1.0 - q[0] * q[0] / b[0] - q[1] * q[1] / b[1]));
  CHECK(std::abs(jacobi_coords(q, b)[0]) < 1e-12);

  // x_j = 0 puts one coordinate at b_j
  const Vec on_plane = vec({0.0, 0.2, 0.4});
  const Vec l = jacobi_coords(on_plane, b);
  CHECK((l.array() - b[0]).abs().minCoeff() < 1e-10);

  // confocal back-substitution: sum x_j^2 / (b_j - lambda_i) = 1
  for (Eigen::Index i = 0; i < 3; ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < 3; ++j) s += p[j] * p[j] / (b[j] - lambda[i]);
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("hat coordinates round trip") {
  const BilliardConfig c{vec({0.32, 0.38, 1.0}), vec({0.31, 0.87})};
  validate_billiard(c);
  const BilliardConfig back = billiard_from_hat(billiard_hat(c), 1.0);
  CHECK((back.b - c.b).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((back.alpha - c.alpha).cwiseAbs().maxCoeff() < 1e-14);
  const IntervalSystem E = reciprocal_system(c);
  CHECK(E.c[E.c.size() - 1] == 0.0);
}

TEST_CASE("five periodic trajectory") {
  const BilliardConfig c = five_periodic_config();
  const Vec f = frequency_map(reciprocal_system(c));
  CHECK(std::abs(f[0] - 0.4) < 1e-9);
  CHECK(std::abs(f[1] - 0.8) < 1e-9);

  const auto [lo, hi] = c.segment(1);
  const auto [lo2, hi2] = c.segment(2);
  const BilliardState s = tangent_start(c, vec({0.5 * (lo + hi), 0.5 * (lo2 + hi2)}));
  for (Eigen::Index k = 0; k < c.alpha.size(); ++k) CHECK(tangency_defect(s, c.b, c.alpha[k]) < 1e-12);

  const Trajectory t = simulate(c, s, 5);
  CHECK(t.closure_gap < 1e-9);
  CHECK(t.tangency_drift < 1e-10);
  CHECK(t.reflection_defect < 1e-12);
  CHECK(t.monitor_agrees);
  Eigen::VectorXi m(3);
  m << 5, 4, 2;
  CHECK(t.winding == m);
}

TEST_CASE("zero-length billiard deformation") {
  const BilliardConfig c = five_periodic_config();
  const BilliardPath p = deform_billiard(c, [&](double) { return Vec(c.b); }, 1, 5);
  REQUIRE(p.complete);
  CHECK((p.steps.back().config.b - c.b).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((p.steps.back().config.alpha - c.alpha).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(p.steps.back().certificate.residual < 1e-8);
}
