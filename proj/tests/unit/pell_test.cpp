#include "fixtures.hpp"
#include "isoharmonic/pell.hpp"
#include "isoharmonic/poly.hpp"

#include <doctest.h>

using namespace fixtures;

namespace {

Eigen::VectorXi ivec(std::initializer_list<int> v) {
  Eigen::VectorXi r(Eigen::Index(v.size()));
  Eigen::Index k = 0;
  for (int x : v) r[k++] = x;
  return r;
}

}  // namespace

TEST_CASE("rational frequency detection") {
  auto r = detect_regular(vec({0.4, 0.8}));
  REQUIRE(r);
  CHECK(r->n == 5);
  CHECK(r->winding == ivec({5, 4, 2}));
  r = detect_regular(vec({1.0 / 3.0, 2.0 / 3.0}));
  REQUIRE(r);
  CHECK(r->n == 3);
  CHECK(r->winding == ivec({3, 2, 1}));
  CHECK_FALSE(detect_regular(vec({std::sqrt(0.5)}), 1000, 1e-12));
}

TEST_CASE("akhiezer function") {
  const IntervalSystem I = IntervalSystem::from_endpoints(vec({-1.0, 1.0}));
  const cplx A = akhiezer(I, 5, 2.0);
  CHECK(std::abs(A - std::pow(2.0 + std::sqrt(3.0), 5)) < 1e-9 * std::abs(A));
  const IntervalSystem E = cubic_preimage();
  for (int k = 1; k <= 3; ++k) {
    const double mid = 0.5 * (E.left(k) + E.right(k));
    CHECK(std::abs(std::abs(akhiezer(E, 3, cplx(mid, 1e-12))) - 1.0) < 1e-8);
  }
}

TEST_CASE("chebyshev polynomials") {
  const PellCertificate one = chebyshev_poly(IntervalSystem::from_endpoints(vec({-1.0, 1.0})), 5);
  REQUIRE(one.P.size() == 6);
  CHECK((one.P - vec({0.0, 5.0, 0.0, -20.0, 0.0, 16.0})).cwiseAbs().maxCoeff() < 1e-10);

  const IntervalSystem E = cubic_preimage();
  const PellCertificate c3 = chebyshev_poly(E, 3);
  CHECK((c3.P - vec({0.0, -3.0, 0.0, 1.0})).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(c3.residual < 1e-12);
  CHECK(c3.winding == ivec({3, 2, 1}));
  CHECK(c3.winding_consistent);

  const PellCertificate c6 = chebyshev_poly(E, 6);
  const PolyR p = vec({0.0, -3.0, 0.0, 1.0});
  PolyR t2p = 2.0 * poly_mul(p, p);
  t2p[0] -= 1.0;
  CHECK((c6.P - t2p).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(c6.residual < 1e-10);
}

TEST_CASE("pell residual detects perturbations") {
  const IntervalSystem E = cubic_preimage();
  PolyR P = vec({0.0, -3.0, 0.0, 1.0});
  CHECK(pell_residual(P, E).residual < 1e-10);
  P[1] += 1e-3;
  CHECK(pell_residual(P, E).residual > 1e-4);
}

TEST_CASE("equioscillation and gap critical points") {
  const IntervalSystem E = cubic_preimage();
  const PolyR P = vec({0.0, -3.0, 0.0, 1.0});
  CHECK(equioscillation_count(P, E) == 3 + 3);
  const Vec crit = gap_critical_points(P, E);
  REQUIRE(crit.size() == 2);
  CHECK(std::abs(crit[0] + 1.0) < 1e-10);
  CHECK(std::abs(crit[1] - 1.0) < 1e-10);
}
