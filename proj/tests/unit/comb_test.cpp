#include "fixtures.hpp"
#include "isoharmonic/comb.hpp"
#include "isoharmonic/deform.hpp"
#include "isoharmonic/measures.hpp"

#include <doctest.h>

using namespace fixtures;

TEST_CASE("comb map boundary correspondence") {
  const IntervalSystem E = cubic_preimage();
  CHECK(std::abs(comb_map(E, E.c[5])) < 1e-10);
  const Vec f = frequency_map(E);
  for (int k = 1; k <= 3; ++k) {
    const double mid = 0.5 * (E.left(k) + E.right(k));
    const cplx th = comb_map(E, mid);
    CHECK(std::abs(th.imag()) < 1e-8);
    CHECK(th.real() >= -1e-12);
    CHECK(th.real() <= 1.0 + 1e-12);
  }
  for (int j = 1; j < 3; ++j) {
    const double mid = 0.5 * (E.left(j) + E.right(j + 1));
    CHECK(std::abs(comb_map(E, mid).real() - f[3 - j - 1]) < 1e-8);
  }
  CHECK_THROWS(comb_map(E, cplx(0.3, -0.1)));
}

TEST_CASE("comb region") {
  const CombRegion one = comb_region(IntervalSystem::from_endpoints(vec({-1.0, 1.0})));
  CHECK(one.q.size() == 0);
  CHECK(one.h.size() == 0);
  const CombRegion r = comb_region(cubic_preimage());
  CHECK(std::abs(r.q[0] - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(r.q[1] - 2.0 / 3.0) < 1e-9);
  CHECK(r.h.minCoeff() > 0.0);
  CHECK(std::abs(r.h[0] - r.h[1]) < 1e-9);
}

TEST_CASE("rectification") {
  const TCurveConfig c = moebius_normalize(cubic_preimage(), {EndpointType::left}).first;
  const DeformationPath still = integrate_path(c, [&](double) { return Vec(c.x); }, 1);
  const RectificationReport z = rectification_check(still);
  CHECK(z.q_drift < 1e-12);
  CHECK(z.h_change < 1e-12);
}
