#include "fixtures.hpp"
#include "isoharmonic/measures.hpp"
#include "isoharmonic/poly.hpp"

#include <doctest.h>

using namespace fixtures;

TEST_CASE("equilibrium measure") {
  CHECK(equilibrium_measure(IntervalSystem::from_endpoints(vec({-1.0, 1.0})))[0] == doctest::Approx(1.0));
  const Vec sym = equilibrium_measure(IntervalSystem::from_endpoints(vec({-3.0, -1.0, 1.0, 3.0})));
  CHECK(std::abs(sym[0] - 0.5) < 1e-10);
  CHECK(std::abs(sym[1] - 0.5) < 1e-10);
  const Vec cubic = equilibrium_measure(cubic_preimage());
  for (Eigen::Index k = 0; k < 3; ++k) CHECK(std::abs(cubic[k] - 1.0 / 3.0) < 1e-9);
}

TEST_CASE("eta numerator on the cubic preimage is proportional to p'") {
  const EtaData et = eta(cubic_preimage());
  REQUIRE(et.gap_zeros.size() == 2);
  CHECK(std::abs(et.gap_zeros[0] + 1.0) < 1e-9);
  CHECK(std::abs(et.gap_zeros[1] - 1.0) < 1e-9);
  const PolyR k = poly_trim(et.k, 1e-13);
  REQUIRE(k.size() == 3);
  CHECK(std::abs(k[1]) < 1e-10 * std::abs(k[2]));
  CHECK(std::abs(k[0] / k[2] + 1.0) < 1e-10);

  const EtaData sym = eta(IntervalSystem::from_endpoints(vec({-3.0, -1.0, 1.0, 3.0})));
  CHECK(std::abs(sym.gap_zeros[0]) < 1e-12);
}

TEST_CASE("frequency map") {
  const Vec f = frequency_map(cubic_preimage());
  CHECK(std::abs(f[0] - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(f[1] - 2.0 / 3.0) < 1e-9);
  CHECK(frequency_map(IntervalSystem::from_endpoints(vec({-3.0, -1.0, 1.0, 3.0})))[0] == doctest::Approx(0.5));
}

TEST_CASE("harmonic measures") {
  const IntervalSystem E = cubic_preimage();
  const Vec eq = equilibrium_measure(E);
  const Vec far = harmonic_measures(E, 1e6);
  CHECK((far - eq).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(std::abs(harmonic_measures(E, 1.2).sum() - 1.0) < 1e-12);
  // symmetric about the pole in the middle gap: mirror bands carry equal mass
  const Vec mirror = harmonic_measures(IntervalSystem::from_endpoints(vec({-3.0, -1.0, 1.0, 3.0})), 0.0);
  CHECK(std::abs(mirror[0] - mirror[1]) < 1e-10);
  const HarmonicMeasures hm = harmonic_measures(config_g2());
  CHECK(std::abs(hm.raw_sum - 1.0) < 1e-10);
}

TEST_CASE("green function") {
  const IntervalSystem I = IntervalSystem::from_endpoints(vec({-1.0, 1.0}));
  const double exact = std::log(2.0 + std::sqrt(3.0));
  CHECK(std::abs(green_function(I, 2.0).real() - exact) < 1e-9 * exact);
  const IntervalSystem E = cubic_preimage();
  for (int k = 1; k <= 3; ++k) {
    const double mid = 0.5 * (E.left(k) + E.right(k));
    CHECK(std::abs(green_function(E, cplx(mid, 0.0)).real()) < 1e-9);
  }
  for (int k = 1; k < 3; ++k) {
    const double mid = 0.5 * (E.left(k) + E.right(k + 1));
    CHECK(green_function(E, cplx(mid, 0.0)).real() > 0.0);
  }
}
