#include "fixtures.hpp"
#include "isoharmonic/errors.hpp"

#include <doctest.h>

using namespace fixtures;

TEST_CASE("validation") {
  const Vec z1 = Vec::Zero(1), z2 = Vec::Zero(2);
  CHECK(validate_config(2, vec({2.0, 5.0}), vec({3.0}), -1.0, z2, z2, {EndpointType::left}).ok());
  CHECK_FALSE(validate_config(2, vec({2.0, 2.0}), vec({3.0}), -1.0, z2, z2, {EndpointType::left}).ok());
  CHECK_FALSE(validate_config(2, vec({2.0, 5.0}), vec({3.0}), 0.5, z2, z2, {EndpointType::left}).ok());
  CHECK_FALSE(validate_config(2, vec({2.0, 5.0}), vec({3.0, 4.0}), -1.0, z2, z2, {EndpointType::left}).ok());
  CHECK_THROWS_AS(make_config(vec({2.0, 2.0}), vec({3.0}), -1.0, {EndpointType::left}), NumericalError);
  (void)z1;
}

TEST_CASE("square root branch") {
  const TCurveConfig c = config_g2();
  const Vec a = c.branch_points();
  for (Eigen::Index k = 0; k < a.size(); ++k) CHECK(std::abs(sqrt_delta(c, a[k])) == 0.0);
  const cplx big = sqrt_delta(c, 50.0);
  CHECK(big.real() > 0.0);
  CHECK(std::abs(big.imag()) < 1e-12 * big.real());
  for (cplx z : {cplx(1.5, 0.7), cplx(-2.0, 0.3), cplx(4.0, 2.0)})
    CHECK(std::abs(std::conj(sqrt_delta(c, z)) - sqrt_delta(c, std::conj(z))) < 1e-12 * std::abs(sqrt_delta(c, z)));
  CHECK(std::abs(sqrt_delta(c, cplx(1.5, 0.7), -1) + sqrt_delta(c, cplx(1.5, 0.7))) < 1e-14);
}

TEST_CASE("phi evaluations") {
  const TCurveConfig c = config_g2();
  CHECK(phi_eval(c, AtInfinity{}) == cplx(0.0));
  const Vec a = c.branch_points();
  cplx prod = 1.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) prod *= cplx(c.y0 - a[j]);
  CHECK(std::abs(std::pow(phi_eval(c, c.y0), 2) * prod - 1.0) < 1e-13);
  for (int k = 0; k < int(a.size()); ++k) {
    double p = 1.0;
    for (Eigen::Index j = 0; j < a.size(); ++j)
      if (j != k) p *= a[k] - a[j];
    const cplx phi = phi_eval(c, AtBranch{k});
    CHECK(std::abs(phi * phi * p - 4.0) < 1e-12);
  }
}

TEST_CASE("moebius normalization") {
  CHECK(moebius(0.0, 3.7) == 0.0);
  CHECK(moebius(1.0, 3.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(moebius(3.7 + 1e-12, 3.7)) > 1e9);

  const IntervalSystem E = cubic_preimage();
  const auto [config, record] = moebius_normalize(E, {EndpointType::left});
  const IntervalSystem back = moebius_inverse(config, record);
  CHECK((back.c - E.c).cwiseAbs().maxCoeff() < 1e-14 * 4);

  const HatData hat = denormalize(config);
  const int g = config.g;
  CHECK(hat.u_hat[g - 1] == doctest::Approx(1.0 - config.y0).epsilon(1e-14));
  for (int j = 0; j + 1 < g; ++j) {
    const double u = config.u[j];
    CHECK(hat.u_hat[j] == doctest::Approx(u * (1.0 - config.y0) / (u - config.y0)).epsilon(1e-13));
  }
}
