#include "fixtures.hpp"
#include "isoharmonic/contour.hpp"
#include "isoharmonic/measures.hpp"
#include "isoharmonic/periods.hpp"

#include <doctest.h>

#include <boost/math/special_functions/ellint_1.hpp>

using namespace fixtures;

TEST_CASE("arcsine integral") {
  // int_{-1}^{1} dx / sqrt(1 - x^2) = pi
  const RealCurve c(vec({-1.0, 1.0}));
  const cplx I = edge_integral(c, [](cplx) { return cplx(1.0); }, 0, QuadOptions{});
  CHECK(std::abs(std::abs(I) - M_PI) < 1e-13);
}

TEST_CASE("normalized basis has identity a-periods") {
  for (const TCurveConfig& c : {config_g2(), config_g3()}) {
    PeriodData pd;
    const auto omega = normalized_basis(c, &pd);
    const RealCurve curve = c.curve();
    for (int j = 0; j < c.g; ++j)
      for (int k = 0; k < c.g; ++k) {
        const cplx a = a_period(curve, omega[std::size_t(k)], j);
        CHECK(std::abs(a - (j == k ? 1.0 : 0.0)) < 1e-10);
      }
    const Eigen::MatrixXcd B = riemann_matrix(c);
    CHECK((B - B.transpose()).norm() < 1e-9);
    Eigen::LLT<Eigen::MatrixXd> llt(B.imag());
    CHECK(llt.info() == Eigen::Success);
  }
}

TEST_CASE("genus one period ratio") {
  // y^2 = u (u - 1)(u - lambda): the band [0, 1] gives 2K(k)/sqrt(lambda), the gap [1, lambda] gives 2K(k')/sqrt(lambda), k^2 = 1/lambda
  const double lam = 3.0;
  const RealCurve c(vec({0.0, 1.0, lam}));
  const PeriodData pd = compute_periods(c);
  const cplx tau = pd.raw_b(0, 0) / pd.raw_a(0, 0);
  const double k = std::sqrt(1.0 / lam), kp = std::sqrt(1.0 - k * k);
  const double ratio = boost::math::ellint_1(k) / boost::math::ellint_1(kp);
  CHECK(std::abs(std::abs(tau.imag()) - ratio) < 1e-10 * ratio);
  CHECK(std::abs(tau.real()) < 1e-10);
}

TEST_CASE("v basis evaluation matrix") {
  const TCurveConfig c = config_g3();
  const auto vb = v_basis(c);
  for (int i = 0; i < c.g; ++i) {
    for (int m = 0; m + 1 < c.g; ++m)
      CHECK(std::abs(eval_at_branch(c, vb[std::size_t(i)], c.index_of_u(m)) - (i == m ? 1.0 : 0.0)) < 1e-12);
    CHECK(std::abs(eval_at_regular(c, vb[std::size_t(i)], c.y0) - (i == c.g - 1 ? 1.0 : 0.0)) < 1e-12);
    if (i + 1 < c.g) CHECK(std::abs(eval_at_regular(c, vb[std::size_t(i)], c.y0, -1)) < 1e-12);
  }
}

TEST_CASE("third-kind differential with zero constants") {
  const TCurveConfig c = config_g2();
  const OmegaData om = omega_third_kind(c);
  const RealCurve curve = c.curve();
  for (int j = 0; j < c.g; ++j) CHECK(std::abs(a_period(curve, om.rep, j)) < 1e-10);
}

TEST_CASE("abel map at infinity against frequencies") {
  const IntervalSystem E = cubic_preimage();
  const Eigen::VectorXcd A = abel_infinity(E);
  const Vec f = frequency_map(E);
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    CHECK(std::abs(-A[j].real() - f[j]) < 1e-8);
  }
  CHECK(std::abs(f[0] - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(f[1] - 2.0 / 3.0) < 1e-9);
}
