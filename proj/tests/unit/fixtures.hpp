#pragma once

#include "isoharmonic/curve.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <initializer_list>

namespace fixtures {

using namespace isoharmonic;
using Vec = Eigen::VectorXd;

inline Vec vec(std::initializer_list<double> v) {
  Vec r(Eigen::Index(v.size()));
  Eigen::Index k = 0;
  for (double x : v) r[k++] = x;
  return r;
}

// (z^3 - 3z)^{-1}([-1, 1]): endpoints 2 cos(k pi / 9).
inline IntervalSystem cubic_preimage() {
  Vec e(6);
  const int ks[6] = {1, 2, 4, 5, 7, 8};
  for (int i = 0; i < 6; ++i) e[i] = 2.0 * std::cos(ks[i] * M_PI / 9.0);
  return IntervalSystem::from_endpoints(e);
}

inline TCurveConfig config_g2() { return make_config(vec({2.0, 5.0}), vec({3.0}), -1.0, {EndpointType::left}); }

inline TCurveConfig config_g3() {
  return make_config(vec({2.0, 5.0, 9.0}), vec({3.0, 6.5}), -1.5, {EndpointType::left, EndpointType::left});
}

}  // namespace fixtures
