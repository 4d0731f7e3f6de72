#pragma once

#include "isoharmonic/deform.hpp"

#include <vector>

namespace isoharmonic {

// theta = (i/pi) G maps the upper half-plane onto {0 < Re < 1, Im > 0} minus vertical slits.
cplx comb_map(const IntervalSystem& E, cplx z, const QuadOptions& opt = {});
cplx comb_map(const IntervalSystem& E, const EtaData& et, cplx z, const QuadOptions& opt = {});

struct CombRegion {
  Eigen::VectorXd q;  // slit abscissae (= frequencies)
  Eigen::VectorXd h;  // slit heights
};

CombRegion comb_region(const IntervalSystem& E, const QuadOptions& opt = {});

// Boundary polyline of the region, closed off at height top.
std::vector<std::pair<double, double>> comb_boundary(const CombRegion& region, double top);

struct RectificationReport {
  double q_drift = 0.0;     // max_j max_steps |q_j(step) - q_j(0)|
  double h_change = 0.0;    // max_j |h_j(end) - h_j(0)|
  std::vector<CombRegion> regions;
};

// Comb regions of the hat interval systems along a path.
RectificationReport rectification_check(const DeformationPath& path, const QuadOptions& opt = {});

}  // namespace isoharmonic
