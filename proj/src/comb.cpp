#include "isoharmonic/comb.hpp"

#include <cmath>
#include <numbers>

namespace isoharmonic {

cplx comb_map(const IntervalSystem& E, const EtaData& et, cplx z, const QuadOptions& opt) {
  if (z.imag() < 0.0) fail(ErrorKind::domain, "comb_map: lower half-plane");
  return cplx(0.0, 1.0 / std::numbers::pi) * green_function(E, et, z, opt);
}

cplx comb_map(const IntervalSystem& E, cplx z, const QuadOptions& opt) { return comb_map(E, eta(E, opt), z, opt); }

CombRegion comb_region(const IntervalSystem& E, const QuadOptions& opt) {
  CombRegion r;
  r.q = frequency_map(E, opt);
  const EtaData et = eta(E, opt);
  r.h.resize(et.gap_zeros.size());
  for (Eigen::Index j = 0; j < r.h.size(); ++j) r.h[j] = comb_map(E, et, cplx(et.gap_zeros[j], 0.0), opt).imag();
  return r;
}

std::vector<std::pair<double, double>> comb_boundary(const CombRegion& region, double top) {
  std::vector<std::pair<double, double>> pts{{0.0, top}, {0.0, 0.0}};
  for (Eigen::Index j = 0; j < region.q.size(); ++j) {
    pts.emplace_back(region.q[j], 0.0);
    pts.emplace_back(region.q[j], region.h[j]);
    pts.emplace_back(region.q[j], 0.0);
  }
  pts.emplace_back(1.0, 0.0);
  pts.emplace_back(1.0, top);
  return pts;
}

RectificationReport rectification_check(const DeformationPath& path, const QuadOptions& opt) {
  RectificationReport rep;
  for (const PathStep& s : path.steps) rep.regions.push_back(comb_region(intervals_from_hat(s.hat), opt));
  if (rep.regions.empty()) return rep;
  const CombRegion& r0 = rep.regions.front();
  for (const CombRegion& r : rep.regions)
    if (r.q.size()) rep.q_drift = std::max(rep.q_drift, (r.q - r0.q).cwiseAbs().maxCoeff());
  if (r0.h.size()) rep.h_change = (rep.regions.back().h - r0.h).cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace isoharmonic
