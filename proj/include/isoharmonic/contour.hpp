#pragma once

#include "isoharmonic/curve.hpp"

#include <functional>

namespace isoharmonic {

// Integrands are f(z) dz / v(z) with v the principal branch of RealCurve;
// f is the rational prefactor and is evaluated at complex arguments.
using Prefactor = std::function<cplx(cplx)>;

struct QuadOptions {
  int nodes = 256;
  int max_nodes = 2048;
  double gate = 1e-11;  // relative change allowed under doubling
};

// Integral on the upper edge between consecutive branch points a_k < a_{k+1},
// Gauss-Chebyshev in z = mid + half cos(theta).
cplx edge_integral(const RealCurve& c, const Prefactor& f, Eigen::Index k, int nodes);
// a_last .. +inf and -inf .. a_0 along the upper edge, z = a +- s^2 with s = l(1+x)/(1-x).
cplx tail_integral(const RealCurve& c, const Prefactor& f, int nodes);
cplx head_integral(const RealCurve& c, const Prefactor& f, int nodes);

// Repeats a node-count dependent computation with doubled nodes until the gate holds.
cplx gated(const std::function<cplx(int)>& rule, const QuadOptions& opt);

cplx edge_integral(const RealCurve& c, const Prefactor& f, Eigen::Index k, const QuadOptions& opt);
cplx tail_integral(const RealCurve& c, const Prefactor& f, const QuadOptions& opt);
cplx head_integral(const RealCurve& c, const Prefactor& f, const QuadOptions& opt);

// Upper-edge integral from the branch point a_k to real x (x strictly between the
// neighbouring branch points), via z = a_k +- s^2.
cplx from_branch_integral(const RealCurve& c, const Prefactor& f, Eigen::Index k, double x);

// Upper-edge integral from a_0 to real x (any x, including x < a_0).
cplx upper_edge_integral(const RealCurve& c, const Prefactor& f, double x, const QuadOptions& opt = {});

// Integral from a_0 to z with Im z >= 0: upper edge to Re z, then a vertical leg.
cplx path_integral(const RealCurve& c, const Prefactor& f, cplx z, const QuadOptions& opt = {});

// Index k with a_k < x < a_{k+1}; -1 left of a_0, size()-1 right of the last point.
Eigen::Index locate(const RealCurve& c, double x);

}  // namespace isoharmonic
