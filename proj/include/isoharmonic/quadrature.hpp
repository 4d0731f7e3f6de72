#pragma once

#include "isoharmonic/poly.hpp"

#include <functional>
#include <vector>

namespace isoharmonic {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre rule, computed by Newton on P_n and cached per n.
const GaussRule& gauss_legendre(int n);

// Nodes cos((2k-1)pi/(2n)), k = 1..n, of the first-kind Gauss-Chebyshev rule;
// every weight equals pi/n.
std::vector<double> chebyshev_nodes(int n);

// int_{-1}^{1} f(x) / sqrt(1 - x^2) dx with n nodes.
cplx gauss_chebyshev(const std::function<cplx(double)>& f, int n);

// int_a^b f(s) ds for smooth f, adaptive bisection comparing 24- and 48-point rules.
cplx adaptive_legendre(const std::function<cplx(double)>& f, double a, double b,
                       double tol = 1e-14, int max_depth = 40);

}  // namespace isoharmonic
