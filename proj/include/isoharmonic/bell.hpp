#pragma once

#include "isoharmonic/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace isoharmonic {

struct TCurveConfig;

using Rational = boost::multiprecision::cpp_rational;

struct PartitionTerm {
  std::vector<int> p;  // p[k-1] = multiplicity of part k, sum k p_k = l
  Rational coefficient;
};

// Partitions of l with their coefficients, lexicographic in (p_1..p_l); cached per l.
const std::vector<PartitionTerm>& bell_terms(int l);

// Closed form of the coefficient for exponent vector p.
Rational bell_coefficient(const std::vector<int>& p);

template <class Derived>
typename Derived::Scalar bell_L(int l, const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  if (l < 0 || z.size() != l) throw std::invalid_argument("bell_L: z must have length l");
  if (l > 32) throw std::invalid_argument("bell_L: l > 32 not supported");
  if (l == 0) return Scalar(1);
  Scalar total(0);
  for (const PartitionTerm& t : bell_terms(l)) {
    Scalar term(t.coefficient.convert_to<double>());
    for (int k = 0; k < l; ++k)
      for (int e = 0; e < t.p[k]; ++e) term *= z[k];
    total += term;
  }
  return total;
}

// Sigma_k = sum_j (a_j - y0)^(-k), k = 1..K.
Eigen::VectorXd sigma_sums(const Eigen::VectorXd& branch_points, double y0, int K);

// d^l/dy0^l of phi(Q0)^(-n') where the default form is 1/phi(Q0);
// with exponent n given, returns d^l/dy0^l phi(Q0)^n = phi^n L_l(-n Sigma).
cplx phi_inv_derivative(const TCurveConfig& config, int l);
cplx phi_power_derivative(const TCurveConfig& config, int l, int n);

}  // namespace isoharmonic
