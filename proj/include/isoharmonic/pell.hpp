#pragma once

#include "isoharmonic/measures.hpp"

#include <optional>

namespace isoharmonic {

struct RegularData {
  int n = 0;
  Eigen::VectorXi winding;  // m_0 .. m_{d-1}, m_0 = n
};

// Rational reconstruction of every f_j by continued fractions (denominator <= q_max, error <= tol).
std::optional<RegularData> detect_regular(const Eigen::VectorXd& f, int q_max = 1000, double tol = 1e-10);

// A = exp(n (G + i pi)); |A| = 1 on E and A ~ C z^n. Lower half-plane by conjugation.
cplx akhiezer(const IntervalSystem& E, int n, cplx z, const QuadOptions& opt = {});
cplx akhiezer(const IntervalSystem& E, const EtaData& et, int n, cplx z, const QuadOptions& opt = {});

struct PellCertificate {
  int n = 0;
  PolyR P, Q;
  Eigen::VectorXi signature;  // tau_j: zeros of Q in interval j+1 (rightmost first)
  Eigen::VectorXi winding;    // m_j = m_{j+1} + tau_j + 1, m_0 = deg P
  double residual = 0.0;
  double division_remainder = 0.0;  // relative remainder of (P^2 - 1) / Delta
  double sqrt_defect = 0.0;         // relative defect of Q^2 against the quotient
  bool winding_consistent = true;   // m_d = 0
};

PellCertificate chebyshev_poly(const IntervalSystem& E, int n, const QuadOptions& opt = {});
// Extracts Q from P, then the residual, signature and winding. A P that is not a Pell solution
// shows up in the residual and the defect fields; chebyshev_poly turns those into errors.
PellCertificate pell_residual(const PolyR& P, const IntervalSystem& E);

// Number of alternating +-1 extrema of P over E (expected n + d).
int equioscillation_count(const PolyR& P, const IntervalSystem& E, double tol = 1e-8);
// Critical points of P inside the gaps, ascending.
Eigen::VectorXd gap_critical_points(const PolyR& P, const IntervalSystem& E);

}  // namespace isoharmonic
