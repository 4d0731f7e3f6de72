#pragma once

#include "isoharmonic/contour.hpp"
#include "isoharmonic/curve.hpp"

#include <optional>
#include <vector>

namespace isoharmonic {

// numerator(u) / (u - pole)? * du / v
struct DifferentialRep {
  PolyC numerator;
  std::optional<double> pole;

  cplx prefactor(cplx u) const {
    cplx p = poly_eval(numerator, u);
    return pole ? p / (u - *pole) : p;
  }
  Prefactor as_prefactor() const {
    return [rep = *this](cplx u) { return rep.prefactor(u); };
  }
};

// a_j loops around the gap (a_{2j+1}, a_{2j+2}); its period is twice the upper-edge integral.
// b_j is minus twice the sum of the upper-edge band integrals over [a_0,a_1], .., [a_{2j}, a_{2j+1}];
// the sign makes Im B positive definite.
struct PeriodData {
  Eigen::MatrixXcd raw_a;           // raw_a(j,k) = a_j-period of u^k du/v
  Eigen::MatrixXcd raw_b;
  Eigen::MatrixXcd coeffs;          // row k: numerator of omega_k
  Eigen::MatrixXcd riemann;         // B(j,k) = b_j-period of omega_k
  Eigen::VectorXcd I;               // a-periods of u^g phi
  Eigen::MatrixXcd beta_W;          // row j: beta^{(j)} for branch point j
  Eigen::MatrixXcd gamma_W;         // row m: gamma^{(m)} for u_m
  int node_count = 0;
};

cplx a_period(const RealCurve& c, const DifferentialRep& rep, int j, const QuadOptions& opt = {});
cplx b_period(const RealCurve& c, const DifferentialRep& rep, int j, const QuadOptions& opt = {});

// Upper-edge integral over [a_k, a_{k+1}]; throws if the pole lies inside.
cplx singular_integral(const RealCurve& c, const DifferentialRep& rep, Eigen::Index k,
                       const QuadOptions& opt = {});
cplx singular_integral(const TCurveConfig& config, const DifferentialRep& rep, Eigen::Index k,
                       const QuadOptions& opt = {});

// Normalized holomorphic basis on any real curve (odd or even degree).
PeriodData compute_periods(const RealCurve& c, const QuadOptions& opt = {});
std::vector<DifferentialRep> normalized_basis(const PeriodData& pd);
std::vector<DifferentialRep> normalized_basis(const TCurveConfig& config, PeriodData* out = nullptr,
                                              const QuadOptions& opt = {});
Eigen::MatrixXcd riemann_matrix(const TCurveConfig& config, const QuadOptions& opt = {});

// Holomorphic basis normalized by v_i(P_{u_j}) = delta_ij, v_i(Q0) = delta_ig.
std::vector<DifferentialRep> v_basis(const TCurveConfig& config);

struct OmegaData {
  DifferentialRep rep;  // numerator N of degree g, pole y0
  Eigen::VectorXcd delta;
  cplx v0;              // v at Q0 (upper edge of y0)
};

OmegaData omega_third_kind(const TCurveConfig& config, const QuadOptions& opt = {});

// Constant terms in the standard local coordinates.
cplx eval_at_branch(const TCurveConfig& config, const DifferentialRep& rep, Eigen::Index k);
cplx eval_at_regular(const TCurveConfig& config, const DifferentialRep& rep, double y, int sheet = 1);
cplx omega_eval_branch(const TCurveConfig& config, const OmegaData& om, Eigen::Index k);
cplx omega_eval_infinity(const TCurveConfig& config, const OmegaData& om);
cplx omega_eval_regular(const TCurveConfig& config, const OmegaData& om, double y, int sheet = 1);

// Evaluated bidifferential forms.
struct WForm {
  DifferentialRep rep;         // the part that is a plain DifferentialRep
  std::optional<double> pole;  // double pole (at a branch point) carried separately
  cplx pole_weight = 0.0;      // W = pole_weight/(u - pole) du/v + rep
};
WForm w_infinity(const TCurveConfig& config, const std::vector<DifferentialRep>& omega, PeriodData& pd,
                 const QuadOptions& opt = {});
WForm w_branch(const TCurveConfig& config, Eigen::Index k, const std::vector<DifferentialRep>& omega,
               PeriodData& pd, const QuadOptions& opt = {});
WForm w_dependent(const TCurveConfig& config, int m, const std::vector<DifferentialRep>& vb, PeriodData& pd,
                  const QuadOptions& opt = {});
// a-periods of a WForm, using the exact reduction for the branch-point pole.
cplx w_a_period(const TCurveConfig& config, const WForm& w, int j, const QuadOptions& opt = {});
cplx w_b_period(const TCurveConfig& config, const WForm& w, int j, const QuadOptions& opt = {});

// int_{P_inf}^{Q0} omega along (-inf, y0] on the upper edge.
Eigen::VectorXcd abel_q0(const TCurveConfig& config, const std::vector<DifferentialRep>& omega,
                         const QuadOptions& opt = {});
// c_hat1 realized from b-periods of Omega: b_j(Omega) / (4 pi i).
Eigen::VectorXcd c_hat1_from_omega(const TCurveConfig& config, const OmegaData& om, const QuadOptions& opt = {});

// A_{inf-}(inf+) on the even-degree model of E: 2 int_{c_1}^{inf} omega.
Eigen::VectorXcd abel_infinity(const IntervalSystem& E, const QuadOptions& opt = {});

}  // namespace isoharmonic
