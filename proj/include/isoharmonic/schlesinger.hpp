#pragma once

#include "isoharmonic/periods.hpp"

#include <string>
#include <vector>

namespace isoharmonic {

// Residues A_{a_j} of the Fuchsian system at the finite branch points (ordered as branch_points()).
struct ResidueSet {
  Eigen::VectorXd points;
  Eigen::VectorXcd A11, A12, A21, beta;
  cplx t = 1.0;
  cplx omega_inf = 0.0;
  cplx phi_q0 = 0.0;
  std::vector<int> x_index, u_index;

  Eigen::Index size() const { return points.size(); }
  Eigen::Matrix2cd matrix(Eigen::Index j) const;
  Eigen::Matrix2cd sum() const;
};

ResidueSet residue_matrices(const TCurveConfig& config, cplx t = 1.0, const QuadOptions& opt = {});
ResidueSet residue_matrices(const TCurveConfig& config, const OmegaData& om, cplx t);

// beta through the defining derivative, d^{g-1}/dy0^{g-1} {1/(phi(Q0)(a - y0))}/(g-1)!,
// evaluated by central differences in y0 on the fixed curve.
Eigen::VectorXcd betas_by_differentiation(const TCurveConfig& config, const ResidueSet& r, double h = 1e-3);

// Right-hand sides of the constrained system for d/dx_i, indexed like the residues.
// du_dx(m, i) = du_m/dx_i.
struct RhsSet {
  std::vector<Eigen::Matrix2cd> rhs;  // self term uses -sum of the others
  Eigen::Matrix2cd self_direct;       // the x_i equation evaluated directly
  int self = -1;
};

RhsSet constrained_rhs(const ResidueSet& r, const Eigen::MatrixXcd& du_dx, int i);

struct SchlesingerReport {
  int direction = 0;
  double h = 0.0;
  double residual = 0.0;               // max over branch points and entries of |FD - RHS|
  Eigen::MatrixXd entry_residual;      // row j: |FD - RHS| for entries 11, 12, 21, 22
  double self_form_gap = 0.0;          // |direct - (-sum)| for the x_i equation
};

SchlesingerReport verify_schlesinger(const TCurveConfig& config, cplx t, int i, double h = 1e-4,
                                     const QuadOptions& opt = {});

struct IdentityReport {
  std::vector<std::pair<std::string, double>> defects;
  double max_defect() const;
};

IdentityReport identity_checks(const TCurveConfig& config, cplx t = 1.0, const QuadOptions& opt = {});

}  // namespace isoharmonic
