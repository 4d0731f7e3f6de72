#pragma once

#include "isoharmonic/deform.hpp"
#include "isoharmonic/pell.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isoharmonic {

// Billiard inside sum x_i^2 / b_i = 1 with confocal caustics C_alpha.
struct BilliardConfig {
  Eigen::VectorXd b;      // ascending, positive
  Eigen::VectorXd alpha;  // ascending, d - 1 values

  int d() const { return int(b.size()); }
  // merged ascending parameters e_1 .. e_{2d-1}
  Eigen::VectorXd e() const;
  // caustic side per interval k = 1..d-1: left means 1/alpha_k is the left endpoint of [c_{2k}, c_{2k-1}]
  std::vector<EndpointType> caustic_side() const;
  // Jacobi segment of lambda_i: [0, e_1], [e_2, e_3], ...
  std::pair<double, double> segment(int i) const;
};

// Throws NumericalError(argument) unless alpha_j is e_{2j-1} or e_{2j} and e_{2d-1} = b_d.
void validate_billiard(const BilliardConfig& config);

// E with c_{2d} = 0 and c_j = 1/e_j.
IntervalSystem reciprocal_system(const BilliardConfig& config);
// Hat data with [0, 1] = [0, b_d / b_d]: x_hat_j = b_d / b_{d-j}, u_hat_j = b_d / alpha_{d-j}.
HatData billiard_hat(const BilliardConfig& config);
// Inverse of billiard_hat with b_d given.
BilliardConfig billiard_from_hat(const HatData& hat, double b_d = 1.0);

Eigen::VectorXd jacobi_coords(const Eigen::VectorXd& point, const Eigen::VectorXd& b);
// Cartesian point with the given Jacobi coordinates in the positive orthant.
Eigen::VectorXd point_from_jacobi(const Eigen::VectorXd& lambda, const Eigen::VectorXd& b);

struct BilliardState {
  Eigen::VectorXd point;
  Eigen::VectorXd direction;  // unit
};

// Point on the ellipsoid with Jacobi coordinates (0, lambda_2, ..) and the inward unit direction
// tangent to every caustic; signs[i] picks the sign of the component along the normal of C_{lambda_i}, i >= 1.
BilliardState tangent_start(const BilliardConfig& config, const Eigen::VectorXd& lambda_rest,
                            const std::vector<int>& signs = {});

// |B^2 - A C| / scale for the restriction of C_alpha to the line.
double tangency_defect(const BilliardState& s, const Eigen::VectorXd& b, double alpha);

struct Trajectory {
  std::vector<Eigen::VectorXd> points;      // bounce points, points[0] = start
  std::vector<Eigen::VectorXd> directions;  // direction leaving points[k]
  std::vector<Eigen::VectorXi> events;      // per segment: turning events of each lambda_i
  Eigen::VectorXi winding;                  // m_i = (turning events of lambda_{i+1}) / 2
  double tangency_drift = 0.0;
  double reflection_defect = 0.0;  // max | angle in - angle out |
  double closure_gap = 0.0;        // |p_n - p_0| + |v_n - v_0|
  bool monitor_agrees = true;      // sampled sign changes of d lambda_i / ds match the event count
};

Trajectory simulate(const BilliardConfig& config, const BilliardState& start, int n_bounces);

struct BilliardStep {
  BilliardConfig config;
  PellCertificate certificate;
};

struct BilliardPath {
  std::vector<BilliardStep> steps;
  bool complete = true;
  std::string diagnostic;
};

// Deforms b along b_path(s), s in [0, 1], holding the frequencies; each step is re-certified at degree n.
BilliardPath deform_billiard(const BilliardConfig& config, const std::function<Eigen::VectorXd(double)>& b_path,
                             int steps, int n, const QuadOptions& opt = {});

// Five-periodic support of the worked example: hat system solved for f = (2/5, 4/5), b_3 = 1.
BilliardConfig five_periodic_config(const QuadOptions& opt = {});

}  // namespace isoharmonic
