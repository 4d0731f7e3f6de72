#pragma once

#include "isoharmonic/measures.hpp"
#include "isoharmonic/schlesinger.hpp"

#include <functional>
#include <string>
#include <vector>

namespace isoharmonic {

// evolve: x moves in normalized coordinates, y0 follows.
// pinned_at_infinity: hat x moves with the pole of the original system at infinity.
enum class PolePolicy { evolve, pinned_at_infinity };

struct NewtonOptions {
  double tol = 1e-11;
  int max_iter = 50;
  double fd_step = 1e-7;
};

struct InversionResult {
  TCurveConfig config;
  HatData hat;
  int iterations = 0;
  double residual = 0.0;
};

// Solves harmonic_frequencies(x, u, y0) = target for (u, y0) with x fixed ("evolve").
InversionResult invert_frequencies(const Eigen::VectorXd& x, const std::vector<EndpointType>& sigma,
                                   const Eigen::VectorXd& target, const Eigen::VectorXd& u_guess, double y0_guess,
                                   const NewtonOptions& nopt = {}, const QuadOptions& opt = {});
// Solves frequency_map(E_hat) = target for u_hat with x_hat fixed ("pinned at infinity").
InversionResult invert_frequencies(const HatData& guess, const Eigen::VectorXd& target,
                                   const NewtonOptions& nopt = {}, const QuadOptions& opt = {});

struct DependentDerivatives {
  Eigen::MatrixXcd du_dx;   // (g-1) x g, du_m/dx_i
  Eigen::VectorXcd dy0_dx;  // g
  Eigen::MatrixXcd du_dx_g;
  Eigen::VectorXcd dy0_dx_g;
  Eigen::VectorXcd dy0_dx_split;
  double cross_check = 0.0;  // max relative gap between the formula families
};

DependentDerivatives dependent_derivatives(const TCurveConfig& config, const QuadOptions& opt = {});

// d u_hat_j / d x_hat_k, j, k = 1..g (u_hat_g = 1 - y0).
struct ChebyshevDynamics {
  Eigen::MatrixXd du_hat_dx_hat;
  Eigen::MatrixXd du_hat_dx;  // direct chain-rule values d u_hat_j / d x_i
  Eigen::MatrixXd dx_hat_dx;
};

ChebyshevDynamics chebyshev_dynamics(const TCurveConfig& config, const QuadOptions& opt = {});

struct PathStep {
  double s = 0.0;
  TCurveConfig config;
  HatData hat;
  double drift = 0.0;  // ||F - target||_inf after the corrector
  int iterations = 0;
};

struct DeformationPath {
  PolePolicy policy = PolePolicy::evolve;
  Eigen::VectorXd target;
  std::vector<PathStep> steps;
  bool complete = true;
  std::string diagnostic;
};

// x_path(s), s in [0, 1], gives normalized x (evolve) or hat x (pinned). x_path(0) must match the start.
DeformationPath integrate_path(const TCurveConfig& start, const std::function<Eigen::VectorXd(double)>& x_path,
                               int steps, PolePolicy policy = PolePolicy::evolve, const NewtonOptions& nopt = {},
                               const QuadOptions& opt = {});

// Linear path from the start to x_end.
std::function<Eigen::VectorXd(double)> linear_path(const Eigen::VectorXd& x_start, const Eigen::VectorXd& x_end);

}  // namespace isoharmonic
