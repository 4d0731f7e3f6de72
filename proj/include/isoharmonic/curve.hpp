#pragma once

#include "isoharmonic/errors.hpp"
#include "isoharmonic/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isoharmonic {

// Real hyperelliptic curve v^2 = prod (u - a_j) with ascending branch points.
// v is the product of principal square roots: positive for large real u and
// v(conj z) = conj v(z). On the real axis the upper-edge value is used.
class RealCurve {
 public:
  RealCurve() = default;
  explicit RealCurve(Eigen::VectorXd ascending);

  const Eigen::VectorXd& points() const { return a_; }
  Eigen::Index size() const { return a_.size(); }
  bool odd() const { return a_.size() % 2 == 1; }
  int genus() const { return int((a_.size() - 1) / 2); }

  cplx v(cplx z) const;
  cplx v_upper(double x) const { return v(cplx(x, 0.0)); }
  double delta(double x) const;
  double abs_sqrt(double x) const;  // sqrt|Delta(x)|
  PolyR delta_poly() const;
  // prod_{j != k} (a_k - a_j)
  double delta_prime(Eigen::Index k) const;

 private:
  Eigen::VectorXd a_;
};

// Finite union of disjoint intervals, endpoints c_1 > c_2 > ... > c_{2d}.
// Interval k (k = 1..d) is [c_{2k}, c_{2k-1}], so k = 1 is the rightmost one.
struct IntervalSystem {
  Eigen::VectorXd c;

  int d() const { return int(c.size() / 2); }
  double left(int k) const { return c[2 * k - 1]; }
  double right(int k) const { return c[2 * k - 2]; }
  Eigen::VectorXd ascending() const { return c.reverse(); }
  RealCurve curve() const { return RealCurve(ascending()); }
  bool contains(double x) const;

  static IntervalSystem from_endpoints(Eigen::VectorXd endpoints);  // any order, validated
};

enum class EndpointType { left, right };

struct SheetedPoint {
  cplx u;
  int sheet = 1;
  SheetedPoint involution() const { return {u, -sheet}; }
};

// Normalized odd-degree data: branch points 0, 1, x_1..x_g, u_1..u_{g-1} and infinity.
// Bands are [0,1], the g-1 intervals pairing x_j with u_j, and [x_g, inf).
// sigma[j] = left means x_{j+1} is the left endpoint of its band.
struct TCurveConfig {
  int g = 0;
  Eigen::VectorXd x;
  Eigen::VectorXd u;
  double y0 = 0.0;
  Eigen::VectorXd c_hat1;
  Eigen::VectorXd c_hat2;
  std::vector<EndpointType> sigma;
  cplx t = 1.0;

  // 0, 1, then the band endpoints in ascending order
  Eigen::VectorXd branch_points() const;
  RealCurve curve() const { return RealCurve(branch_points()); }
  // bands as [lo, hi]; the last one has hi = +inf
  std::vector<std::pair<double, double>> bands() const;
  // bounded gaps, ascending; gap j has the band j to its left
  std::vector<std::pair<double, double>> gaps() const;
  // Positions of x_i, u_m inside branch_points().
  int index_of_x(int i) const;
  int index_of_u(int m) const;
};

struct ValidationResult {
  std::optional<TCurveConfig> config;
  std::vector<std::string> violations;
  bool ok() const { return config.has_value(); }
};

ValidationResult validate_config(int g, const Eigen::VectorXd& x, const Eigen::VectorXd& u, double y0,
                                 const Eigen::VectorXd& c_hat1, const Eigen::VectorXd& c_hat2,
                                 const std::vector<EndpointType>& sigma, cplx t = 1.0);
// Throws NumericalError(argument) listing all violations.
TCurveConfig make_config(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double y0,
                         const std::vector<EndpointType>& sigma);
// Sigma inferred from the ordering of x_j, u_j.
std::vector<EndpointType> infer_sigma(const Eigen::VectorXd& x, const Eigen::VectorXd& u);

cplx sqrt_delta(const TCurveConfig& config, cplx z, int sheet = 1);

struct AtBranch {
  int k;  // index into branch_points()
};
struct AtInfinity {};

cplx phi_eval_regular(const TCurveConfig& config, cplx y, int sheet = 1);
cplx phi_eval_branch(const RealCurve& curve, Eigen::Index k);
inline cplx phi_eval(const TCurveConfig& config, AtBranch b) { return phi_eval_branch(config.curve(), b.k); }
inline cplx phi_eval(const TCurveConfig&, AtInfinity) { return 0.0; }
inline cplx phi_eval(const TCurveConfig& config, double y) { return phi_eval_regular(config, y); }

// Hat system with [0,1] as its leftmost interval (after the affine step) and the
// interval j+1 holding hat x_j and hat u_j. The last interval must have hat u_g on the right.
struct MoebiusRecord {
  double shift = 0.0;  // z' = (z - shift) / scale
  double scale = 1.0;
  double u_hat_g = 0.0;
};

struct HatData {
  Eigen::VectorXd x_hat;
  Eigen::VectorXd u_hat;  // length g, u_hat[g-1] is sent to infinity
  std::vector<EndpointType> sigma;  // length g - 1
};

double moebius(double z, double u_hat_g);
double moebius_inverse(double w, double y0);

HatData hat_from_intervals(const IntervalSystem& E, const std::vector<EndpointType>& sigma,
                           MoebiusRecord* record = nullptr);
IntervalSystem intervals_from_hat(const HatData& hat);
TCurveConfig normalize(const HatData& hat);
HatData denormalize(const TCurveConfig& config);
std::pair<TCurveConfig, MoebiusRecord> moebius_normalize(const IntervalSystem& E,
                                                         const std::vector<EndpointType>& sigma);
IntervalSystem moebius_inverse(const TCurveConfig& config, const MoebiusRecord& record);

}  // namespace isoharmonic
