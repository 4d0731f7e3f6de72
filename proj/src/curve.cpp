#include "isoharmonic/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace isoharmonic {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::argument: return "argument error";
    case ErrorKind::pole: return "pole error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::degenerate: return "degenerate configuration";
    case ErrorKind::conditioning: return "conditioning error";
    case ErrorKind::convergence: return "convergence error";
    case ErrorKind::region: return "region error";
    case ErrorKind::contour: return "contour error";
    case ErrorKind::regularity: return "regularity error";
    case ErrorKind::conservation: return "conservation error";
  }
  return "error";
}

RealCurve::RealCurve(Eigen::VectorXd ascending) : a_(std::move(ascending)) {
  for (Eigen::Index j = 1; j < a_.size(); ++j)
    if (!(a_[j] > a_[j - 1])) fail(ErrorKind::argument, "branch points must be strictly ascending");
}

cplx RealCurve::v(cplx z) const {
  if (z.imag() == 0.0) {
    const double x = z.real();
    double mag = 1.0;
    int above = 0;
    for (Eigen::Index j = 0; j < a_.size(); ++j) {
      const double d = x - a_[j];
      mag *= std::sqrt(std::abs(d));
      if (d < 0) ++above;
    }
    static const cplx powers[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    return mag * powers[above % 4];
  }
  cplx p = 1.0;
  for (Eigen::Index j = 0; j < a_.size(); ++j) p *= std::sqrt(z - a_[j]);
  return p;
}

double RealCurve::delta(double x) const {
  double p = 1.0;
  for (Eigen::Index j = 0; j < a_.size(); ++j) p *= (x - a_[j]);
  return p;
}

double RealCurve::abs_sqrt(double x) const {
  double p = 1.0;
  for (Eigen::Index j = 0; j < a_.size(); ++j) p *= std::sqrt(std::abs(x - a_[j]));
  return p;
}

PolyR RealCurve::delta_poly() const { return poly_from_roots<double>(a_); }

double RealCurve::delta_prime(Eigen::Index k) const {
  double p = 1.0;
  for (Eigen::Index j = 0; j < a_.size(); ++j)
    if (j != k) p *= (a_[k] - a_[j]);
  return p;
}

bool IntervalSystem::contains(double x) const {
  for (int k = 1; k <= d(); ++k)
    if (x >= left(k) && x <= right(k)) return true;
  return false;
}

IntervalSystem IntervalSystem::from_endpoints(Eigen::VectorXd endpoints) {
  if (endpoints.size() < 2 || endpoints.size() % 2 != 0)
    fail(ErrorKind::argument, "interval system needs an even number (>= 2) of endpoints");
  std::sort(endpoints.begin(), endpoints.end(), std::greater<double>());
  const double spread = endpoints[0] - endpoints[endpoints.size() - 1];
  const double scale = spread > 0.0 ? spread : 1.0;
  for (Eigen::Index j = 1; j < endpoints.size(); ++j)
    if (endpoints[j - 1] - endpoints[j] < 1e-9 * scale)
      fail(ErrorKind::argument, "coincident or nearly coincident endpoints");
  return IntervalSystem{endpoints};
}

Eigen::VectorXd TCurveConfig::branch_points() const {
  Eigen::VectorXd a(2 * g + 1);
  a[0] = 0.0;
  a[1] = 1.0;
  for (int j = 0; j + 1 < g; ++j) {
    const bool xl = sigma[j] == EndpointType::left;
    a[2 + 2 * j] = xl ? x[j] : u[j];
    a[3 + 2 * j] = xl ? u[j] : x[j];
  }
  a[2 * g] = x[g - 1];
  return a;
}

int TCurveConfig::index_of_x(int i) const {
  if (i == g - 1) return 2 * g;
  return 2 + 2 * i + (sigma[i] == EndpointType::left ? 0 : 1);
}

int TCurveConfig::index_of_u(int m) const {
  return 2 + 2 * m + (sigma[m] == EndpointType::left ? 1 : 0);
}

std::vector<std::pair<double, double>> TCurveConfig::bands() const {
  Eigen::VectorXd a = branch_points();
  std::vector<std::pair<double, double>> b;
  for (int j = 0; j < g; ++j) b.emplace_back(a[2 * j], a[2 * j + 1]);
  b.emplace_back(a[2 * g], std::numeric_limits<double>::infinity());
  return b;
}

std::vector<std::pair<double, double>> TCurveConfig::gaps() const {
  Eigen::VectorXd a = branch_points();
  std::vector<std::pair<double, double>> gp;
  for (int j = 0; j < g; ++j) gp.emplace_back(a[2 * j + 1], a[2 * j + 2]);
  return gp;
}

std::vector<EndpointType> infer_sigma(const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
  std::vector<EndpointType> s;
  for (Eigen::Index j = 0; j < u.size(); ++j)
    s.push_back(x[j] < u[j] ? EndpointType::left : EndpointType::right);
  return s;
}

ValidationResult validate_config(int g, const Eigen::VectorXd& x, const Eigen::VectorXd& u, double y0,
                                 const Eigen::VectorXd& c_hat1, const Eigen::VectorXd& c_hat2,
                                 const std::vector<EndpointType>& sigma, cplx t) {
  ValidationResult res;
  auto& v = res.violations;
  if (g < 2) v.push_back("genus must be at least 2");
  if (x.size() != g) v.push_back("dimension mismatch: x must have length g");
  if (u.size() != g - 1) v.push_back("dimension mismatch: u must have length g-1");
  if (int(sigma.size()) != g - 1) v.push_back("dimension mismatch: sigma must have length g-1");
  if (c_hat1.size() != g || c_hat2.size() != g) v.push_back("dimension mismatch: c1, c2 must have length g");
  if (!v.empty()) return res;
  for (double val : {y0}) if (!std::isfinite(val)) v.push_back("y0 must be finite");
  std::vector<double> all = {0.0, 1.0, y0};
  for (int j = 0; j < g; ++j) all.push_back(x[j]);
  for (int j = 0; j + 1 < g; ++j) all.push_back(u[j]);
  std::vector<double> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  const double scale = std::max(1.0, std::max(std::abs(sorted.front()), std::abs(sorted.back())));
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    if (sorted[j] == sorted[j - 1]) {
      v.push_back("coincident branch points");
      break;
    }
    if (sorted[j] - sorted[j - 1] < 1e-9 * scale) {
      v.push_back("nearly coincident branch points");
      break;
    }
  }
  for (int j = 0; j + 1 < g; ++j) {
    const bool xl = x[j] < u[j];
    if (xl != (sigma[j] == EndpointType::left)) {
      std::ostringstream os;
      os << "sigma[" << j << "] inconsistent with the ordering of x and u";
      v.push_back(os.str());
    }
  }
  if (!v.empty()) return res;
  TCurveConfig c{g, x, u, y0, c_hat1, c_hat2, sigma, t};
  Eigen::VectorXd a = c.branch_points();
  bool ascending = true;
  for (Eigen::Index j = 1; j < a.size(); ++j) ascending = ascending && a[j] > a[j - 1];
  if (!ascending) v.push_back("bands overlap or are out of order");
  for (const auto& [lo, hi] : c.bands())
    if (y0 >= lo && y0 <= hi) v.push_back("y0 inside a band");
  if (v.empty()) res.config = c;
  return res;
}

TCurveConfig make_config(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double y0,
                         const std::vector<EndpointType>& sigma) {
  const int g = int(x.size());
  ValidationResult r = validate_config(g, x, u, y0, Eigen::VectorXd::Zero(g), Eigen::VectorXd::Zero(g), sigma);
  if (!r.ok()) {
    std::string msg;
    for (const auto& s : r.violations) msg += (msg.empty() ? "" : "; ") + s;
    fail(ErrorKind::argument, msg);
  }
  return *r.config;
}

cplx sqrt_delta(const TCurveConfig& config, cplx z, int sheet) {
  return double(sheet) * config.curve().v(z);
}

cplx phi_eval_regular(const TCurveConfig& config, cplx y, int sheet) {
  cplx v = sqrt_delta(config, y, sheet);
  if (v == 0.0) fail(ErrorKind::pole, "phi evaluated at a branch point");
  return 1.0 / v;
}

cplx phi_eval_branch(const RealCurve& curve, Eigen::Index k) {
  return 2.0 / std::sqrt(cplx(curve.delta_prime(k), 0.0));
}

double moebius(double z, double u_hat_g) { return z * (1.0 - u_hat_g) / (z - u_hat_g); }

double moebius_inverse(double w, double y0) { return w * (1.0 - y0) / (w - y0); }

HatData hat_from_intervals(const IntervalSystem& E, const std::vector<EndpointType>& sigma,
                           MoebiusRecord* record) {
  const int d = E.d();
  if (d < 3) fail(ErrorKind::argument, "normalization needs at least three intervals");
  const int g = d - 1;
  if (int(sigma.size()) != g - 1) fail(ErrorKind::argument, "sigma must have length d-2");
  Eigen::VectorXd a = E.ascending();
  const double shift = a[0], scale = a[1] - a[0];
  a = (a.array() - shift) / scale;
  HatData h;
  h.x_hat.resize(g);
  h.u_hat.resize(g);
  h.sigma = sigma;
  for (int j = 0; j + 1 < g; ++j) {
    const bool xl = sigma[j] == EndpointType::left;
    h.x_hat[j] = xl ? a[2 + 2 * j] : a[3 + 2 * j];
    h.u_hat[j] = xl ? a[3 + 2 * j] : a[2 + 2 * j];
  }
  h.x_hat[g - 1] = a[2 * g];
  h.u_hat[g - 1] = a[2 * g + 1];
  if (record) *record = MoebiusRecord{shift, scale, h.u_hat[g - 1]};
  return h;
}

IntervalSystem intervals_from_hat(const HatData& h) {
  const Eigen::Index g = h.x_hat.size();
  Eigen::VectorXd e(2 * g + 2);
  e[0] = 0.0;
  e[1] = 1.0;
  e.segment(2, g) = h.x_hat;
  e.segment(2 + g, g) = h.u_hat;
  return IntervalSystem::from_endpoints(e);
}

TCurveConfig normalize(const HatData& h) {
  const int g = int(h.x_hat.size());
  const double ug = h.u_hat[g - 1];
  if (ug == 0.0 || ug == 1.0) fail(ErrorKind::degenerate, "u_hat_g in {0,1}");
  Eigen::VectorXd x(g), u(g - 1);
  for (int j = 0; j < g; ++j) x[j] = moebius(h.x_hat[j], ug);
  for (int j = 0; j + 1 < g; ++j) u[j] = moebius(h.u_hat[j], ug);
  return make_config(x, u, 1.0 - ug, h.sigma);
}

HatData denormalize(const TCurveConfig& c) {
  HatData h;
  h.x_hat.resize(c.g);
  h.u_hat.resize(c.g);
  h.sigma = c.sigma;
  for (int j = 0; j < c.g; ++j) h.x_hat[j] = moebius_inverse(c.x[j], c.y0);
  for (int j = 0; j + 1 < c.g; ++j) h.u_hat[j] = moebius_inverse(c.u[j], c.y0);
  h.u_hat[c.g - 1] = 1.0 - c.y0;
  return h;
}

std::pair<TCurveConfig, MoebiusRecord> moebius_normalize(const IntervalSystem& E,
                                                         const std::vector<EndpointType>& sigma) {
  MoebiusRecord rec;
  HatData h = hat_from_intervals(E, sigma, &rec);
  return {normalize(h), rec};
}

IntervalSystem moebius_inverse(const TCurveConfig& config, const MoebiusRecord& record) {
  IntervalSystem hat = intervals_from_hat(denormalize(config));
  hat.c = (hat.c.array() * record.scale + record.shift).matrix();
  return hat;
}

}  // namespace isoharmonic
