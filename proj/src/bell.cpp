#include "isoharmonic/bell.hpp"

#include "isoharmonic/curve.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace isoharmonic {

namespace {

// Enumerate p_1..p_l with sum k p_k = l; lexicographic order of the vector (p_1, .., p_l).
void enumerate(int l, int k, int remaining, std::vector<int>& p, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (remaining == 0) out.push_back(p);
    return;
  }
  // parts of size k contribute k * p_k; iterate k downward so that p_1 is decided last
  for (int m = 0; m * k <= remaining; ++m) {
    p[k - 1] = m;
    enumerate(l, k - 1, remaining - m * k, p, out);
  }
  p[k - 1] = 0;
}

}  // namespace

Rational bell_coefficient(const std::vector<int>& p) {
  using boost::multiprecision::cpp_int;
  int l = 0, s = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    l += int(k + 1) * p[k];
    s += p[k];
  }
  cpp_int num = 1;
  for (int i = 2; i <= l; ++i) num *= i;
  cpp_int den = cpp_int(1) << s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (int i = 2; i <= p[k]; ++i) den *= i;
    for (int e = 0; e < p[k]; ++e) den *= int(k + 1);
  }
  Rational c(num, den);
  return (s % 2) ? Rational(-c) : c;
}

const std::vector<PartitionTerm>& bell_terms(int l) {
  static std::map<int, std::vector<PartitionTerm>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> parts;
  std::vector<int> p(l, 0);
  enumerate(l, l, l, p, parts);
  std::sort(parts.begin(), parts.end());
  std::vector<PartitionTerm> terms;
  terms.reserve(parts.size());
  for (auto& q : parts) terms.push_back({q, bell_coefficient(q)});
  return cache.emplace(l, std::move(terms)).first->second;
}

Eigen::VectorXd sigma_sums(const Eigen::VectorXd& branch_points, double y0, int K) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(K);
  for (Eigen::Index j = 0; j < branch_points.size(); ++j) {
    double d = branch_points[j] - y0;
    if (d == 0.0) throw std::domain_error("sigma_sums: y0 coincides with a branch point");
    double r = 1.0 / d, pw = 1.0;
    for (int k = 0; k < K; ++k) {
      pw *= r;
      s[k] += pw;
    }
  }
  return s;
}

cplx phi_inv_derivative(const TCurveConfig& config, int l) {
  Eigen::VectorXd a = config.branch_points();
  cplx phi_q0 = phi_eval_regular(config, config.y0);
  if (l == 0) return 1.0 / phi_q0;
  Eigen::VectorXd s = sigma_sums(a, config.y0, l);
  return bell_L(l, s) / phi_q0;
}

cplx phi_power_derivative(const TCurveConfig& config, int l, int n) {
  Eigen::VectorXd a = config.branch_points();
  cplx phin = std::pow(phi_eval_regular(config, config.y0), n);
  if (l == 0) return phin;
  Eigen::VectorXd s = -double(n) * sigma_sums(a, config.y0, l);
  return phin * bell_L(l, s);
}

}  // namespace isoharmonic
