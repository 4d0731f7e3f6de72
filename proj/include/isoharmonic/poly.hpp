#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace isoharmonic {

using cplx = std::complex<double>;

// Polynomials are coefficient vectors in ascending powers: p(u) = sum_k p[k] u^k.
template <class Scalar>
using Poly = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using PolyR = Poly<double>;
using PolyC = Poly<cplx>;

template <class Scalar, class T>
auto poly_eval(const Poly<Scalar>& p, const T& u) {
  using R = decltype(Scalar() * u);
  R acc = R(0);
  for (Eigen::Index k = p.size() - 1; k >= 0; --k) acc = acc * u + p[k];
  return acc;
}

template <class Scalar>
Poly<Scalar> poly_mul(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (a.size() == 0 || b.size() == 0) return Poly<Scalar>();
  Poly<Scalar> c = Poly<Scalar>::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

template <class Scalar>
Poly<Scalar> poly_add(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  Poly<Scalar> c = Poly<Scalar>::Zero(std::max(a.size(), b.size()));
  c.head(a.size()) += a;
  c.head(b.size()) += b;
  return c;
}

template <class Scalar>
Poly<Scalar> poly_deriv(const Poly<Scalar>& p) {
  if (p.size() <= 1) return Poly<Scalar>::Zero(1);
  Poly<Scalar> d(p.size() - 1);
  for (Eigen::Index k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Scalar(double(k));
  return d;
}

// prod_j (u - r_j)
template <class Scalar, class Vec>
Poly<Scalar> poly_from_roots(const Vec& roots) {
  Poly<Scalar> p = Poly<Scalar>::Ones(1);
  for (Eigen::Index j = 0; j < roots.size(); ++j) {
    Poly<Scalar> f(2);
    f << Scalar(-roots[j]), Scalar(1);
    p = poly_mul(p, f);
  }
  return p;
}

template <class Scalar>
Poly<Scalar> poly_monomial(int k, Scalar c = Scalar(1)) {
  Poly<Scalar> p = Poly<Scalar>::Zero(k + 1);
  p[k] = c;
  return p;
}

// Long division a = q*b + r with deg r < deg b.
template <class Scalar>
void poly_divmod(const Poly<Scalar>& a, const Poly<Scalar>& b, Poly<Scalar>& q, Poly<Scalar>& r) {
  const Eigen::Index nb = b.size();
  if (nb == 0 || b[nb - 1] == Scalar(0)) throw std::invalid_argument("poly_divmod: zero divisor");
  r = a;
  if (a.size() < nb) {
    q = Poly<Scalar>::Zero(1);
    return;
  }
  q = Poly<Scalar>::Zero(a.size() - nb + 1);
  for (Eigen::Index k = a.size() - nb; k >= 0; --k) {
    Scalar c = r[k + nb - 1] / b[nb - 1];
    q[k] = c;
    for (Eigen::Index j = 0; j < nb; ++j) r[k + j] -= c * b[j];
  }
  r.conservativeResize(std::max<Eigen::Index>(nb - 1, 1));
}

// Synthetic division by (u - a): p(u) = (u - a) q(u) + p(a).
template <class Scalar>
Poly<Scalar> poly_deflate(const Poly<Scalar>& p, Scalar a) {
  if (p.size() <= 1) return Poly<Scalar>::Zero(1);
  Poly<Scalar> q(p.size() - 1);
  Scalar acc = p[p.size() - 1];
  q[q.size() - 1] = acc;
  for (Eigen::Index k = p.size() - 2; k >= 1; --k) {
    acc = p[k] + a * acc;
    q[k - 1] = acc;
  }
  return q;
}

template <class Scalar>
Poly<Scalar> poly_trim(const Poly<Scalar>& p, double tol = 0.0) {
  Eigen::Index n = p.size();
  while (n > 1 && std::abs(p[n - 1]) <= tol) --n;
  return p.head(n);
}

inline PolyC to_complex(const PolyR& p) { return p.cast<cplx>(); }

}  // namespace isoharmonic
