#include "aelab/quadrature.hpp"

#include <cmath>

namespace aelab {

double QuadratureRule::measure() const {
  double m = 0.0;
  for (double wi : w) m += wi;
  return m;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

  QuadratureRule rule;
  rule.domain = QuadDomain::Interval;
  rule.x.resize(n);
  rule.w.resize(n);

  // Newton iteration on P_n, nodes seeded from the Chebyshev estimate.
  // Only the lower half is computed; the rest follows by symmetry.
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    rule.x[i] = xm - xl * z;
    rule.x[n - 1 - i] = xm + xl * z;
    rule.w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return rule;
}

Cplx adaptive_gauss(const std::function<Cplx(double)>& f, double a, double b,
                    double tol, int n0, int cap) {
  auto eval = [&](int n) {
    QuadratureRule r = gauss_legendre(n, a, b);
    Cplx acc = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) acc += r.w[i] * f(r.x[i]);
    return acc;
  };
  Cplx prev = eval(n0);
  for (int n = 2 * n0; n <= cap; n *= 2) {
    Cplx cur = eval(n);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace aelab
