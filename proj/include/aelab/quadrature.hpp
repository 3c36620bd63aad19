#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aelab/types.hpp"

namespace aelab {

/// Descriptor of the set a rule integrates over.
enum class QuadDomain { Interval, Arc, Sector, Triangle };

/// Nodes/weights pair. 1D rules store nodes in `x`; 2D rules use `x`,`y`.
/// Weights include all Jacobians, so sum(w) equals the measure of the domain.
struct QuadratureRule {
  QuadDomain domain = QuadDomain::Interval;
  std::vector<double> x;
  std::vector<double> y;  // empty for 1D rules
  std::vector<double> w;

  std::size_t size() const { return w.size(); }
  double measure() const;

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(x[0]));
    R acc{};
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * f(x[i]);
    return acc;
  }

  template <class F>
  auto integrate2d(F&& f) const {
    using R = decltype(f(x[0], y[0]));
    R acc{};
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * f(x[i], y[i]);
    return acc;
  }
};

/// n-point Gauss-Legendre rule on [a,b]; exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n, double a, double b);

/// Adaptive wrapper: doubles the order until two refinements agree to `tol`
/// or the node cap is hit. Intended for entire integrands where convergence
/// is geometric.
Cplx adaptive_gauss(const std::function<Cplx(double)>& f, double a, double b,
                    double tol = 1e-12, int n0 = 16, int cap = 4096);

}  // namespace aelab
