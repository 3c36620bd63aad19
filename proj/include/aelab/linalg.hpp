#pragma once

#include <functional>
#include <Eigen/Dense>

#include "aelab/types.hpp"

namespace aelab {

struct SmallestSingular {
  double sigma_min = 0.0;
  Eigen::VectorXcd v_min;  // unit right singular vector
};

/// Smallest singular value and right singular vector of a dense complex
/// matrix. Throws on non-finite entries.
SmallestSingular svd_smallest(const Eigen::MatrixXcd& a);

/// Scalar field evaluator with an optional validity domain. fd stencils check
/// `inside` before touching `f`.
struct ScalarField {
  std::function<Cplx(const Vec2&)> f;
  std::function<bool(const Vec2&)> inside;  // empty means all of R^2

  Cplx operator()(const Vec2& x) const { return f(x); }
  bool in_domain(const Vec2& x) const { return !inside || inside(x); }
};

struct VectorField {
  std::function<CVec2(const Vec2&)> f;
  std::function<bool(const Vec2&)> inside;

  CVec2 operator()(const Vec2& x) const { return f(x); }
  bool in_domain(const Vec2& x) const { return !inside || inside(x); }
};

/// Central-difference gradient, O(step^2). Throws std::domain_error if a
/// stencil point leaves the field's domain.
CVec2 fd_gradient(const ScalarField& f, const Vec2& x, double step);

/// Central-difference Jacobian (row i = gradient of component i).
CMat2 fd_jacobian(const VectorField& f, const Vec2& x, double step);

/// Five-point Laplacian estimate.
Cplx fd_laplacian(const ScalarField& f, const Vec2& x, double step);

}  // namespace aelab
