#include "aelab/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace aelab {

SmallestSingular svd_smallest(const Eigen::MatrixXcd& a) {
  if (!a.allFinite()) throw std::invalid_argument("svd_smallest: non-finite entries");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  SmallestSingular out;
  out.sigma_min = sv(sv.size() - 1);
  out.v_min = svd.matrixV().col(sv.size() - 1);
  out.v_min /= out.v_min.norm();
  return out;
}

namespace {

void require_inside(const auto& field, const Vec2& x) {
  if (!field.in_domain(x)) throw std::domain_error("fd stencil leaves the field domain");
}

}  // namespace

CVec2 fd_gradient(const ScalarField& f, const Vec2& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_gradient: step must be > 0");
  CVec2 g;
  for (int i = 0; i < 2; ++i) {
    Vec2 e = Vec2::Zero();
    e(i) = step;
    const Vec2 xp = x + e, xm = x - e;
    require_inside(f, xp);
    require_inside(f, xm);
    g(i) = (f(xp) - f(xm)) / (2.0 * step);
  }
  return g;
}

CMat2 fd_jacobian(const VectorField& f, const Vec2& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_jacobian: step must be > 0");
  CMat2 j;
  for (int i = 0; i < 2; ++i) {
    Vec2 e = Vec2::Zero();
    e(i) = step;
    const Vec2 xp = x + e, xm = x - e;
    require_inside(f, xp);
    require_inside(f, xm);
    const CVec2 d = (f(xp) - f(xm)) / (2.0 * step);
    j(0, i) = d(0);
    j(1, i) = d(1);
  }
  return j;
}

Cplx fd_laplacian(const ScalarField& f, const Vec2& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_laplacian: step must be > 0");
  const Vec2 ex(step, 0.0), ey(0.0, step);
  const Vec2 pts[5] = {x + ex, x - ex, x + ey, x - ey, x};
  for (const Vec2& p : pts) require_inside(f, p);
  return (f(x + ex) + f(x - ex) + f(x + ey) + f(x - ey) - 4.0 * f(x)) / (step * step);
}

}  // namespace aelab
