#include "aelab/sector.hpp"

#include <cmath>
#include <stdexcept>

namespace aelab {

SectorGeometry::SectorGeometry(double theta_m_, double theta_M_, double h_)
    : theta_m(theta_m_), theta_M(theta_M_), h(h_) {
  if (!(-kPi < theta_m && theta_m < theta_M && theta_M < kPi))
    throw std::invalid_argument("SectorGeometry: need -pi < theta_m < theta_M < pi");
  if (!(theta_M - theta_m < kPi))
    throw std::invalid_argument("SectorGeometry: opening angle must be < pi");
  if (!(h > 0.0)) throw std::invalid_argument("SectorGeometry: h must be > 0");
}

bool SectorGeometry::contains(const Vec2& x, double tol) const {
  const double r = x.norm();
  if (r > h + tol) return false;
  if (r == 0.0) return true;
  const double th = std::atan2(x(1), x(0));
  return th >= theta_m - tol && th <= theta_M + tol;
}

QuadratureRule sector_rule(const SectorGeometry& sector, int n_r, int n_theta) {
  if (n_r < 2 || n_theta < 2)
    throw std::invalid_argument("sector_rule: need n_r, n_theta >= 2");
  const QuadratureRule gr = gauss_legendre(n_r, 0.0, sector.h);
  const QuadratureRule gt = gauss_legendre(n_theta, sector.theta_m, sector.theta_M);

  QuadratureRule rule;
  rule.domain = QuadDomain::Sector;
  rule.x.reserve(gr.size() * gt.size());
  rule.y.reserve(gr.size() * gt.size());
  rule.w.reserve(gr.size() * gt.size());
  for (std::size_t i = 0; i < gr.size(); ++i) {
    for (std::size_t j = 0; j < gt.size(); ++j) {
      const double r = gr.x[i], th = gt.x[j];
      rule.x.push_back(r * std::cos(th));
      rule.y.push_back(r * std::sin(th));
      rule.w.push_back(gr.w[i] * gt.w[j] * r);
    }
  }
  return rule;
}

QuadratureRule arc_rule(const SectorGeometry& sector, int n_theta) {
  const QuadratureRule gt = gauss_legendre(n_theta, sector.theta_m, sector.theta_M);
  QuadratureRule rule;
  rule.domain = QuadDomain::Arc;
  rule.x.resize(gt.size());
  rule.y.resize(gt.size());
  rule.w.resize(gt.size());
  for (std::size_t j = 0; j < gt.size(); ++j) {
    rule.x[j] = sector.h * std::cos(gt.x[j]);
    rule.y[j] = sector.h * std::sin(gt.x[j]);
    rule.w[j] = gt.w[j] * sector.h;
  }
  return rule;
}

QuadratureRule edge_rule(const SectorGeometry& sector, int n_r) {
  return gauss_legendre(n_r, 0.0, sector.h);
}

}  // namespace aelab
