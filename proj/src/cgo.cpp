#include "aelab/cgo.hpp"

#include <cmath>
#include <stdexcept>

namespace aelab {

CgoPair::CgoPair(double s_, double phi_, double delta_) : s(s_), phi(phi_), delta(delta_) {
  if (!(s > 0.0)) throw std::invalid_argument("CgoPair: s must be > 0");
  d = Vec2(std::cos(phi), std::sin(phi));
  d_perp = Vec2(-std::sin(phi), std::cos(phi));
  rho = s * (d.cast<Cplx>() + kI * d_perp.cast<Cplx>());
  p = d_perp.cast<Cplx>() - kI * d.cast<Cplx>();
}

std::pair<double, double> admissible_direction(const SectorGeometry& sector) {
  const double phi = 0.5 * (sector.theta_m + sector.theta_M) + kPi;
  const double delta = std::cos(0.5 * sector.opening());
  return {phi, delta};
}

CgoPair make_cgo(const SectorGeometry& sector, double s) {
  auto [phi, delta] = admissible_direction(sector);
  return CgoPair(s, phi, delta);
}

Cplx cgo_scalar(const CgoPair& pair, const Vec2& x) {
  return std::exp(bdot(pair.rho, x));
}

CVec2 cgo_vector(const CgoPair& pair, const Vec2& x) {
  return pair.p * cgo_scalar(pair, x);
}

CVec2 cgo_traction(const CgoPair& pair, const Vec2& nu, const Vec2& x,
                   const Materials& mat) {
  if (std::abs(nu.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("cgo_traction: nu must be a unit vector");
  const Cplx v0 = cgo_scalar(pair, x);
  return mat.mu * (bdot(pair.rho, nu) * pair.p + bdot(pair.p, nu) * pair.rho) * v0;
}

DotTable dot_table(const CgoPair& pair, const SectorGeometry& sector) {
  DotTable t;
  t.rho_nu_M = bdot(pair.rho, sector.nu_M());
  t.rho_nu_m = bdot(pair.rho, sector.nu_m());
  t.rho_tau_M = bdot(pair.rho, sector.tau_M());
  t.rho_tau_m = bdot(pair.rho, sector.tau_m());
  t.p_nu_M = bdot(pair.p, sector.nu_M());
  t.p_nu_m = bdot(pair.p, sector.nu_m());
  t.p_nu_M_over_rho_nu_M_sq = t.p_nu_M / (t.rho_nu_M * t.rho_nu_M);
  t.rho_nu_m_over_rho_nu_M = t.rho_nu_m / t.rho_nu_M;
  t.p_nu_m_over_rho_nu_M = t.p_nu_m / t.rho_nu_M;
  t.p_nu_M_over_rho_nu_M = t.p_nu_M / t.rho_nu_M;
  return t;
}

DotTable dot_table_closed_form(const CgoPair& pair, const SectorGeometry& sector) {
  const double s = pair.s, phi = pair.phi;
  const double tM = sector.theta_M, tm = sector.theta_m;
  auto cis = [](double a) { return std::exp(kI * a); };
  DotTable t;
  t.rho_nu_M = kI * s * cis(tM - phi);
  t.rho_nu_m = -kI * s * cis(tm - phi);
  t.rho_tau_M = s * cis(tM - phi);
  t.rho_tau_m = s * cis(tm - phi);
  t.p_nu_M = cis(tM - phi);
  t.p_nu_m = -cis(tm - phi);
  t.p_nu_M_over_rho_nu_M_sq = -cis(phi - tM) / (s * s);
  t.rho_nu_m_over_rho_nu_M = -cis(tm - tM);
  t.p_nu_m_over_rho_nu_M = -cis(tm - tM) / (kI * s);
  t.p_nu_M_over_rho_nu_M = 1.0 / (kI * s);
  return t;
}

}  // namespace aelab
