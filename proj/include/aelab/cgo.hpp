#pragma once

#include "aelab/materials.hpp"
#include "aelab/sector.hpp"
#include "aelab/types.hpp"

namespace aelab {

/// The two-parameter family of exponential solutions e^{rho.x} used to probe
/// a corner: rho = s(d + i d_perp) with rho.rho = 0, and the companion
/// polarization p = d_perp - i d with p.rho = 0, rho = i s p.
struct CgoPair {
  double s;
  double phi;
  double delta;  // decay margin: d.tau <= -delta on the sector
  Vec2 d;
  Vec2 d_perp;
  CVec2 rho;
  CVec2 p;

  CgoPair(double s_, double phi_, double delta_ = 0.0);
};

/// Midpoint-opposite direction choice for a sector: phi = midpoint + pi,
/// giving the largest decay margin delta = cos(opening/2).
std::pair<double, double> admissible_direction(const SectorGeometry& sector);

/// Convenience: the midpoint-opposite pair for a sector at scale s.
CgoPair make_cgo(const SectorGeometry& sector, double s);

Cplx cgo_scalar(const CgoPair& pair, const Vec2& x);
CVec2 cgo_vector(const CgoPair& pair, const Vec2& x);

/// Traction of the vector solution on a facet with unit normal nu:
/// mu [ (rho.nu) p + (p.nu) rho ] e^{rho.x}.
CVec2 cgo_traction(const CgoPair& pair, const Vec2& nu, const Vec2& x,
                   const Materials& mat);

/// The edge dot products and the four quotients that appear in the corner
/// identity, each with its closed form for cross-checking.
struct DotTable {
  Cplx rho_nu_M, rho_nu_m;
  Cplx rho_tau_M, rho_tau_m;
  Cplx p_nu_M, p_nu_m;
  // quotients
  Cplx p_nu_M_over_rho_nu_M_sq;  // = -e^{i(phi-theta_M)} / s^2
  Cplx rho_nu_m_over_rho_nu_M;   // = -e^{i(theta_m-theta_M)}
  Cplx p_nu_m_over_rho_nu_M;     // = -e^{i(theta_m-theta_M)} / (i s)
  Cplx p_nu_M_over_rho_nu_M;     // = 1 / (i s)
};

DotTable dot_table(const CgoPair& pair, const SectorGeometry& sector);

/// Closed forms of the same eight quantities, for tests and reporting.
DotTable dot_table_closed_form(const CgoPair& pair, const SectorGeometry& sector);

}  // namespace aelab
