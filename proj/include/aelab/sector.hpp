#pragma once

#include "aelab/quadrature.hpp"
#include "aelab/types.hpp"

namespace aelab {

/// Planar corner sector { theta_m <= arg(x1 + i x2) <= theta_M, |x| <= h }
/// with its two straight edges and the closing arc. Strict convexity
/// (opening angle < pi) is enforced at construction.
struct SectorGeometry {
  double theta_m;
  double theta_M;
  double h;

  SectorGeometry(double theta_m_, double theta_M_, double h_ = 1.0);

  double opening() const { return theta_M - theta_m; }

  /// Unit tangents along the two edges (pointing away from the vertex).
  Vec2 tau_M() const { return Vec2(std::cos(theta_M), std::sin(theta_M)); }
  Vec2 tau_m() const { return Vec2(std::cos(theta_m), std::sin(theta_m)); }

  /// Exterior unit normals of the edges.
  Vec2 nu_M() const { return Vec2(-std::sin(theta_M), std::cos(theta_M)); }
  Vec2 nu_m() const { return Vec2(std::sin(theta_m), -std::cos(theta_m)); }

  bool contains(const Vec2& x, double tol = 0.0) const;
};

/// Tensor-product Gauss rule on the sector in polar coordinates; the radial
/// Jacobian r is folded into the weights.
QuadratureRule sector_rule(const SectorGeometry& sector, int n_r, int n_theta);

/// Gauss rule on the closing arc Lambda_h, parameterized by angle with the
/// arclength Jacobian h in the weights. Nodes are (x, y) points on the arc.
QuadratureRule arc_rule(const SectorGeometry& sector, int n_theta);

/// Gauss rule along one straight edge; nodes are radii in (0, h).
QuadratureRule edge_rule(const SectorGeometry& sector, int n_r);

}  // namespace aelab
