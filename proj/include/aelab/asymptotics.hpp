#pragma once

#include <string>
#include <vector>

#include "aelab/cgo.hpp"
#include "aelab/linalg.hpp"
#include "aelab/materials.hpp"
#include "aelab/sector.hpp"

namespace aelab {

/// Quadrature-vs-closed-form record over a grid of the large parameter.
/// `fitted_decay_rate` is the least-squares slope of -log|error| against the
/// grid variable, ignoring points at the quadrature noise floor.
struct AsymptoticReport {
  std::string name;
  std::vector<double> s_grid;
  std::vector<Cplx> quad_values;
  std::vector<Cplx> closed_forms;
  std::vector<double> abs_errors;
  double fitted_decay_rate = 0.0;
  double expected_rate = 0.0;  // guaranteed lower bound on the true rate
  bool rate_ok = false;
  bool bounds_ok = true;  // one-sided inequalities held pointwise (when any)

  void write_csv(const std::string& path) const;
};

/// Least-squares slope of log(err) vs x over points with err above the noise
/// floor; returns the decay rate (positive when err shrinks).
double fit_decay_rate(const std::vector<double>& x, const std::vector<double>& err,
                      double floor = 1e-14);

/// Default geometric grid for the large CGO parameter.
std::vector<double> default_s_grid();

/// int_0^h r^alpha e^{-a r} dr with complex a, by composite Gauss with
/// geometric grading toward r = 0 (handles fractional alpha).
Cplx power_exp_integral(double alpha, Cplx a, double h);

/// int_{S_h} f(x) dx with radial grading, for integrands concentrated at the
/// vertex. `n_theta` is the base angular order; it is scaled with osc_scale.
Cplx sector_integral(const SectorGeometry& sector,
                     const std::function<Cplx(const Vec2&)>& f,
                     double osc_scale = 1.0, int n_theta = 32);

/// Lemma-style tail check: quadrature of int_0^h r^alpha e^{-ar} dr against
/// Gamma(alpha+1)/a^(alpha+1) over a grid of a with growing real part.
/// Preconditions 0 < h < e and Re(a) >= 2 alpha / e are enforced.
AsymptoticReport laplace_tail_check(double alpha, double h,
                                    const std::vector<Cplx>& a_grid);

/// Sector moments of v0: the weighted-modulus bound and the exact limit of
/// int_{S_h} v0 dx, with decay-rate fit of the remainder.
AsymptoticReport v0_sector_moment_check(const SectorGeometry& sector, double phi,
                                        double alpha,
                                        const std::vector<double>& s_grid);

enum class EdgeSide { Plus, Minus };

/// Edge moments int_0^h r^alpha e^{r rho.tau} dr against
/// Gamma(alpha+1)/(-rho.tau)^(alpha+1).
AsymptoticReport boundary_moment_check(const SectorGeometry& sector, double phi,
                                       double alpha,
                                       const std::vector<double>& s_grid,
                                       EdgeSide side);

/// L2 norms of v0, grad v0, u0, T_nu u0 on the arc Lambda_h against their
/// exponential envelopes; all four are one-sided bounds.
struct ArcNormReport {
  std::vector<double> s_grid;
  std::vector<double> v0_l2, v0_l2_bound;
  std::vector<double> grad_v0_l2, grad_v0_l2_bound;
  std::vector<double> u0_h1, u0_h1_bound;
  std::vector<double> traction_l2, traction_l2_bound;
  double fitted_decay_rate = 0.0;
  double expected_rate = 0.0;
  bool bounds_ok = true;
  bool rate_ok = false;

  void write_csv(const std::string& path) const;
};

ArcNormReport arc_norm_check(const SectorGeometry& sector, double phi,
                             const std::vector<double>& s_grid, const Materials& mat);

/// Interior terms I4 = int kappa^-1 v v0 and I5 = int rho_e (u.p) v0 at one
/// CGO scale, with their corner-value leading forms.
struct InteriorTerms {
  Cplx i4, i4_leading;
  Cplx i5, i5_leading;
};

InteriorTerms interior_term_check(const ScalarField& v_field, const VectorField& u_field,
                                  const SectorGeometry& sector, const CgoPair& pair,
                                  const Materials& mat);

/// Edge terms I1 = int v0 (u.nu), I2 = int v0 (u.p) on both edges, with the
/// two-term expansions built from u(0) and grad u(0).
struct BoundaryTerms {
  Cplx i1_plus, i1_plus_leading;
  Cplx i1_minus, i1_minus_leading;
  Cplx i2_plus, i2_plus_leading;
  Cplx i2_minus, i2_minus_leading;
};

BoundaryTerms boundary_term_check(const VectorField& u_field,
                                  const SectorGeometry& sector, const CgoPair& pair);

}  // namespace aelab
