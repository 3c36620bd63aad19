#pragma once

#include <vector>

#include "aelab/asymptotics.hpp"
#include "aelab/cgo.hpp"
#include "aelab/linalg.hpp"
#include "aelab/materials.hpp"
#include "aelab/sector.hpp"

namespace aelab {

/// All terms of the corner integral identity at one CGO scale. `total` is
/// the assembled left side, which vanishes (to quadrature accuracy) for
/// pairs satisfying the coupled transmission system on the sector.
struct IdentityBreakdown {
  double s = 0.0;
  Cplx i1_plus, i1_minus;
  Cplx i2_plus, i2_minus;
  Cplx i3_plus, i3_minus;  // = i s * i2 by the rho = i s p relation
  Cplx i4, i5;
  Cplx arc1, arc2;  // the two arc commutator integrals
  Cplx total;
};

IdentityBreakdown assemble_identity(const ScalarField& v_field,
                                    const VectorField& u_field,
                                    const SectorGeometry& sector, const CgoPair& pair,
                                    const Materials& mat, double omega);

/// The gradient bracket 2 mu p^T grad u(0) (e^{2i(phi-theta_M)} tau_M -
/// e^{i(2 phi - theta_m - theta_M)} tau_m), evaluated two ways: directly from
/// grad u(0), and as the s^2-scaled limit of the edge-term combination.
struct LimitExtraction {
  Cplx direct;
  Cplx from_quadrature;       // at the largest grid scale
  std::vector<Cplx> per_s;    // s^2-scaled values along the grid
  std::vector<double> s_grid;
};

LimitExtraction limit_extraction(const VectorField& u_field,
                                 const SectorGeometry& sector, const Materials& mat,
                                 const std::vector<double>& s_grid);

/// Lemma-style algebraic test: p^T A (bracket) = 0 iff a11 = a22 and
/// a12 + a21 = 0, for real 2x2 A.
struct QuadraticFormResult {
  Cplx lhs;
  bool satisfies;
};

QuadraticFormResult quadratic_form_test(const Mat2& a, const SectorGeometry& sector,
                                        double phi, double tol = 1e-12);

/// Corner-state report: gradient and strain of u at the corner, the corner
/// value of v, and the two defect scalars of the strain/boundary relations.
struct CornerDiagnostics {
  Mat2 grad_u = Mat2::Zero();
  Mat2 strain = Mat2::Zero();
  double v_corner = 0.0;
  double scalar_defect = 0.0;  // || sym grad u(0) - d1u1(0) I ||_F
  double bc_defect = 0.0;      // | v(0) + 2 (lambda + mu) d1u1(0) |
  double phase_residual = 0.0; // leftover imaginary part after phase alignment
  int n_samples = 0;

  std::string to_json() const;
};

/// Least-squares estimate of (v(0), u(0), grad u(0)) from interior samples at
/// radius in [probe_radius/2, probe_radius] around `corner`, followed by a
/// global phase alignment (discrete eigenfields carry an arbitrary complex
/// phase). Throws if fewer than 6 sample points land inside the domain.
CornerDiagnostics corner_diagnostics(const ScalarField& v_field,
                                     const VectorField& u_field, const Vec2& corner,
                                     const Materials& mat, double probe_radius);

/// A pair (v, u) solving both interior equations exactly on the sector, with
/// the flux coupling and the tangential traction conditions holding exactly
/// on both edges, and the normal traction condition enforced against the
/// exponential edge weights at the requested scales. This is precisely the
/// hypothesis set under which the assembled identity vanishes at those
/// scales.
struct ManufacturedPair {
  SectorGeometry sector;
  Materials mat;
  double omega;
  ScalarField v;
  VectorField u;
  std::vector<double> enforced_s;
  double enforcement_residual = 0.0;  // largest weak-condition residual
};

ManufacturedPair make_manufactured_pair(const Materials& mat, double omega,
                                        const std::vector<double>& s_values,
                                        double h = 1.0);

}  // namespace aelab
