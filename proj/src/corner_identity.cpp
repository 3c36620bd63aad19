#include "aelab/corner_identity.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "aelab/special_functions.hpp"

namespace aelab {

namespace {

/// int_0^h w(r) e^{z r} dr with geometric grading toward the vertex.
Cplx edge_weighted_integral(double h, Cplx z, const std::function<Cplx(double)>& w) {
  Cplx total = 0.0;
  double hi = h;
  for (int k = 0; k < 54; ++k) {
    const double lo = (k + 1 == 54) ? 0.0 : hi * 0.5;
    const QuadratureRule g = gauss_legendre(16, lo, hi);
    for (std::size_t i = 0; i < g.size(); ++i)
      total += g.w[i] * w(g.x[i]) * std::exp(z * g.x[i]);
    hi = lo;
  }
  return total;
}

Cplx cis(double a) { return std::exp(kI * a); }

CVec2 bracket_vector(const SectorGeometry& sector, double phi) {
  return cis(2.0 * (phi - sector.theta_M)) * sector.tau_M().cast<Cplx>() -
         cis(2.0 * phi - sector.theta_m - sector.theta_M) * sector.tau_m().cast<Cplx>();
}

}  // namespace

IdentityBreakdown assemble_identity(const ScalarField& v_field,
                                    const VectorField& u_field,
                                    const SectorGeometry& sector, const CgoPair& pair,
                                    const Materials& mat, double omega) {
  IdentityBreakdown out;
  out.s = pair.s;
  const double s = pair.s;
  const double h = sector.h;

  struct Side {
    Vec2 tau, nu;
  };
  const Side plus{sector.tau_M(), sector.nu_M()};
  const Side minus{sector.tau_m(), sector.nu_m()};

  auto edge_term = [&](const Side& e, const auto& proj) {
    const Cplx z = bdot(pair.rho, e.tau);
    return edge_weighted_integral(h, z, [&](double r) {
      const Vec2 x = r * e.tau;
      if (!v_field.in_domain(x) || !u_field.in_domain(x))
        throw std::domain_error("assemble_identity: field undefined on the sector");
      return proj(x);
    });
  };

  out.i1_plus = edge_term(plus, [&](const Vec2& x) { return bdot(u_field(x), plus.nu); });
  out.i1_minus =
      edge_term(minus, [&](const Vec2& x) { return bdot(u_field(x), minus.nu); });
  out.i2_plus = edge_term(plus, [&](const Vec2& x) { return bdot(u_field(x), pair.p); });
  out.i2_minus =
      edge_term(minus, [&](const Vec2& x) { return bdot(u_field(x), pair.p); });
  out.i3_plus = edge_term(plus, [&](const Vec2& x) { return bdot(u_field(x), pair.rho); });
  out.i3_minus =
      edge_term(minus, [&](const Vec2& x) { return bdot(u_field(x), pair.rho); });

  const double osc = s * h;
  out.i4 = sector_integral(
      sector, [&](const Vec2& x) { return v_field(x) * cgo_scalar(pair, x) / mat.kappa; },
      osc);
  out.i5 = sector_integral(
      sector,
      [&](const Vec2& x) {
        return mat.rho_e * bdot(u_field(x), pair.p) * cgo_scalar(pair, x);
      },
      osc);

  // Arc commutator terms; exponentially small but assembled honestly.
  const QuadratureRule arc = arc_rule(sector, 256);
  const double fd_step = 1e-5 * h;
  Cplx arc1 = 0.0, arc2 = 0.0;
  for (std::size_t i = 0; i < arc.size(); ++i) {
    const Vec2 x(arc.x[i], arc.y[i]);
    const Vec2 nu = x / x.norm();
    const Cplx v0 = cgo_scalar(pair, x);
    const Cplx dn_v0 = bdot(pair.rho, nu) * v0;
    const Cplx v = v_field(x);
    const Cplx dn_v = bdot(fd_gradient(v_field, x, fd_step), nu);
    arc1 += arc.w[i] * (v * dn_v0 - v0 * dn_v);

    const CVec2 u = u_field(x);
    const CVec2 u0 = cgo_vector(pair, x);
    const CVec2 tu0 = cgo_traction(pair, nu, x, mat);
    const CMat2 jac = fd_jacobian(u_field, x, fd_step);
    const Cplx div = jac(0, 0) + jac(1, 1);
    const CVec2 tu = mat.lambda * div * nu.cast<Cplx>() +
                     mat.mu * ((jac + jac.transpose()) * nu.cast<Cplx>());
    arc2 += arc.w[i] * (bdot(u, tu0) - bdot(u0, tu));
  }
  out.arc1 = arc1;
  out.arc2 = arc2;

  const double w2rb = omega * omega * mat.rho_b;
  const Cplx front = -cis(pair.phi - sector.theta_M) * w2rb / (s * s);
  const Cplx arc2_scale = 1.0 / (kI * s * cis(sector.theta_M - pair.phi));
  out.total = front * (out.i1_plus + out.i1_minus - out.arc1 / w2rb + out.i4) +
              2.0 * mat.mu *
                  (out.i2_plus - cis(sector.theta_m - sector.theta_M) * out.i2_minus) +
              arc2_scale * out.arc2 - omega * omega * arc2_scale * out.i5;
  return out;
}

LimitExtraction limit_extraction(const VectorField& u_field,
                                 const SectorGeometry& sector, const Materials& mat,
                                 const std::vector<double>& s_grid) {
  LimitExtraction out;
  const auto [phi, delta] = admissible_direction(sector);
  (void)delta;
  const CMat2 grad = fd_jacobian(u_field, Vec2(0, 0), 1e-5);
  const CgoPair probe(1.0, phi);
  out.direct =
      2.0 * mat.mu * bdot(probe.p, CVec2(grad * bracket_vector(sector, phi)));

  for (double s : s_grid) {
    CgoPair pair(s, phi);
    const Cplx zp = bdot(pair.rho, sector.tau_M());
    const Cplx zm = bdot(pair.rho, sector.tau_m());
    const Cplx i2p = edge_weighted_integral(sector.h, zp, [&](double r) {
      return bdot(u_field(Vec2(r * sector.tau_M())), pair.p);
    });
    const Cplx i2m = edge_weighted_integral(sector.h, zm, [&](double r) {
      return bdot(u_field(Vec2(r * sector.tau_m())), pair.p);
    });
    const Cplx val = s * s * 2.0 * mat.mu *
                     (i2p - cis(sector.theta_m - sector.theta_M) * i2m);
    out.per_s.push_back(val);
    out.s_grid.push_back(s);
  }
  out.from_quadrature = out.per_s.empty() ? Cplx(0) : out.per_s.back();
  return out;
}

QuadraticFormResult quadratic_form_test(const Mat2& a, const SectorGeometry& sector,
                                        double phi, double tol) {
  QuadraticFormResult r;
  const CgoPair probe(1.0, phi);
  r.lhs = bdot(probe.p, CVec2(a.cast<Cplx>() * bracket_vector(sector, phi)));
  r.satisfies = std::abs(r.lhs) < tol;
  return r;
}

CornerDiagnostics corner_diagnostics(const ScalarField& v_field,
                                     const VectorField& u_field, const Vec2& corner,
                                     const Materials& mat, double probe_radius) {
  if (!(probe_radius > 0.0))
    throw std::invalid_argument("corner_diagnostics: probe_radius must be > 0");

  std::vector<Vec2> pts;
  for (double frac : {0.5, 0.75, 1.0}) {
    const double r = frac * probe_radius;
    for (int k = 0; k < 24; ++k) {
      const double th = 2.0 * kPi * (k + 0.5) / 24.0;
      const Vec2 x = corner + r * Vec2(std::cos(th), std::sin(th));
      if (v_field.in_domain(x) && u_field.in_domain(x)) pts.push_back(x);
    }
  }
  if (pts.size() < 6)
    throw std::runtime_error("corner_diagnostics: fewer than 6 valid sample points");

  const int n = static_cast<int>(pts.size());
  Eigen::MatrixXcd a(n, 3);
  Eigen::VectorXcd rhs_v(n), rhs_u1(n), rhs_u2(n);
  for (int i = 0; i < n; ++i) {
    const Vec2 xi = pts[i] - corner;
    a(i, 0) = 1.0;
    a(i, 1) = xi(0);
    a(i, 2) = xi(1);
    rhs_v(i) = v_field(pts[i]);
    const CVec2 u = u_field(pts[i]);
    rhs_u1(i) = u(0);
    rhs_u2(i) = u(1);
  }
  const auto qr = a.colPivHouseholderQr();
  const Eigen::Vector3cd cv = qr.solve(rhs_v);
  const Eigen::Vector3cd c1 = qr.solve(rhs_u1);
  const Eigen::Vector3cd c2 = qr.solve(rhs_u2);

  // Discrete eigenfields are real only up to a global complex phase; align it
  // before reading off real corner data.
  const Cplx fs[7] = {c1(1), c1(2), c2(1), c2(2), cv(0), c1(0), c2(0)};
  Cplx q = 0.0;
  double scale = 0.0;
  for (const Cplx& f : fs) {
    q += f * f;
    scale = std::max(scale, std::abs(f));
  }
  const Cplx z = std::abs(q) > 0.0 ? std::exp(-kI * 0.5 * std::arg(q)) : Cplx(1.0);

  CornerDiagnostics d;
  d.n_samples = n;
  d.grad_u << (z * c1(1)).real(), (z * c1(2)).real(), (z * c2(1)).real(),
      (z * c2(2)).real();
  d.strain = 0.5 * (d.grad_u + d.grad_u.transpose());
  d.v_corner = (z * cv(0)).real();
  const Mat2 dev = d.strain - d.grad_u(0, 0) * Mat2::Identity();
  d.scalar_defect = dev.norm();
  d.bc_defect = std::abs(d.v_corner + 2.0 * (mat.lambda + mat.mu) * d.grad_u(0, 0));
  if (scale > 0.0) {
    double imax = 0.0;
    for (const Cplx& f : fs) imax = std::max(imax, std::abs((z * f).imag()));
    d.phase_residual = imax / scale;
  }
  return d;
}

std::string CornerDiagnostics::to_json() const {
  nlohmann::json j;
  j["grad_u"] = {{grad_u(0, 0), grad_u(0, 1)}, {grad_u(1, 0), grad_u(1, 1)}};
  j["strain"] = {{strain(0, 0), strain(0, 1)}, {strain(1, 0), strain(1, 1)}};
  j["v_corner"] = v_corner;
  j["scalar_defect"] = scalar_defect;
  j["bc_defect"] = bc_defect;
  j["phase_residual"] = phase_residual;
  j["n_samples"] = n_samples;
  return j.dump();
}

namespace {

// Radial pieces of the manufactured modes. Each mode n (with n*theta0 a
// multiple of pi on the symmetric sector) contributes:
//   v      : a * J_n(ka r) cos(n theta)
//   u (p)  : b * grad[J_n(kp r) cos(n theta)]
//   u (s)  : c * curl[J_n(ks r) sin(n theta)]
// The flux and tangential traction conditions vanish identically on both
// edges; only the normal traction defect remains, with radial profile
// a*Wa + b*Wp + c*Ws per mode.
struct Mode {
  int n;
  double sign;  // cos(n theta0)
};

struct ModeEval {
  double jn, jnp;  // J_n(kr), d/dr J_n(kr)
};

ModeEval eval_mode(int n, double k, double r) {
  const double x = k * r;
  ModeEval m;
  if (x < 1e-8) {
    // leading series terms; n >= 2 in all uses
    double pw = 1.0;
    double fact = 1.0;
    for (int i = 1; i <= n; ++i) {
      pw *= 0.5 * x;
      fact *= i;
    }
    m.jn = pw / fact;
    m.jnp = (n > 0) ? k * (pw / fact) * n / std::max(x, 1e-300) : 0.0;
    return m;
  }
  const std::vector<double> j = bessel_j_array(n + 1, x);
  m.jn = j[n];
  m.jnp = k * 0.5 * ((n >= 1 ? j[n - 1] : -j[1]) - j[n + 1]);
  return m;
}

double defect_wa(int n, double ka, double r) { return eval_mode(n, ka, r).jn; }

double defect_wp(int n, double kp, double r, const Materials& mat) {
  const ModeEval m = eval_mode(n, kp, r);
  return -mat.lambda * kp * kp * m.jn +
         2.0 * mat.mu * (m.jnp / r - static_cast<double>(n) * n * m.jn / (r * r));
}

double defect_ws(int n, double ks, double r, const Materials& mat) {
  const ModeEval m = eval_mode(n, ks, r);
  return 2.0 * mat.mu * n * (m.jn / (r * r) - m.jnp / r);
}

}  // namespace

ManufacturedPair make_manufactured_pair(const Materials& mat, double omega,
                                        const std::vector<double>& s_values,
                                        double h) {
  const double theta0 = kPi / 5.0;
  SectorGeometry sector(-theta0, theta0, h);
  const double ka = mat.ka(omega), kp = mat.kp(omega), ks = mat.ks(omega);

  const std::vector<Mode> modes = {{5, std::cos(5.0 * theta0)},
                                   {10, std::cos(10.0 * theta0)},
                                   {15, std::cos(15.0 * theta0)}};
  const int ncol = 3 * static_cast<int>(modes.size());

  // Weak normal-traction conditions: for each requested s, the defect
  // integrated against e^{(rho.tau_M) r} must vanish (the minus edge is the
  // complex conjugate for this symmetric sector).
  const auto [phi, delta] = admissible_direction(sector);
  (void)delta;
  Eigen::MatrixXcd cond(static_cast<int>(s_values.size()), ncol);
  for (std::size_t si = 0; si < s_values.size(); ++si) {
    CgoPair pair(s_values[si], phi);
    const Cplx z = bdot(pair.rho, sector.tau_M());
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
      const Mode& m = modes[mi];
      cond(si, 3 * mi + 0) = m.sign * edge_weighted_integral(h, z, [&](double r) {
        return Cplx(defect_wa(m.n, ka, r), 0.0);
      });
      cond(si, 3 * mi + 1) = m.sign * edge_weighted_integral(h, z, [&](double r) {
        return Cplx(defect_wp(m.n, kp, r, mat), 0.0);
      });
      cond(si, 3 * mi + 2) = m.sign * edge_weighted_integral(h, z, [&](double r) {
        return Cplx(defect_ws(m.n, ks, r, mat), 0.0);
      });
    }
  }

  Eigen::MatrixXd sys(2 * cond.rows(), ncol);
  Eigen::VectorXd colscale(ncol);
  for (int j = 0; j < ncol; ++j) {
    colscale(j) = std::max(cond.col(j).norm(), 1e-300);
  }
  for (int i = 0; i < cond.rows(); ++i)
    for (int j = 0; j < ncol; ++j) {
      sys(2 * i, j) = cond(i, j).real() / colscale(j);
      sys(2 * i + 1, j) = cond(i, j).imag() / colscale(j);
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  Eigen::VectorXd y = svd.matrixV().col(ncol - 1);
  Eigen::VectorXd coef(ncol);
  for (int j = 0; j < ncol; ++j) coef(j) = y(j) / colscale(j);

  // Normalize to O(1) field magnitude on the sector.
  {
    double fmax = 0.0;
    for (int i = 1; i <= 8; ++i) {
      const double r = h * i / 8.0;
      for (std::size_t mi = 0; mi < modes.size(); ++mi) {
        const Mode& m = modes[mi];
        fmax = std::max(fmax, std::abs(coef(3 * mi)) * std::abs(eval_mode(m.n, ka, r).jn));
        fmax = std::max(fmax,
                        std::abs(coef(3 * mi + 1)) * std::abs(eval_mode(m.n, kp, r).jnp));
        fmax = std::max(fmax,
                        std::abs(coef(3 * mi + 2)) * std::abs(eval_mode(m.n, ks, r).jnp));
      }
    }
    if (fmax > 0.0) coef /= fmax;
  }

  ManufacturedPair out{sector, mat, omega, {}, {}, s_values, 0.0};

  std::vector<Mode> ms = modes;
  Eigen::VectorXd c = coef;
  out.v.f = [ms, c, ka](const Vec2& x) {
    const double r = x.norm();
    if (r < 1e-300) return Cplx(0.0);
    const double th = std::atan2(x(1), x(0));
    double val = 0.0;
    for (std::size_t mi = 0; mi < ms.size(); ++mi)
      val += c(3 * mi) * eval_mode(ms[mi].n, ka, r).jn * std::cos(ms[mi].n * th);
    return Cplx(val, 0.0);
  };
  out.u.f = [ms, c, kp, ks](const Vec2& x) {
    const double r = x.norm();
    if (r < 1e-300) return CVec2(CVec2::Zero());
    const double th = std::atan2(x(1), x(0));
    const Vec2 er(std::cos(th), std::sin(th));
    const Vec2 et(-std::sin(th), std::cos(th));
    double ur = 0.0, ut = 0.0;
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
      const int n = ms[mi].n;
      const double cn = std::cos(n * th), sn = std::sin(n * th);
      const ModeEval mp = eval_mode(n, kp, r);
      const ModeEval msh = eval_mode(n, ks, r);
      const double b = c(3 * mi + 1), cc = c(3 * mi + 2);
      ur += b * mp.jnp * cn + cc * (n / r) * msh.jn * cn;
      ut += -b * (n / r) * mp.jn * sn - cc * msh.jnp * sn;
    }
    const Vec2 u = ur * er + ut * et;
    return CVec2(u.cast<Cplx>());
  };

  // Residuals of the enforced weak conditions, relative to the defect scale.
  double resid = 0.0;
  for (std::size_t si = 0; si < s_values.size(); ++si) {
    Cplx val = 0.0;
    double scale = 0.0;
    for (int j = 0; j < ncol; ++j) {
      val += cond(si, j) * coef(j);
      scale = std::max(scale, std::abs(cond(si, j) * coef(j)));
    }
    resid = std::max(resid, std::abs(val) / std::max(scale, 1e-300));
  }
  out.enforcement_residual = resid;
  return out;
}

}  // namespace aelab
