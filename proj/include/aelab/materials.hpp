#pragma once

#include <cmath>
#include <stdexcept>

namespace aelab {

/// Elastic background (lambda, mu, rho_e) plus acoustic inclusion (rho_b,
/// kappa), dimensionless model units. One record shared by every module.
struct Materials {
  double lambda = 2.0;
  double mu = 1.0;
  double rho_e = 1.0;
  double rho_b = 1.0;
  double kappa = 1.0;

  Materials() = default;
  Materials(double lambda_, double mu_, double rho_e_, double rho_b_, double kappa_)
      : lambda(lambda_), mu(mu_), rho_e(rho_e_), rho_b(rho_b_), kappa(kappa_) {
    validate(2);
  }

  /// Strong ellipticity in dimension N: mu > 0 and 2*lambda + N*mu > 0.
  void validate(int dim) const {
    if (!(mu > 0.0)) throw std::invalid_argument("Materials: mu must be > 0");
    if (!(2.0 * lambda + dim * mu > 0.0))
      throw std::invalid_argument("Materials: 2*lambda + N*mu must be > 0");
    if (!(rho_e > 0.0) || !(rho_b > 0.0) || !(kappa > 0.0))
      throw std::invalid_argument("Materials: densities and modulus must be > 0");
  }

  double kp(double omega) const { return omega * std::sqrt(rho_e / (2.0 * mu + lambda)); }
  double ks(double omega) const { return omega * std::sqrt(rho_e / mu); }
  double ka(double omega) const { return omega * std::sqrt(rho_b / kappa); }
};

}  // namespace aelab
