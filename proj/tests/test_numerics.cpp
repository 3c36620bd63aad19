#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aelab/linalg.hpp"
#include "aelab/quadrature.hpp"
#include "aelab/sector.hpp"
#include "aelab/special_functions.hpp"

using namespace aelab;

TEST_CASE("gauss_legendre classical values") {
  auto r1 = gauss_legendre(1, -1.0, 1.0);
  CHECK(r1.x[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(r1.w[0] == doctest::Approx(2.0).epsilon(1e-14));

  auto r2 = gauss_legendre(2, -1.0, 1.0);
  CHECK(r2.x[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r2.x[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r2.w[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r2.w[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gauss_legendre rejects bad input") {
  CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(4, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("gauss_legendre weights sum to the measure") {
  for (int n : {1, 2, 3, 8, 17, 40}) {
    auto r = gauss_legendre(n, -2.5, 7.0);
    CHECK(r.measure() == doctest::Approx(9.5).epsilon(1e-12));
  }
}

TEST_CASE("gauss_legendre exactness degree 2n-1") {
  for (int n : {2, 5, 9}) {
    auto r = gauss_legendre(n, 0.0, 1.0);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double quad = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) quad += r.w[i] * std::pow(r.x[i], deg);
      CHECK(quad == doctest::Approx(1.0 / (deg + 1.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("16-point rule nails int_0^1 e^{-10 r} dr") {
  auto r = gauss_legendre(16, 0.0, 1.0);
  double quad = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) quad += r.w[i] * std::exp(-10.0 * r.x[i]);
  const double exact = (1.0 - std::exp(-10.0)) / 10.0;
  CHECK(std::abs(quad - exact) < 1e-12);
}

TEST_CASE("quadrature error decays geometrically for analytic integrands") {
  auto err = [](int n) {
    auto r = gauss_legendre(n, 0.0, 1.0);
    double quad = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) quad += r.w[i] * std::exp(-r.x[i]);
    return std::abs(quad - (1.0 - std::exp(-1.0)));
  };
  // e^{-r} converges so fast that mid-size rules already sit at round-off;
  // use a sharper integrand to watch the decay itself.
  auto err2 = [](int n) {
    auto r = gauss_legendre(n, 0.0, 1.0);
    double quad = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) quad += r.w[i] * std::exp(-30.0 * r.x[i]);
    return std::abs(quad - (1.0 - std::exp(-30.0)) / 30.0);
  };
  CHECK(err(8) < 1e-12);
  for (int n : {8, 16}) {
    const double e1 = err2(n), e2 = err2(2 * n);
    CHECK(e2 < std::max(e1, 1e-15));
  }
}

TEST_CASE("sector_rule areas") {
  SectorGeometry s1(-kPi / 4, kPi / 4, 1.0);
  auto r1 = sector_rule(s1, 8, 8);
  CHECK(r1.measure() == doctest::Approx(kPi / 4.0).epsilon(1e-12));

  SectorGeometry s2(0.0, kPi / 2, 2.0);
  auto r2 = sector_rule(s2, 8, 8);
  CHECK(r2.measure() == doctest::Approx(kPi).epsilon(1e-12));

  CHECK_THROWS_AS(sector_rule(s1, 1, 8), std::invalid_argument);
}

TEST_CASE("gamma_pos factorials and half-integers") {
  double fact = 1.0;
  for (int n = 1; n <= 15; ++n) {
    fact *= n;
    CHECK(gamma_pos(n + 1.0) == doctest::Approx(fact).epsilon(1e-12));
  }
  CHECK(gamma_pos(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(gamma_pos(1.5) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_pos(-1.0), std::domain_error);
}

TEST_CASE("bessel values against libstdc++") {
  for (int n : {0, 1, 2, 5, 11, 30}) {
    for (double x : {0.5, 1.0, 2.7, 8.0, 10.5, 14.0, 25.0, 50.0}) {
      const double jref = std::cyl_bessel_j(n, x);
      const double yref = std::cyl_neumann(n, x);
      CHECK(bessel_j(n, x) == doctest::Approx(jref).epsilon(1e-10));
      CHECK(bessel_y(n, x) == doctest::Approx(yref).epsilon(1e-10));
    }
  }
}

TEST_CASE("bessel wronskian J_n(x) Y_n'(x) - J_n'(x) Y_n(x) = 2/(pi x)") {
  for (int n : {0, 1, 3, 7, 15, 30}) {
    for (double x : {0.5, 1.3, 5.0, 9.9, 10.1, 20.0, 50.0}) {
      const double w = bessel_j(n, x) * bessel_y_prime(n, x) -
                       bessel_j_prime(n, x) * bessel_y(n, x);
      const double exact = 2.0 / (kPi * x);
      CHECK(w == doctest::Approx(exact).epsilon(1e-10));
    }
  }
}

TEST_CASE("fd_gradient on polynomials and constants") {
  ScalarField sq{[](const Vec2& x) { return Cplx(x(0) * x(0), 0.0); }, {}};
  const CVec2 g = fd_gradient(sq, Vec2(1.0, 0.0), 1e-4);
  CHECK(std::abs(g(0) - 2.0) < 1e-7);
  CHECK(std::abs(g(1)) < 1e-12);

  ScalarField c{[](const Vec2&) { return Cplx(3.5, -1.0); }, {}};
  const CVec2 gc = fd_gradient(c, Vec2(0.3, 0.4), 1e-3);
  CHECK(std::abs(gc(0)) == 0.0);
  CHECK(std::abs(gc(1)) == 0.0);
}

TEST_CASE("fd_gradient error scales as O(step^2)") {
  ScalarField f{[](const Vec2& x) { return Cplx(std::sin(x(0)) * std::exp(x(1)), 0.0); }, {}};
  const Vec2 x0(0.7, -0.2);
  const CVec2 exact(std::cos(x0(0)) * std::exp(x0(1)), std::sin(x0(0)) * std::exp(x0(1)));
  auto err = [&](double h) { return (fd_gradient(f, x0, h) - exact).norm(); };
  for (double h : {1e-2, 5e-3}) {
    const double ratio = err(h) / err(h / 2.0);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }
}

TEST_CASE("fd_gradient signals stencil leaving the domain") {
  ScalarField f{[](const Vec2& x) { return Cplx(x(0), 0.0); },
                [](const Vec2& x) { return x(0) >= 0.0; }};
  CHECK_THROWS_AS(fd_gradient(f, Vec2(0.0, 0.0), 1e-3), std::domain_error);
  CHECK_NOTHROW(fd_gradient(f, Vec2(1.0, 0.0), 1e-3));
}

namespace {

// One-sided Jacobi SVD, used only as an independent oracle here.
double jacobi_sigma_min(Eigen::MatrixXcd a) {
  const int n = static_cast<int>(a.cols());
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Cplx apq = a.col(p).adjoint() * a.col(q);
        const double app = a.col(p).squaredNorm();
        const double aqq = a.col(q).squaredNorm();
        off = std::max(off, std::abs(apq));
        if (std::abs(apq) < 1e-30) continue;
        // complex Jacobi rotation diagonalizing the 2x2 Gram block
        const Cplx phase = apq / std::abs(apq);
        const double tau = (aqq - app) / (2.0 * std::abs(apq));
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Cplx s = phase * t * c;
        const Eigen::VectorXcd cp = a.col(p), cq = a.col(q);
        a.col(p) = c * cp - std::conj(s) * cq;
        a.col(q) = s * cp + c * cq;
      }
    }
    if (off < 1e-14) break;
  }
  double smin = std::numeric_limits<double>::max();
  for (int j = 0; j < n; ++j) smin = std::min(smin, a.col(j).norm());
  return smin;
}

}  // namespace

TEST_CASE("svd_smallest basics") {
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(3, 3);
  auto r = svd_smallest(id);
  CHECK(r.sigma_min == doctest::Approx(1.0).epsilon(1e-14));

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 1e-8;
  auto rd = svd_smallest(d);
  CHECK(rd.sigma_min == doctest::Approx(1e-8).epsilon(1e-12));
  CHECK(std::abs(rd.v_min(1)) == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(svd_smallest(bad), std::invalid_argument);
}

TEST_CASE("svd_smallest residual and normalization") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(20, 20);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) a(i, j) = Cplx(g(rng), g(rng));
  auto r = svd_smallest(a);
  CHECK(std::abs(r.v_min.norm() - 1.0) < 1e-12);
  CHECK((a * r.v_min).norm() == doctest::Approx(r.sigma_min).epsilon(1e-10));
  CHECK(r.sigma_min == doctest::Approx(jacobi_sigma_min(a)).epsilon(1e-9));
}

TEST_CASE("svd_smallest vs Jacobi oracle on random small matrices") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      Eigen::MatrixXcd a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Cplx(g(rng), g(rng));
      auto r = svd_smallest(a);
      const double ref = jacobi_sigma_min(a);
      CHECK(std::abs(r.sigma_min - ref) < 1e-9 * std::max(1.0, ref));
    }
  }
}

TEST_CASE("complex 2x2 multiplication associativity") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 50; ++rep) {
    CMat2 a, b, c;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a(i, j) = Cplx(g(rng), g(rng));
        b(i, j) = Cplx(g(rng), g(rng));
        c(i, j) = Cplx(g(rng), g(rng));
      }
    const CMat2 lhs = (a * b) * c;
    const CMat2 rhs = a * (b * c);
    CHECK((lhs - rhs).norm() < 1e-13 * std::max(1.0, rhs.norm()));
  }
}
