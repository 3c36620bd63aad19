#include "aelab/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace aelab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

// Lanczos g=7, n=9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// Hankel amplitude-phase asymptotics, reliable for x > 25 where the
// superasymptotic floor e^{-2x} is far below double precision.
void asymptotic_pq(int n, double x, double& p, double& q) {
  const double mu = 4.0 * n * n;
  const double ix8 = 1.0 / (8.0 * x);
  p = 1.0;
  q = (mu - 1.0) * ix8;
  double tp = 1.0, tq = q;
  for (int k = 1; k < 25; ++k) {
    const double a1 = mu - (4.0 * k - 3.0) * (4.0 * k - 3.0);
    const double a2 = mu - (4.0 * k - 1.0) * (4.0 * k - 1.0);
    tp *= -a1 * a2 * ix8 * ix8 / ((2.0 * k - 1.0) * 2.0 * k);
    const double b1 = mu - (4.0 * k - 1.0) * (4.0 * k - 1.0);
    const double b2 = mu - (4.0 * k + 1.0) * (4.0 * k + 1.0);
    tq *= -b1 * b2 * ix8 * ix8 / (2.0 * k * (2.0 * k + 1.0));
    p += tp;
    q += tq;
    if (std::abs(tp) < 1e-17 && std::abs(tq) < 1e-17) break;
  }
}

double j_asymptotic(int n, double x) {
  double p, q;
  asymptotic_pq(n, x, p, q);
  const double chi = x - (0.5 * n + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double y_asymptotic(int n, double x) {
  double p, q;
  asymptotic_pq(n, x, p, q);
  const double chi = x - (0.5 * n + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

// Miller's algorithm: one downward pass producing J_0..J_nmax, normalized
// with J_0 + 2 sum_{k>=1} J_{2k} = 1.
std::vector<double> j_array_miller(int nmax, double x) {
  const int base = std::max(nmax, static_cast<int>(x));
  const int start = base + 20 + static_cast<int>(std::sqrt(40.0 * (base + 1)));
  std::vector<double> out(nmax + 1, 0.0);
  double jp = 0.0;      // J_{k+1}
  double jc = 1e-30;    // J_k
  double sum_even = (start % 2 == 0 && start > 0) ? jc : 0.0;
  if (start <= nmax) out[start] = jc;
  for (int k = start; k >= 1; --k) {
    double jm = (2.0 * k) / x * jc - jp;  // J_{k-1}
    jp = jc;
    jc = jm;
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      sum_even *= 1e-250;
      for (double& v : out) v *= 1e-250;
    }
    const int ord = k - 1;
    if (ord <= nmax) out[ord] = jc;
    if (ord >= 2 && ord % 2 == 0) sum_even += jc;
  }
  const double norm = 2.0 * sum_even + jc;  // jc == J_0 estimate
  for (double& v : out) v /= norm;
  return out;
}

// Y_0 and Y_1 from the Neumann expansion driven by the Miller J-array;
// avoids the heavy cancellation of the ascending log series at moderate x.
void y01_neumann(double x, double& y0, double& y1) {
  const int kmax = static_cast<int>(x) + 40;
  const std::vector<double> j = j_array_miller(2 * kmax + 2, x);
  const double lg = std::log(0.5 * x) + kEulerGamma;
  double s0 = 0.0;   // sum (-1)^k J_{2k}/k
  double s0p = 0.0;  // sum (-1)^k (J_{2k-1} - J_{2k+1})/(2k)   (= d/dx of s0)
  double sign = -1.0;
  for (int k = 1; k <= kmax; ++k) {
    s0 += sign * j[2 * k] / k;
    s0p += sign * (j[2 * k - 1] - j[2 * k + 1]) / (2.0 * k);
    sign = -sign;
  }
  y0 = (2.0 / kPi) * (lg * j[0] - 2.0 * s0);
  // Y_1 = -Y_0'
  const double y0p = (2.0 / kPi) * (j[0] / x + lg * (-j[1]) - 2.0 * s0p);
  y1 = -y0p;
}

}  // namespace

double gamma_pos(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_pos: requires x > 0");
  if (x < 0.5) {
    // Reflection keeps the Lanczos argument in its sweet spot.
    return kPi / (std::sin(kPi * x) * gamma_pos(1.0 - x));
  }
  x -= 1.0;
  double a = kLanczos[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double bessel_j(int n, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_j: requires x > 0");
  const bool flip = (n < 0) && (n & 1);
  n = std::abs(n);
  double v;
  if (x > 25.0 && n < x) {
    // upward recurrence is stable while the order stays below the argument
    double jm = j_asymptotic(0, x), j = j_asymptotic(1, x);
    if (n == 0) {
      v = jm;
    } else {
      for (int k = 1; k < n; ++k) {
        const double jp = (2.0 * k) / x * j - jm;
        jm = j;
        j = jp;
      }
      v = j;
    }
  } else {
    v = j_array_miller(n, x)[n];
  }
  return flip ? -v : v;
}

double bessel_y(int n, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_y: requires x > 0");
  const bool flip = (n < 0) && (n & 1);
  n = std::abs(n);
  double ym, y;
  if (x > 25.0) {
    ym = y_asymptotic(0, x);
    y = y_asymptotic(1, x);
  } else {
    y01_neumann(x, ym, y);
  }
  if (n == 0) return flip ? -ym : ym;
  for (int k = 1; k < n; ++k) {
    const double yp = (2.0 * k) / x * y - ym;
    ym = y;
    y = yp;
  }
  return flip ? -y : y;
}

std::complex<double> hankel1(int n, double x) {
  return {bessel_j(n, x), bessel_y(n, x)};
}

double bessel_j_prime(int n, double x) {
  if (n == 0) return -bessel_j(1, x);
  return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

double bessel_y_prime(int n, double x) {
  if (n == 0) return -bessel_y(1, x);
  return 0.5 * (bessel_y(n - 1, x) - bessel_y(n + 1, x));
}

std::complex<double> hankel1_prime(int n, double x) {
  return {bessel_j_prime(n, x), bessel_y_prime(n, x)};
}

std::vector<double> bessel_j_array(int nmax, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_j_array: requires x > 0");
  return j_array_miller(nmax, x);
}

}  // namespace aelab
