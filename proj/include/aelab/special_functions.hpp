#pragma once

#include <complex>
#include <vector>

namespace aelab {

/// Gamma function on the positive real axis (Lanczos, g=7, 9 coefficients).
double gamma_pos(double x);

/// Bessel functions of integer order for real positive argument.
/// J uses upward recurrence for n < x and Miller's downward algorithm
/// otherwise; Y recurses upward from the n=0,1 series/asymptotics.
double bessel_j(int n, double x);
double bessel_y(int n, double x);
std::complex<double> hankel1(int n, double x);

/// d/dx of the above, via Z_n' = (Z_{n-1} - Z_{n+1})/2.
double bessel_j_prime(int n, double x);
double bessel_y_prime(int n, double x);
std::complex<double> hankel1_prime(int n, double x);

/// J_0(x) .. J_nmax(x) in one downward pass; cheaper than nmax+1 single
/// evaluations when a whole mode ladder is needed.
std::vector<double> bessel_j_array(int nmax, double x);

}  // namespace aelab
