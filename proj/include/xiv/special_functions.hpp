// Transcendental building blocks: the theta sum psi and its derivatives, the
// theta-kernel F, complex log-gamma/digamma, zeta on Re s > 0, the generalized
// exponential integral of complex order, and the two Bessel kernels.
//
// Everything here is a pure function of its arguments; all series use
// compensated summation and return certified truncation tails.
#ifndef XIV_SPECIAL_FUNCTIONS_HPP
#define XIV_SPECIAL_FUNCTIONS_HPP

#include "xiv/types.hpp"

namespace xiv {

// psi(x) = sum_{n>=1} exp(-pi n^2 x), half of (theta_3 - 1).
//
// The remainder after the last included term is bounded by the geometric
// envelope e^{-pi (N+1)^2 x} / (1 - e^{-pi (2N+3) x}).  Throws
// tolerance_error when more than 10^4 terms would be needed (x too small;
// callers switch to the modular transformation instead).
// `min_terms` forces at least that many terms (used by tail-certification
// tests); 0 means automatic.
SeriesEvaluation psi(double x, double tol, int min_terms = 0);

// k-th derivative of psi, k in {1, 2}: sum (-pi n^2)^k exp(-pi n^2 x).
SeriesEvaluation psi_derivative(double x, int order, double tol, int min_terms = 0);

// F(x) = 4 pi^2 x^4 sum n^4 e^{-pi n^2 x^2} - 6 pi x^2 sum n^2 e^{-pi n^2 x^2}.
SeriesEvaluation f_mellin(double x, double tol, int min_terms = 0);

// Principal branch of log Gamma.  Lanczos (g = 7, 9 coefficients) on
// Re z >= 1/2, reflection formula elsewhere.  Poles at 0, -1, -2, ...
cplx log_gamma(cplx z);

// Logarithmic derivative of Gamma (same Lanczos data, differentiated).
cplx digamma(cplx z);

// zeta(s) for Re s > 0, s != 1, via the eta (alternating) series with
// Borwein-style acceleration; term count grows ~ 1.8 |Im s|.  Relative
// accuracy ~1e-13 for 0 < Re s <= 3, |Im s| <= 250.
cplx zeta(cplx s);

// E_z(a) = int_1^inf t^{-z} e^{-a t} dt for complex order z and a > 0.
// Adaptive quadrature after t = e^v with an analytic tail bound; absolute
// accuracy ~ tol.
cplx exp_integral_e(cplx z, double a, double tol = 1e-12);

// Bessel J0 for real argument and I0 for complex argument (|z| <= 80):
// ascending series for small |z|, periodic trapezoidal rule on the integral
// representation beyond it.
double bessel_j0(double x);
cplx bessel_i0(cplx z);

} // namespace xiv

#endif
