#pragma once

#include <complex>

namespace hcs::specfun {

/// Principal branch of ln Gamma(z).  Lanczos approximation on
/// Re z >= 1/2, reflection formula elsewhere.  Throws std::domain_error
/// at the poles (non-positive integers).
std::complex<double> log_gamma(std::complex<double> z);

/// Modified Bessel function of the second kind K_nu(x), x > 0.
/// Evaluated from the integral representation
///   K_nu(x) = \int_0^inf exp(-x cosh t) cosh(nu t) dt
/// by a doubly exponentially convergent trapezoid rule; switches to the
/// large-argument asymptotic expansion for x > 30.
double bessel_k(double nu, double x);

/// e^x K_nu(x); stable for large x where K itself underflows.
double bessel_k_scaled(double nu, double x);

/// Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0,
/// from the ascending power series, truncated when a term falls below
/// 1e-16 times the partial sum.
double bessel_i(double nu, double x);

} // namespace hcs::specfun
