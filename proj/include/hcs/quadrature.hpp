#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hcs::quad {

struct Result {
    double value = 0.0;
    double abs_err = 0.0;   // estimated absolute error
    std::size_t evals = 0;  // integrand evaluations used
};

/// Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

/// Nodes and weights for an n-point Gauss-Legendre rule (cached, thread-safe
/// for the orders used by this library).
const GaussLegendre& gauss_legendre(int n);

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b].  Stops when the summed
/// error estimate drops below max(abs_tol, rel_tol * |integral|).
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol = 0.0,
                 std::size_t max_intervals = 4000);

/// tanh-sinh (double-exponential) rule on (a, b).  The integrand receives
/// (x, x - a, b - x) with the endpoint distances computed free of
/// cancellation, so integrable endpoint singularities can be evaluated
/// stably arbitrarily close to a or b.
Result tanh_sinh(const std::function<double(double, double, double)>& f,
                 double a, double b, double rel_tol, double abs_tol = 0.0,
                 int max_level = 9);

/// ∫_0^∞ e^{-lambda t} f(t) dt for smooth positive f of subexponential
/// growth, possibly with an integrable singularity at t = 0.  Locates the
/// region where the damped integrand is non-negligible by a coarse
/// geometric scan, then combines tanh-sinh near the origin with adaptive
/// panels across the bulk; the discarded tail is controlled by the scan.
Result laplace_decaying(const std::function<double(double)>& f, double lambda,
                        double rel_tol);

} // namespace hcs::quad
