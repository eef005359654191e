#pragma once

#include "hcs/moments.hpp"

#include <complex>

namespace hcs::coherent {

/// Label (J, gamma) of a coherent state; J must lie inside the unit
/// convergence radius shared by all families.
struct CSParams {
    double J = 0.0;
    double gamma = 0.0;
};

struct SeriesValue {
    double value = 0.0;
    long terms = 0;        // summed terms
    double tail_bound = 0.0; // geometric certificate for the remainder
};

/// N(J) = sum_n J^n / rho(n), with a geometric tail certificate.
/// Throws hcs::convergence_error for J >= 1 - 1e-9.
double normalization(const moments::MomentFamily& f, double J, double tol = 1e-12);
SeriesValue normalization_stats(const moments::MomentFamily& f, double J,
                                double tol = 1e-12);

/// (1/N) sum_n J^n e(n)/rho(n) - J; vanishes identically because the
/// series telescopes through e(n) = rho(n)/rho(n-1).
double action_identity_residual(const moments::MomentFamily& f, double J,
                                double tol = 1e-12);

/// <J1,g1 | J2,g2> = (N1 N2)^{-1/2} sum_n (J1 J2)^{n/2}
///                     e^{-i (g2-g1) e(n)} / rho(n)
std::complex<double> overlap(const moments::MomentFamily& f, CSParams p1,
                             CSParams p2, double tol = 1e-12);

} // namespace hcs::coherent
