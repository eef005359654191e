#include "hcs/coherent.hpp"
#include "hcs/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace hcs::coherent {

namespace {

constexpr long kTermBudget = 4'000'000;

void check_action_variable(double J) {
    if (J < 0.0 || !std::isfinite(J))
        throw std::domain_error("coherent: requires J >= 0");
    if (J >= 1.0 - 1e-9)
        throw convergence_error(
            "coherent: J >= 1 - 1e-9, series terms decay too slowly");
}

// sum of w(n) J^n / rho(n) with a geometric tail certificate; the term
// ratios J/e(n+1) decrease toward J < 1, so the last observed ratio
// bounds every later one
template <typename WeightFn>
SeriesValue sum_series(const moments::MomentFamily& f, double J, double tol,
                       WeightFn&& w) {
    SeriesValue out;
    if (J == 0.0) {
        out.value = w(0);
        out.terms = 1;
        return out;
    }
    const double logJ = std::log(J);
    double sum = 0.0;
    double prev_mag = 0.0;
    for (long n = 0; n < kTermBudget; ++n) {
        const double mag = std::exp(double(n) * logJ - moments::log_rho(f, n));
        sum += w(n) * mag;
        out.terms = n + 1;
        if (n > 4) {
            const double ratio = mag / prev_mag;
            if (ratio < 1.0) {
                const double tail = mag * ratio / (1.0 - ratio);
                if (tail <= tol * std::fabs(sum)) {
                    out.value = sum;
                    out.tail_bound = tail;
                    return out;
                }
            }
        }
        prev_mag = mag;
    }
    throw convergence_error("coherent: series budget exhausted");
}

} // namespace

SeriesValue normalization_stats(const moments::MomentFamily& f, double J,
                                double tol) {
    check_action_variable(J);
    return sum_series(f, J, tol, [](long) { return 1.0; });
}

double normalization(const moments::MomentFamily& f, double J, double tol) {
    return normalization_stats(f, J, tol).value;
}

double action_identity_residual(const moments::MomentFamily& f, double J,
                                double tol) {
    check_action_variable(J);
    if (J == 0.0) return 0.0;
    const double norm = normalization(f, J, tol);
    const SeriesValue h =
        sum_series(f, J, tol, [&](long n) { return moments::spectrum(f, n); });
    return h.value / norm - J;
}

std::complex<double> overlap(const moments::MomentFamily& f, CSParams p1,
                             CSParams p2, double tol) {
    check_action_variable(p1.J);
    check_action_variable(p2.J);
    const double dg = p2.gamma - p1.gamma;
    const double J = std::sqrt(p1.J * p2.J);

    std::complex<double> acc(0.0, 0.0);
    if (J == 0.0) {
        acc = 1.0; // only n = 0 survives, rho(0) = 1
    } else {
        const double logJ = std::log(J);
        double prev_mag = 0.0;
        bool done = false;
        for (long n = 0; n < kTermBudget; ++n) {
            const double mag = std::exp(double(n) * logJ - moments::log_rho(f, n));
            const double phase = -dg * moments::spectrum(f, n);
            acc += std::polar(mag, phase);
            if (n > 4) {
                const double ratio = mag / prev_mag;
                if (ratio < 1.0 &&
                    mag * ratio / (1.0 - ratio) <= tol * std::abs(acc) + tol) {
                    done = true;
                    break;
                }
            }
            prev_mag = mag;
        }
        if (!done) throw convergence_error("overlap: series budget exhausted");
    }
    const double n1 = normalization(f, p1.J, tol);
    const double n2 = normalization(f, p2.J, tol);
    return acc / std::sqrt(n1 * n2);
}

} // namespace hcs::coherent
