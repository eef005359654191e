#include "hcs/quasiclassical.hpp"
#include "hcs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hcs::quasiclassical {

double d_constant(double sigma) {
    if (!(sigma > 0.0) || !(sigma < 2.0))
        throw std::domain_error("d_constant: requires 0 < sigma < 2");
    // u = v^beta, beta = 2/(2-sigma): integrand beta v^{beta-1}
    // sqrt(u^{-sigma} - 1) is finite at v = 0
    const double beta = 2.0 / (2.0 - sigma);
    auto f = [&](double v) {
        const double e = expm1(-sigma * beta * std::log(v));
        if (e <= 0.0) return 0.0; // v = 1 boundary roundoff
        return beta * std::pow(v, beta - 1.0) * std::sqrt(e);
    };
    quad::Result r = quad::integrate(f, 0.0, 1.0, 1e-11, 0.0, 20000);
    return r.value;
}

double level_exponent(double sigma) {
    if (!(sigma > 0.0) || !(sigma < 2.0))
        throw std::domain_error("level_exponent: requires 0 < sigma < 2");
    return 2.0 * sigma / (2.0 - sigma);
}

double quasiclassical_level(const PotentialSpec& spec, long n) {
    if (n < 0) throw std::domain_error("quasiclassical_level: requires n >= 0");
    if (!(spec.v0 > 0.0) || !(spec.mass > 0.0))
        throw std::domain_error("quasiclassical_level: requires v0, mass > 0");
    const double d = d_constant(spec.sigma);
    const double base = 0.5 * M_PI * (double(n) + 0.5) /
                        (std::sqrt(2.0 * spec.mass) * d) * spec.v0;
    return -std::pow(base, -level_exponent(spec.sigma));
}

} // namespace hcs::quasiclassical
