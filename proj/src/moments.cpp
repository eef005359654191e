#include "hcs/moments.hpp"
#include "hcs/errors.hpp"
#include "hcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hcs::moments {

MomentFamily MomentFamily::general_power(double a, double nu, int k, int l,
                                         bool allow_negative_nu) {
    if (!(a > 0.0)) throw std::domain_error("MomentFamily: requires a > 0");
    if (l < 1 || k <= l) throw std::domain_error("MomentFamily: requires k > l >= 1");
    if (nu < 0.0 && !allow_negative_nu)
        throw std::domain_error(
            "MomentFamily: nu < 0 loses weight positivity; pass the explicit waiver");
    MomentFamily f;
    f.kind_ = FamilyKind::GeneralPower;
    f.a_ = a;
    f.nu_ = nu;
    f.k_ = k;
    f.l_ = l;
    f.waiver_ = nu < 0.0;
    return f;
}

MomentFamily MomentFamily::bessel_k(double nu) {
    MomentFamily f;
    f.kind_ = FamilyKind::BesselK;
    f.nu_ = nu;
    f.bessel_norm_ = 1.0 / specfun::bessel_k(nu, 1.0);
    return f;
}

MomentFamily MomentFamily::bessel_i_exp() {
    MomentFamily f;
    f.kind_ = FamilyKind::BesselIExp;
    return f;
}

MomentFamily MomentFamily::coulomb_exact() {
    MomentFamily f;
    f.kind_ = FamilyKind::CoulombExact;
    return f;
}

MomentFamily MomentFamily::coulomb_alt() {
    MomentFamily f;
    f.kind_ = FamilyKind::CoulombAlt;
    return f;
}

std::string MomentFamily::name() const {
    switch (kind_) {
        case FamilyKind::GeneralPower:
            return "general(a=" + std::to_string(a_) + ",nu=" + std::to_string(nu_) +
                   ",k=" + std::to_string(k_) + ",l=" + std::to_string(l_) + ")";
        case FamilyKind::BesselK: return "besselk(nu=" + std::to_string(nu_) + ")";
        case FamilyKind::BesselIExp: return "besseli-exp";
        case FamilyKind::CoulombExact: return "coulomb";
        case FamilyKind::CoulombAlt: return "coulomb-alt";
    }
    return "?";
}

double log_rho(const MomentFamily& f, long n) {
    if (n < 0) throw std::domain_error("rho: requires n >= 0");
    const double np1 = double(n) + 1.0;
    switch (f.kind()) {
        case FamilyKind::GeneralPower: {
            const double p = double(f.l()) / double(f.k());
            return f.a() * (1.0 - std::pow(np1, p)) - f.nu() * std::log(np1);
        }
        case FamilyKind::BesselK: {
            const double x = std::sqrt(np1);
            return std::log(specfun::bessel_k_scaled(f.nu(), x)) - x +
                   std::log(f.bessel_norm()) - 0.5 * std::log(np1);
        }
        case FamilyKind::BesselIExp:
            return 1.0 / np1 - 1.0 - (4.0 / 3.0) * std::log(np1);
        case FamilyKind::CoulombExact:
            return std::log((double(n) + 2.0) / (2.0 * np1));
        case FamilyKind::CoulombAlt:
            return 1.0 / np1 - 1.0;
    }
    return 0.0;
}

double rho(const MomentFamily& f, long n) {
    if (f.kind() == FamilyKind::CoulombExact) {
        if (n < 0) throw std::domain_error("rho: requires n >= 0");
        return (double(n) + 2.0) / (2.0 * (double(n) + 1.0));
    }
    return std::exp(log_rho(f, n));
}

namespace {

// ln e(n) for n >= 1, arranged so that 1 - e(n) keeps full precision
double log_spectrum(const MomentFamily& f, long n) {
    const double nn = double(n);
    const double r = 1.0 / nn; // (n+1)/n = 1 + r
    switch (f.kind()) {
        case FamilyKind::GeneralPower: {
            const double p = double(f.l()) / double(f.k());
            // (n+1)^p - n^p = n^p expm1(p log1p(1/n))
            const double dpow = std::pow(nn, p) * std::expm1(p * std::log1p(r));
            return -f.nu() * std::log1p(r) - f.a() * dpow;
        }
        case FamilyKind::BesselK: {
            const double x0 = std::sqrt(nn);
            const double x1 = std::sqrt(nn + 1.0);
            return std::log(specfun::bessel_k_scaled(f.nu(), x1) /
                            specfun::bessel_k_scaled(f.nu(), x0)) -
                   1.0 / (x0 + x1) - 0.5 * std::log1p(r);
        }
        case FamilyKind::BesselIExp:
            return -1.0 / (nn * (nn + 1.0)) - (4.0 / 3.0) * std::log1p(r);
        case FamilyKind::CoulombExact:
            return std::log1p(-1.0 / ((nn + 1.0) * (nn + 1.0)));
        case FamilyKind::CoulombAlt:
            return -1.0 / (nn * (nn + 1.0));
    }
    return 0.0;
}

} // namespace

double spectrum(const MomentFamily& f, long n) {
    if (n < 0) throw std::domain_error("spectrum: requires n >= 0");
    if (n == 0) return 0.0;
    if (f.kind() == FamilyKind::CoulombExact) {
        const double np1 = double(n) + 1.0;
        return 1.0 - 1.0 / (np1 * np1);
    }
    return std::exp(log_spectrum(f, n));
}

double one_minus_spectrum(const MomentFamily& f, long n) {
    if (n < 1) throw std::domain_error("one_minus_spectrum: requires n >= 1");
    if (f.kind() == FamilyKind::CoulombExact) {
        const double np1 = double(n) + 1.0;
        return 1.0 / (np1 * np1);
    }
    return -std::expm1(log_spectrum(f, n));
}

namespace {

struct FitData {
    std::vector<double> x; // ln n
    std::vector<double> y; // ln (1 - e(n))
    std::vector<double> n;
};

// weighted least squares of y = b0 - theta x + beta exp(-q x)
struct LinFit {
    double b0, theta, beta;
};

LinFit solve_wls(const FitData& d, double q, bool with_correction) {
    const std::size_t m = d.x.size();
    const int np = with_correction ? 3 : 2;
    long double ata[3][3] = {};
    long double aty[3] = {};
    for (std::size_t i = 0; i < m; ++i) {
        const long double cols[3] = {1.0L, -(long double)d.x[i],
                                     with_correction
                                         ? (long double)std::exp(-q * d.x[i])
                                         : 0.0L};
        for (int r = 0; r < np; ++r) {
            for (int c = 0; c < np; ++c) ata[r][c] += cols[r] * cols[c];
            aty[r] += cols[r] * (long double)d.y[i];
        }
    }
    // Gaussian elimination with partial pivoting on the (tiny) normal system
    long double a[3][4];
    for (int r = 0; r < np; ++r) {
        for (int c = 0; c < np; ++c) a[r][c] = ata[r][c];
        a[r][3] = aty[r];
    }
    for (int col = 0; col < np; ++col) {
        int piv = col;
        for (int r = col + 1; r < np; ++r)
            if (std::fabs((double)a[r][col]) > std::fabs((double)a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        for (int r = col + 1; r < np; ++r) {
            const long double fac = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= fac * a[col][c];
        }
    }
    long double sol[3] = {};
    for (int r = np - 1; r >= 0; --r) {
        long double s = a[r][3];
        for (int c = r + 1; c < np; ++c) s -= a[r][c] * sol[c];
        sol[r] = s / a[r][r];
    }
    return {double(sol[0]), double(sol[1]), with_correction ? double(sol[2]) : 0.0};
}

} // namespace

AsymptoticDescriptor fit_asymptotics(const MomentFamily& f, long n_min, long n_max) {
    if (n_min < 100 || n_max < 4 * n_min)
        throw std::domain_error("fit_asymptotics: requires n_max >= 4 n_min >= 400");

    // drop the smallest decade of the range when there is room for it
    const long lo = std::min(10 * n_min, n_max / 4);
    const long hi = n_max;

    FitData d;
    const int samples = 96;
    const double step = std::log(double(hi) / double(lo)) / double(samples - 1);
    long prev = -1;
    for (int i = 0; i < samples; ++i) {
        const long n = std::lround(double(lo) * std::exp(step * double(i)));
        if (n == prev) continue;
        prev = n;
        const double ome = one_minus_spectrum(f, n);
        if (!(ome > 0.0))
            throw fit_error("fit_asymptotics: non-monotone spectrum, 1-e(n) <= 0 at n=" +
                            std::to_string(n));
        d.n.push_back(double(n));
        d.x.push_back(std::log(double(n)));
        d.y.push_back(std::log(ome));
    }

    LinFit fit = solve_wls(d, 0.0, false);
    double theta = fit.theta;
    // refine with one subleading term whose exponent tracks the family
    for (int it = 0; it < 3; ++it) {
        double q = std::max(0.05, std::min(theta, 1.0));
        if (f.kind() == FamilyKind::GeneralPower && f.nu() != 0.0)
            q = std::max(0.05, std::min({theta, 1.0 - theta, 1.0}));
        fit = solve_wls(d, q, true);
        if (std::fabs(fit.theta - theta) < 1e-9) {
            theta = fit.theta;
            break;
        }
        theta = fit.theta;
    }

    AsymptoticDescriptor out;
    out.theta = theta;
    out.c = std::exp(fit.b0);
    out.sigma = 2.0 * theta / (2.0 + theta);
    return out;
}

double sigma_from_kl(int k, int l) {
    if (l < 1 || k <= l) throw std::domain_error("sigma_from_kl: requires k > l >= 1");
    return 2.0 * double(k - l) / (3.0 * double(k) - double(l));
}

} // namespace hcs::moments
