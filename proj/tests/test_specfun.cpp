#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcs/specfun.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace hcs;
using cplx = std::complex<double>;

// Fixture constants computed with mpmath at 40 digits; see
// tests/oracles/gen_fixtures.py.
namespace fix {
constexpr double lg_half = 0.57236494292470008707; // ln Gamma(1/2)
const cplx lg_0p5_10i{-14.789024734744293451, 13.030020034911089851};
const cplx lg_2p5_30i{-39.401169197616284552, 75.112279562959702944};
const cplx lg_1_m4i{-4.6710995934088876474, -2.3096980565725349601};
const cplx gamma_m1p5_2i{-0.0018843965411520957168, 0.020932721986921831184};

constexpr double k_13_1 = 0.43843063344153436171;   // K(1/3, 1)
constexpr double k_13_2 = 0.11654496129616524876;   // K(1/3, 2)
constexpr double k_23_18 = 4.0323379288728862921;   // K(2/3, 1/8)
constexpr double k_43_1 = 0.7867621510652311748;    // K(4/3, 1)
constexpr double k_12_1 = 0.46106850444789455844;   // K(1/2, 1)
constexpr double k_13_35 = 1.3331202314165813311e-16;
constexpr double k_5_40 = 1.1423814375953183357e-18;
constexpr double k_43_small = 11250.828459835673029; // K(4/3, 1e-3)

constexpr double i_1_1 = 0.56515910399248502721;    // I(1, 1)
constexpr double i_13_2 = 2.158782581372863024;     // I(1/3, 2)
constexpr double i_13_03 = 0.60509651841527682532;  // I(1/3, 0.3)
constexpr double i_1_14 = 124707.25914906986035;    // I(1, 14)
} // namespace fix

namespace {

// independent brute-force oracle: fixed-step extended-precision trapezoid
// of the integral representation
long double bessel_k_brute(long double nu, long double x) {
    const long double h = 0.004L;
    long double sum = 0.5L; // integrand at t = 0 is e^{-x(cosh 0 - 1)} = 1
    for (long j = 1;; ++j) {
        const long double t = j * h;
        const long double e = -x * (std::cosh(t) - 1.0L);
        if (e < -80.0L) break;
        sum += std::exp(e) * std::cosh(nu * t);
    }
    return std::exp(-x) * sum * h;
}

long double bessel_i_brute(long double nu, long double x) {
    long double term = std::exp(nu * std::log(x / 2.0L) - std::lgamma(nu + 1.0L));
    long double sum = term;
    for (int m = 1; m < 400; ++m) {
        term *= (x * x / 4.0L) / (m * (m + nu));
        sum += term;
        if (term < 1e-22L * sum) break;
    }
    return sum;
}

} // namespace

TEST_CASE("log_gamma known values") {
    CHECK(std::abs(specfun::log_gamma(cplx(1.0, 0.0))) < 1e-14);
    CHECK(specfun::log_gamma(cplx(0.5, 0.0)).real() ==
          doctest::Approx(fix::lg_half).epsilon(1e-14));
    CHECK(std::fabs(specfun::log_gamma(cplx(0.5, 0.0)).imag()) < 1e-14);

    const cplx v1 = specfun::log_gamma(cplx(0.5, 10.0));
    CHECK(std::abs(v1 - fix::lg_0p5_10i) < 1e-12 * std::abs(fix::lg_0p5_10i));
    const cplx v2 = specfun::log_gamma(cplx(2.5, 30.0));
    CHECK(std::abs(v2 - fix::lg_2p5_30i) < 1e-12 * std::abs(fix::lg_2p5_30i));
    const cplx v3 = specfun::log_gamma(cplx(1.0, -4.0));
    CHECK(std::abs(v3 - fix::lg_1_m4i) < 1e-12 * std::abs(fix::lg_1_m4i));

    // reflection region: compare exp(log_gamma) to the gamma value
    const cplx g = std::exp(specfun::log_gamma(cplx(-1.5, 2.0)));
    CHECK(std::abs(g - fix::gamma_m1p5_2i) < 1e-12 * std::abs(fix::gamma_m1p5_2i));
}

TEST_CASE("log_gamma pole detection") {
    CHECK_THROWS_AS(specfun::log_gamma(cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(specfun::log_gamma(cplx(-3.0, 0.0)), std::domain_error);
    CHECK_NOTHROW(specfun::log_gamma(cplx(-3.0, 1e-8)));
}

TEST_CASE("log_gamma recurrence property") {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> re(0.5, 10.0), im(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        const cplx z(re(rng), im(rng));
        const cplx lhs = std::exp(specfun::log_gamma(z + 1.0));
        const cplx rhs = z * std::exp(specfun::log_gamma(z));
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
    }
}

TEST_CASE("bessel_k known values") {
    CHECK(specfun::bessel_k(0.5, 1.0) ==
          doctest::Approx(fix::k_12_1).epsilon(1e-12));
    CHECK(specfun::bessel_k(0.5, 1.0) ==
          doctest::Approx(std::sqrt(M_PI / 2.0) * std::exp(-1.0)).epsilon(1e-12));
    CHECK(specfun::bessel_k(1.0 / 3.0, 1.0) ==
          doctest::Approx(fix::k_13_1).epsilon(1e-12));
    CHECK(specfun::bessel_k(-1.0 / 3.0, 2.0) ==
          doctest::Approx(fix::k_13_2).epsilon(1e-12));
    CHECK(specfun::bessel_k(2.0 / 3.0, 0.125) ==
          doctest::Approx(fix::k_23_18).epsilon(1e-12));
    CHECK(specfun::bessel_k(4.0 / 3.0, 1.0) ==
          doctest::Approx(fix::k_43_1).epsilon(1e-12));
    CHECK(specfun::bessel_k(4.0 / 3.0, 1e-3) ==
          doctest::Approx(fix::k_43_small).epsilon(1e-11));
    // asymptotic branch
    CHECK(specfun::bessel_k(1.0 / 3.0, 35.0) ==
          doctest::Approx(fix::k_13_35).epsilon(1e-12));
    CHECK(specfun::bessel_k(5.0, 40.0) ==
          doctest::Approx(fix::k_5_40).epsilon(1e-11));

    CHECK_THROWS_AS(specfun::bessel_k(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_k(0.5, -1.0), std::domain_error);
}

TEST_CASE("bessel_k against the brute-force quadrature oracle") {
    for (double nu : {0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 4.0 / 3.0, 2.0}) {
        for (double x : {0.05, 0.3, 1.0, 3.7, 12.0, 25.0}) {
            const double ref = double(bessel_k_brute(nu, x));
            CHECK(specfun::bessel_k(nu, x) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel_k symmetry and monotonicity") {
    for (double nu : {1.0 / 3.0, 2.0 / 3.0}) {
        for (double x = 0.01; x <= 50.0; x *= 1.7) {
            const double kp = specfun::bessel_k(nu, x);
            const double km = specfun::bessel_k(-nu, x);
            CHECK(std::fabs(kp - km) <= 1e-12 * kp);
        }
    }
    for (double nu : {0.0, 0.5, 4.0 / 3.0, 3.0}) {
        double prev = std::numeric_limits<double>::infinity();
        for (double x = 0.02; x <= 60.0; x *= 1.31) {
            const double k = specfun::bessel_k(nu, x);
            CHECK(k > 0.0);
            CHECK(k < prev);
            prev = k;
        }
    }
}

TEST_CASE("bessel_i series values and domain") {
    CHECK(specfun::bessel_i(1.0, 0.0) == 0.0);
    CHECK(specfun::bessel_i(0.0, 0.0) == 1.0);
    CHECK(specfun::bessel_i(1.0, 1.0) == doctest::Approx(fix::i_1_1).epsilon(1e-13));
    CHECK(specfun::bessel_i(1.0 / 3.0, 2.0) ==
          doctest::Approx(fix::i_13_2).epsilon(1e-13));
    CHECK(specfun::bessel_i(1.0 / 3.0, 0.3) ==
          doctest::Approx(fix::i_13_03).epsilon(1e-13));
    CHECK(specfun::bessel_i(1.0, 14.0) ==
          doctest::Approx(fix::i_1_14).epsilon(1e-13));
    CHECK_THROWS_AS(specfun::bessel_i(1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_i(-0.25, 0.5), std::domain_error);

    for (double nu : {0.0, 1.0 / 3.0, 1.0}) {
        for (double x = 0.01; x <= 50.0; x *= 2.3) {
            const double ref = double(bessel_i_brute(nu, x));
            CHECK(specfun::bessel_i(nu, x) == doctest::Approx(ref).epsilon(1e-12));
        }
    }
}

TEST_CASE("wronskian of I and K") {
    for (double nu : {0.0, 1.0 / 3.0, 1.0}) {
        for (double x = 0.1; x <= 20.0; x *= 1.45) {
            const double w = specfun::bessel_i(nu, x) * specfun::bessel_k(nu + 1.0, x) +
                             specfun::bessel_i(nu + 1.0, x) * specfun::bessel_k(nu, x);
            CHECK(w == doctest::Approx(1.0 / x).epsilon(1e-9));
        }
    }
}
