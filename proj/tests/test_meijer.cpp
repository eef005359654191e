#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcs/errors.hpp"
#include "hcs/meijer.hpp"
#include "hcs/specfun.hpp"

#include <cmath>

using namespace hcs;

// Fixtures from tests/oracles/gen_fixtures.py (mpmath meijerg, 40 digits).
namespace fix {
constexpr double g_single_half_1 = 0.3678794411714423216;   // = e^{-1}
constexpr double g_13_23_01 = 0.49336814912840098304;
constexpr double g_eq33_025 = 0.38940039153570243412;       // = sqrt(z) e^{-z}
constexpr double g_31_nu_half_005 = 1.1905914522933129545;
constexpr double g_32_nu_quarter_03 = 0.59198455584394406918;
constexpr double g_41_nu0_002 = 0.74272272559645143909;
constexpr double g_21_nu_neg_half_025 = -0.19470019576785121706;
constexpr double conv_20_at_1 = 0.23987554393612289474;     // sqrt(pi) e^{-2}
} // namespace fix

TEST_CASE("delta_list") {
    CHECK(meijer::delta_list(1, 0.0) == std::vector<double>{0.0});
    CHECK(meijer::delta_list(2, 0.0) == std::vector<double>{0.0, 0.5});
    const auto d3 = meijer::delta_list(3, 0.0);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0] == 0.0);
    CHECK(d3[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(d3[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-16));
    CHECK(meijer::delta_list(2, 1.0) == std::vector<double>{0.5, 1.0});
    CHECK_THROWS_AS(meijer::delta_list(0, 0.0), std::domain_error);
}

TEST_CASE("spec validation") {
    meijer::MeijerGSpec bad;
    bad.lower_present = {0.0};
    bad.upper_present = {0.0};
    bad.argument = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error); // k == l
    auto spec = meijer::MeijerGSpec::power_family(3, 1, 0.5, 2.0);
    CHECK(spec.upper_present == std::vector<double>{0.5});
    CHECK(spec.lower_present.size() == 3);
    spec.argument = -1.0;
    CHECK_THROWS_AS(spec.validate(), std::domain_error);
}

TEST_CASE("one-shot mellin-barnes with explicit contour") {
    meijer::MeijerGSpec spec;
    spec.lower_present = {0.5};
    spec.argument = 1.0;
    meijer::ContourConfig cfg;
    cfg.half_height = 40.0;
    cfg.nodes = 1024;
    const auto v = meijer::eval_mellin_barnes(spec, cfg);
    CHECK(v.value == doctest::Approx(fix::g_single_half_1).epsilon(1e-11));
    CHECK(v.trunc_err <= 1e-10 * std::fabs(v.value));

    // too short a contour: the tail bound must reject the configuration
    meijer::ContourConfig tiny;
    tiny.half_height = 4.0;
    tiny.nodes = 256;
    CHECK_THROWS_AS(meijer::eval_mellin_barnes(spec, tiny), convergence_error);
    CHECK_THROWS_AS([&] {
        meijer::ContourConfig bad;
        bad.nodes = 32;
        return meijer::eval_mellin_barnes(spec, bad);
    }(), std::domain_error);
}

TEST_CASE("doubling the half height changes less than the reported bound") {
    meijer::MeijerGSpec spec = meijer::MeijerGSpec::power_family(2, 1, 0.25, 0.6);
    meijer::ContourConfig cfg;
    cfg.half_height = 20.0;
    cfg.nodes = 2048;
    meijer::ContourConfig twice = cfg;
    twice.half_height = 40.0;
    twice.nodes = 4096;
    const auto v1 = meijer::eval_mellin_barnes(spec, cfg);
    const auto v2 = meijer::eval_mellin_barnes(spec, twice);
    CHECK(std::fabs(v1.value - v2.value) <= v1.trunc_err + v1.quad_err);
}

TEST_CASE("evaluator: single-gamma reduction G = sqrt(z) e^{-z}") {
    meijer::MellinBarnesEvaluator g({}, {0.5});
    for (double z : {0.05, 0.25, 1.0, 4.0, 9.0}) {
        const double ref = std::sqrt(z) * std::exp(-z);
        CHECK(g.eval(z) == doctest::Approx(ref).epsilon(1e-10));
    }
    CHECK_THROWS_AS(g.eval(-2.0), std::domain_error);
}

TEST_CASE("evaluator: two-gamma reduction to bessel K") {
    // G^{2,0}_{0,2}(z | ; b1, b2) = 2 z^{(b1+b2)/2} K_{b1-b2}(2 sqrt z)
    meijer::MellinBarnesEvaluator g13({}, {1.0 / 3.0, 2.0 / 3.0});
    CHECK(g13.eval(0.1) == doctest::Approx(fix::g_13_23_01).epsilon(1e-10));
    for (double z = 1e-3; z <= 10.0; z *= 3.1) {
        const double ref =
            2.0 * std::sqrt(z) * specfun::bessel_k(1.0 / 3.0, 2.0 * std::sqrt(z));
        CHECK(g13.eval(z) == doctest::Approx(ref).epsilon(1e-8));
    }
    meijer::MellinBarnesEvaluator g012({}, {0.0, 0.5});
    for (double z = 1e-2; z <= 4.0; z *= 2.7) {
        const double ref =
            2.0 * std::pow(z, 0.25) * specfun::bessel_k(0.5, 2.0 * std::sqrt(z));
        CHECK(g012.eval(z) == doctest::Approx(ref).epsilon(1e-8));
    }
}

TEST_CASE("evaluator: cancelling alpha/beta pair") {
    // G([[],[0]],[[0,1/2],[]], z) == G([[],[]],[[1/2],[]], z) = sqrt(z) e^{-z}
    meijer::MellinBarnesEvaluator g({0.0}, {0.0, 0.5});
    CHECK(g.eval(0.25) == doctest::Approx(fix::g_eq33_025).epsilon(1e-10));
    CHECK(g.eval(0.25) ==
          doctest::Approx(std::sqrt(0.25) * std::exp(-0.25)).epsilon(1e-10));
}

TEST_CASE("evaluator: arbitrary-precision anchors") {
    meijer::MellinBarnesEvaluator g31(meijer::delta_list(1, 0.5),
                                      meijer::delta_list(3, 0.0));
    CHECK(g31.eval(0.05) == doctest::Approx(fix::g_31_nu_half_005).epsilon(1e-10));

    meijer::MellinBarnesEvaluator g32(meijer::delta_list(2, 0.25),
                                      meijer::delta_list(3, 0.0));
    CHECK(g32.eval(0.3) == doctest::Approx(fix::g_32_nu_quarter_03).epsilon(1e-10));

    meijer::MellinBarnesEvaluator g41(meijer::delta_list(1, 0.0),
                                      meijer::delta_list(4, 0.0));
    CHECK(g41.eval(0.02) == doctest::Approx(fix::g_41_nu0_002).epsilon(1e-10));

    // nu < 0 produces a sign change: the value itself goes negative
    meijer::MellinBarnesEvaluator gneg(meijer::delta_list(1, -0.5),
                                       meijer::delta_list(2, 0.0));
    CHECK(gneg.eval(0.25) ==
          doctest::Approx(fix::g_21_nu_neg_half_025).epsilon(1e-10));
}

TEST_CASE("convolution: trivial and two-kernel cases") {
    for (double z : {0.1, 1.0, 3.0})
        CHECK(meijer::eval_convolution(1, 0, 0.0, z) ==
              doctest::Approx(std::exp(-z)).epsilon(1e-12));

    CHECK(meijer::eval_convolution(2, 0, 0.0, 1.0) ==
          doctest::Approx(fix::conv_20_at_1).epsilon(1e-8));
    CHECK(meijer::eval_convolution(2, 0, 0.0, 1.0) ==
          doctest::Approx(2.0 * specfun::bessel_k(0.5, 2.0)).epsilon(1e-8));

    CHECK_THROWS_AS(meijer::eval_convolution(2, 1, -0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(meijer::eval_convolution(1, 1, 0.0, 1.0), std::domain_error);
}

TEST_CASE("convolution: nu = 0 beta kernel is the identity") {
    // (2,1, nu=0) collapses to the single gamma kernel sqrt(z) e^{-z}
    for (double z : {0.08, 0.9, 2.5})
        CHECK(meijer::eval_convolution(2, 1, 0.0, z) ==
              doctest::Approx(std::sqrt(z) * std::exp(-z)).epsilon(1e-9));
}

TEST_CASE("backend equivalence on a quick grid") {
    struct Case { int k, l; };
    for (const Case c : {Case{2, 1}, Case{3, 1}, Case{3, 2}, Case{4, 1}}) {
        for (double nu : {0.0, 0.25, 0.5}) {
            meijer::MellinBarnesEvaluator mb(meijer::delta_list(c.l, nu),
                                             meijer::delta_list(c.k, 0.0));
            for (double z : {1e-3, 0.05, 0.7, 4.0}) {
                const double direct = mb.eval(z, 1e-10, 1e-16);
                const double conv = meijer::eval_convolution(c.k, c.l, nu, z);
                CHECK(conv >= -1e-14);
                CHECK(std::fabs(direct - conv) <=
                      1e-6 * std::max(std::fabs(direct), 1e-30));
            }
        }
    }
}
