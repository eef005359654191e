#include "hcs/weights.hpp"
#include "hcs/errors.hpp"
#include "hcs/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hcs::weights {

using moments::FamilyKind;
using moments::MomentFamily;

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::ClosedForm: return "closed";
        case Backend::MellinBarnes: return "mellin-barnes";
        case Backend::Convolution: return "convolution";
    }
    return "?";
}

Backend backend_from_name(const std::string& s) {
    if (s == "auto") return Backend::Auto;
    if (s == "closed") return Backend::ClosedForm;
    if (s == "mellin-barnes" || s == "mb") return Backend::MellinBarnes;
    if (s == "convolution" || s == "conv") return Backend::Convolution;
    throw std::domain_error("unknown backend '" + s + "'");
}

namespace {

bool near(double v, double target) { return std::fabs(v - target) < 1e-12; }

// closed-form density of the (k,l,nu) cases reducible to elementary /
// Bessel-K expressions; L = ln(1/y)
double closed_power_density(double a, double nu, int k, int l, double L) {
    const double ea = std::exp(a);
    if (k == 2 && l == 1 && near(nu, 0.0)) {
        // Levy-type kernel: (a / 2 sqrt(pi)) L^{-3/2} e^{-a^2/(4L)}
        return ea * 0.5 * a / std::sqrt(M_PI) * std::pow(L, -1.5) *
               std::exp(-a * a / (4.0 * L));
    }
    const double a32 = std::pow(a, 1.5);
    if (k == 3 && l == 1 && near(nu, 0.0)) {
        const double u = 2.0 * a32 / (3.0 * std::sqrt(3.0) * std::sqrt(L));
        return ea * a32 / (3.0 * M_PI) * std::pow(L, -1.5) *
               specfun::bessel_k(1.0 / 3.0, u);
    }
    if (k == 3 && l == 1 && near(nu, 0.5)) {
        const double u = a32 / (3.0 * std::sqrt(3.0) * std::sqrt(L));
        return ea * a32 / (3.0 * std::pow(M_PI, 1.5)) / L *
               specfun::bessel_k(1.0 / 3.0, u) * specfun::bessel_k(2.0 / 3.0, u);
    }
    if (k == 3 && l == 2 && near(nu, 0.0)) {
        const double w = 4.0 * a * a * a / (27.0 * L * L);
        // e^{w/2} K(w/2) evaluated through the scaled K to survive w -> inf
        const double kk =
            specfun::bessel_k_scaled(1.0 / 3.0, 0.5 * w) +
            specfun::bessel_k_scaled(2.0 / 3.0, 0.5 * w);
        return ea * 2.0 * std::sqrt(3.0) * a * a * a / (27.0 * M_PI) *
               std::pow(L, -3.0) * kk;
    }
    throw std::domain_error("no closed form for these (k, l, nu)");
}

double named_density(const MomentFamily& f, double L) {
    switch (f.kind()) {
        case FamilyKind::BesselK: {
            const double x = 1.0 / (8.0 * L);
            // e^{-x} K_{nu/2}(x) = e^{-2x} (e^x K_{nu/2}(x))
            const double ek = std::exp(-2.0 * x) *
                              specfun::bessel_k_scaled(0.5 * f.nu(), x);
            return 0.5 * f.bessel_norm() / std::sqrt(M_PI * L) * ek;
        }
        case FamilyKind::BesselIExp:
            return std::exp(-1.0) * std::pow(L, 1.0 / 6.0) *
                   specfun::bessel_i(1.0 / 3.0, 2.0 * std::sqrt(L));
        case FamilyKind::CoulombExact:
            return 0.5;
        case FamilyKind::CoulombAlt: {
            if (L < 1e-18) return std::exp(-1.0); // I_1(2 sqrt L)/sqrt L -> 1
            return std::exp(-1.0) * specfun::bessel_i(1.0, 2.0 * std::sqrt(L)) /
                   std::sqrt(L);
        }
        default:
            throw std::domain_error("named_density: not a named family");
    }
}

} // namespace

bool WeightFunction::closed_form_available(const MomentFamily& f) {
    if (f.kind() != FamilyKind::GeneralPower) return true;
    const int k = f.k(), l = f.l();
    const double nu = f.nu();
    return (k == 2 && l == 1 && near(nu, 0.0)) ||
           (k == 3 && l == 1 && (near(nu, 0.0) || near(nu, 0.5))) ||
           (k == 3 && l == 2 && near(nu, 0.0));
}

WeightFunction::WeightFunction(MomentFamily family, Backend backend)
    : family_(std::move(family)) {
    if (family_.kind() == FamilyKind::CoulombExact) atom_ = 0.5;
    if (family_.kind() == FamilyKind::CoulombAlt) atom_ = std::exp(-1.0);

    if (backend == Backend::Auto)
        backend = closed_form_available(family_) ? Backend::ClosedForm
                                                 : Backend::MellinBarnes;
    backend_ = backend;

    if (family_.kind() != FamilyKind::GeneralPower) {
        if (backend_ != Backend::ClosedForm)
            throw std::domain_error(
                "named families have closed-form densities only");
        return;
    }
    if (backend_ == Backend::ClosedForm && !closed_form_available(family_))
        throw std::domain_error(
            "no closed form for these (k, l, nu); use the mellin-barnes or "
            "convolution backend");
    const int k = family_.k(), l = family_.l();
    const double a = family_.a(), nu = family_.nu();
    pref_const_ = std::exp(a) * std::sqrt(double(k)) *
                  std::pow(double(l), 0.5 - nu) /
                  std::pow(2.0 * M_PI, 0.5 * double(k - l));
    arg_const_ = std::pow(a, k) * std::pow(double(l), l) / std::pow(double(k), k);
    if (backend_ == Backend::MellinBarnes)
        mb_ = std::make_shared<meijer::MellinBarnesEvaluator>(
            meijer::delta_list(l, nu), meijer::delta_list(k, 0.0));
}

double WeightFunction::density_log(double L) const {
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::domain_error("density_log: requires L > 0");
    if (family_.kind() != FamilyKind::GeneralPower)
        return named_density(family_, L);
    if (backend_ == Backend::ClosedForm)
        return closed_power_density(family_.a(), family_.nu(), family_.k(),
                                    family_.l(), L);

    const double pref = pref_const_ * std::pow(L, family_.nu() - 1.0);
    const double z = arg_const_ / std::pow(L, family_.l());
    if (backend_ == Backend::MellinBarnes) {
        // absolute floor keeps the far flanks (where G underflows against
        // the contour's oscillation noise) from demanding impossible
        // relative accuracy
        const double floor = 1e-16 / std::max(pref, 1.0);
        return pref * mb_->eval(z, 1e-10, floor);
    }
    return pref * meijer::eval_convolution(family_.k(), std::max(family_.l(), 0),
                                           family_.nu(), z);
}

double WeightFunction::density(double y) const {
    if (!(y > 0.0) || !(y < 1.0))
        throw std::domain_error("density: requires 0 < y < 1");
    return density_log(-std::log(y));
}

double weight_general(double a, double nu, int k, int l, double y,
                      Backend backend, bool allow_negative_nu) {
    WeightFunction wf(MomentFamily::general_power(a, nu, k, l, allow_negative_nu),
                      backend);
    return wf.density(y);
}

double weight_named(const MomentFamily& family, double y) {
    if (family.kind() == FamilyKind::GeneralPower)
        throw std::domain_error("weight_named: use weight_general for power families");
    if (!(y > 0.0) || !(y < 1.0))
        throw std::domain_error("weight_named: requires 0 < y < 1");
    return named_density(family, -std::log(y));
}

PositivityReport positivity_scan(const WeightFunction& wf, std::size_t grid_size) {
    if (grid_size < 1000)
        throw std::domain_error("positivity_scan: requires grid_size >= 1000");
    PositivityReport rep;
    rep.samples = grid_size;
    const double L_lo = 1e-6, L_hi = 60.0;
    const double step = std::log(L_hi / L_lo) / double(grid_size - 1);
    rep.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double L = L_lo * std::exp(step * double(i));
        const double v = wf.density_log(L);
        if (v < rep.min_value) {
            rep.min_value = v;
            rep.min_L = L;
            rep.min_y = std::exp(-L);
        }
    }
    rep.pass = rep.min_value >= -1e-12;
    return rep;
}

std::array<WeightFunction, 2> figure_weights(int figure_id) {
    switch (figure_id) {
        case 1:
            return {WeightFunction(MomentFamily::general_power(1, 0.0, 3, 1)),
                    WeightFunction(MomentFamily::general_power(1, 0.5, 3, 1))};
        case 2:
            return {WeightFunction(MomentFamily::general_power(1, 0.0, 3, 2)),
                    WeightFunction(MomentFamily::general_power(1, 0.25, 3, 2),
                                   Backend::MellinBarnes)};
        case 3:
            return {WeightFunction(MomentFamily::general_power(1, 0.0, 2, 1)),
                    WeightFunction(MomentFamily::bessel_k(4.0 / 3.0))};
        case 4:
            return {WeightFunction(MomentFamily::coulomb_exact()),
                    WeightFunction(MomentFamily::coulomb_alt())};
        default:
            throw std::domain_error("figure_data: figure_id must be 1..4");
    }
}

FigureData figure_data(int figure_id, std::size_t grid_size) {
    if (grid_size < 100)
        throw std::domain_error("figure_data: requires grid_size >= 100");
    auto wfs = figure_weights(figure_id);

    FigureData data;
    data.figure_id = figure_id;
    data.labels = {wfs[0].family().name(), wfs[1].family().name()};
    data.atoms = {wfs[0].atom(), wfs[1].atom()};
    data.y.reserve(grid_size);
    for (std::size_t i = 1; i <= grid_size; ++i) {
        const double y = double(i) / double(grid_size + 1);
        data.y.push_back(y);
        data.curve_one.push_back(wfs[0].density(y));
        data.curve_two.push_back(wfs[1].density(y));
    }
    return data;
}

} // namespace hcs::weights
