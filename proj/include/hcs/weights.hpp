#pragma once

#include "hcs/meijer.hpp"
#include "hcs/moments.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hcs::weights {

enum class Backend { Auto, ClosedForm, MellinBarnes, Convolution };

std::string backend_name(Backend b);
Backend backend_from_name(const std::string& s);

/// The weight function solving a family's Hausdorff moment problem: an
/// absolutely continuous density on (0,1) plus an optional point mass at
/// y = 1^-.  Densities are evaluated internally in L = ln(1/y), the
/// variable every closed form is written in, which keeps y -> 1 stable.
class WeightFunction {
public:
    explicit WeightFunction(moments::MomentFamily family,
                            Backend backend = Backend::Auto);

    double density_log(double L) const; // L = ln(1/y) > 0
    double density(double y) const;     // 0 < y < 1
    double atom() const { return atom_; }
    Backend backend() const { return backend_; }
    const moments::MomentFamily& family() const { return family_; }

    /// True when a closed form exists for this family's parameters.
    static bool closed_form_available(const moments::MomentFamily& f);

private:
    moments::MomentFamily family_;
    Backend backend_ = Backend::ClosedForm;
    double atom_ = 0.0;
    double pref_const_ = 0.0; // e^a sqrt(k) l^{1/2-nu} / (2 pi)^{(k-l)/2}
    double arg_const_ = 0.0;  // a^k l^l / k^k
    std::shared_ptr<meijer::MellinBarnesEvaluator> mb_;
};

/// Density of the general power-law weight at 0 < y < 1 through the
/// requested backend.  nu < 0 requires the explicit positivity waiver.
double weight_general(double a, double nu, int k, int l, double y,
                      Backend backend = Backend::Auto,
                      bool allow_negative_nu = false);

/// Density of one of the named (non-power) families at 0 < y < 1; the
/// atom, when present, is reported by the WeightFunction record.
double weight_named(const moments::MomentFamily& family, double y);

struct PositivityReport {
    double min_value = 0.0;
    double min_y = 0.0;
    double min_L = 0.0;
    std::size_t samples = 0;
    bool pass = false;
};

/// Samples the density on a grid log-spaced in L = ln(1/y) (refined
/// toward y = 1; the y -> 0 flank is covered up to L = 60) and reports
/// the minimum.  Passes iff min >= -1e-12.  grid_size >= 1000.
PositivityReport positivity_scan(const WeightFunction& wf, std::size_t grid_size);

struct FigureData {
    int figure_id = 0;
    std::vector<double> y;
    std::vector<double> curve_one;
    std::vector<double> curve_two;
    std::array<double, 2> atoms{0.0, 0.0};
    std::array<std::string, 2> labels;
};

/// The two weight-function curves of figures 1..4 on a uniform interior
/// y-grid; point masses are reported separately in `atoms`.
FigureData figure_data(int figure_id, std::size_t grid_size);

/// The weight functions behind a figure's two curves.
std::array<WeightFunction, 2> figure_weights(int figure_id);

} // namespace hcs::weights
