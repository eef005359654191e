#pragma once

#include <memory>
#include <vector>

namespace hcs::meijer {

/// The list Delta(k, a) = a/k, (a+1)/k, ..., (a+k-1)/k.
std::vector<double> delta_list(int k, double a);

/// Parameters of a Meijer G function restricted to the G^{k,0}_{l,k}
/// shape: only the second (upper_present = alpha's) and third
/// (lower_present = beta's) lists are populated.
struct MeijerGSpec {
    std::vector<double> upper_absent;   // alpha_1..alpha_n, must stay empty
    std::vector<double> upper_present;  // alpha_{n+1}..alpha_p (length l)
    std::vector<double> lower_present;  // beta_1..beta_m       (length k)
    std::vector<double> lower_absent;   // beta_{m+1}..beta_q, must stay empty
    double argument = 1.0;

    void validate() const; // throws std::domain_error on shape violations

    /// G spec of the power-law moment family weight: upper = Delta(l, nu),
    /// lower = Delta(k, 0).
    static MeijerGSpec power_family(int k, int l, double nu, double z);
};

/// Placement of the vertical integration line for the inverse Mellin
/// transform: Re s = abscissa, |Im s| <= half_height, `nodes` quadrature
/// points on the truncated line.
struct ContourConfig {
    double abscissa = 1.0;
    double half_height = 30.0;
    int nodes = 512;

    void validate() const;
};

struct MBValue {
    double value = 0.0;
    double trunc_err = 0.0; // bound on the discarded |Im s| > T tail
    double quad_err = 0.0;  // estimate of the quadrature error on the line
};

/// One-shot Mellin-Barnes evaluation with a fixed contour.  Throws
/// hcs::convergence_error if the truncation-tail bound at the configured
/// half_height exceeds 1e-10 relative to the value.
MBValue eval_mellin_barnes(const MeijerGSpec& spec, const ContourConfig& cfg);

/// Production evaluator: fixes (alphas, betas) once, picks the contour
/// truncation from the analytic gamma-decay tail bound, and caches the
/// gamma products along the line so that evaluations at many arguments
/// reduce to short oscillatory dot products.  Thread-safe.
class MellinBarnesEvaluator {
public:
    MellinBarnesEvaluator(std::vector<double> upper_present,
                          std::vector<double> lower_present,
                          double abscissa = 1.0);
    ~MellinBarnesEvaluator();
    MellinBarnesEvaluator(MellinBarnesEvaluator&&) noexcept;

    /// Value of G^{k,0}_{l,k}(z).  Refines until the step difference is
    /// below max(rel_tol * |value|, abs_floor); throws
    /// hcs::convergence_error when the refinement budget is exhausted.
    double eval(double z, double rel_tol = 1e-10, double abs_floor = 0.0) const;

    /// Value plus error components at the automatically chosen contour.
    MBValue eval_detailed(double z, double rel_tol = 1e-10,
                          double abs_floor = 0.0) const;

    double half_height() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Appendix-style evaluation of the same G^{k,0}_{l,k} value as a nested
/// Mellin convolution of l beta-type kernels supported on (0,1) and
/// (k - l) gamma-type kernels x^{j/k} e^{-x}.  Positive by construction
/// for nu >= 0; used as the slow cross-validation backend.
double eval_convolution(int k, int l, double nu, double z,
                        double rel_tol = 1e-8);

} // namespace hcs::meijer
