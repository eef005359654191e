#pragma once

#include "hcs/weights.hpp"

#include <iosfwd>
#include <vector>

namespace hcs::hausdorff {

struct ReportRow {
    long n = 0;
    double rho_exact = 0.0;
    double rho_quadrature = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

struct VerificationReport {
    std::string family;
    std::string backend;
    long n_max = 0;
    double tolerance = 0.0;
    std::vector<ReportRow> rows;
    double max_rel_err = 0.0;
    bool pass = false;
};

/// ∫_0^1 y^n W(y) dy + atom, computed in the Laplace variable t = ln(1/y):
///   ∫_0^∞ e^{-(n+1) t} W(e^{-t}) dt + atom.
double reconstruct_moment(const weights::WeightFunction& wf, long n,
                          double rel_tol = 1e-9);

/// Reconstructs rho(n) for n = 0..n_max from the family's weight function
/// and compares against the exact moments.  Rows are computed in parallel.
VerificationReport verify_family(const moments::MomentFamily& family, long n_max,
                                 double tol,
                                 weights::Backend backend = weights::Backend::Auto,
                                 double quad_tol = 1e-9);

/// One JSON object per row, newline separated.
void write_jsonl(const VerificationReport& report, std::ostream& os);

/// Laplace transform ∫_0^∞ e^{-p t} k(t) dt of the bare power-family
/// kernel
///   k(t) = sqrt(k) l^{1/2-nu} (2 pi)^{-(k-l)/2} t^{nu-1}
///          G^{k,0}_{l,k}(a^k l^l / (k^k t^l)),
/// which analytically equals p^{-nu} e^{-a p^{l/k}}.
double kernel_laplace_transform(double a, double nu, int k, int l, double p,
                                double rel_tol = 1e-8);

} // namespace hcs::hausdorff
