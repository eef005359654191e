#include "hcs/meijer.hpp"
#include "hcs/errors.hpp"
#include "hcs/quadrature.hpp"
#include "hcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hcs::meijer {

namespace {
using cplx = std::complex<double>;

cplx gamma_ratio_log(const std::vector<double>& alphas,
                     const std::vector<double>& betas, cplx s) {
    cplx lg = 0.0;
    for (double b : betas) lg += specfun::log_gamma(s + b);
    for (double a : alphas) lg -= specfun::log_gamma(s + a);
    return lg;
}

cplx gamma_ratio(const std::vector<double>& alphas,
                 const std::vector<double>& betas, cplx s) {
    const cplx lg = gamma_ratio_log(alphas, betas, s);
    if (lg.real() < -700.0) return 0.0;
    return std::exp(lg);
}

// Bound on (1/pi) \int_T^inf |Q(c + i tau)| dtau from the Stirling decay
// |Q| ~ (2 pi)^{(k-l)/2} tau^P e^{-q tau}.
struct TailModel {
    double P;     // algebraic exponent
    double q;     // exponential rate (k - l) pi / 2
    double c0;    // prefactor
    double bound(double T) const {
        if (q * T <= P + 1.0) return 1e300;
        const double frac = 1.0 - std::min(0.9, P / (q * T));
        return 4.0 * c0 * std::pow(T, P) * std::exp(-q * T) / (q * frac);
    }
};

TailModel make_tail_model(const std::vector<double>& alphas,
                          const std::vector<double>& betas, double c) {
    const double k = double(betas.size());
    const double l = double(alphas.size());
    TailModel m;
    m.P = std::accumulate(betas.begin(), betas.end(), 0.0) -
          std::accumulate(alphas.begin(), alphas.end(), 0.0) +
          (k - l) * (c - 0.5);
    m.q = (k - l) * M_PI / 2.0;
    m.c0 = std::pow(2.0 * M_PI, 0.5 * (k - l)) / M_PI;
    return m;
}

double solve_tail_height(const TailModel& m, double eps) {
    double T = std::max(4.0, (std::log(m.c0 / eps) + 4.0) / m.q);
    for (int it = 0; it < 30; ++it) {
        const double rhs = (std::log(4.0 * m.c0 / (eps * m.q)) +
                            m.P * std::log(std::max(T, 1.0))) / m.q;
        T = std::clamp(rhs, 4.0, 400.0);
    }
    while (m.bound(T) > eps && T < 400.0) T *= 1.25;
    return T;
}

} // namespace

std::vector<double> delta_list(int k, double a) {
    if (k < 1) throw std::domain_error("delta_list: k must be >= 1");
    std::vector<double> out(std::size_t(k));
    for (int i = 0; i < k; ++i) out[std::size_t(i)] = (a + double(i)) / double(k);
    return out;
}

void MeijerGSpec::validate() const {
    if (!upper_absent.empty() || !lower_absent.empty())
        throw std::domain_error(
            "MeijerGSpec: first and fourth parameter lists must be empty");
    if (lower_present.empty())
        throw std::domain_error("MeijerGSpec: needs k >= 1 lower parameters");
    if (upper_present.size() >= lower_present.size())
        throw std::domain_error("MeijerGSpec: requires k > l");
    if (!(argument > 0.0) || !std::isfinite(argument))
        throw std::domain_error("MeijerGSpec: argument must be positive");
}

MeijerGSpec MeijerGSpec::power_family(int k, int l, double nu, double z) {
    MeijerGSpec spec;
    spec.upper_present = delta_list(l, nu);
    spec.lower_present = delta_list(k, 0.0);
    spec.argument = z;
    spec.validate();
    return spec;
}

void ContourConfig::validate() const {
    if (!(abscissa > 0.0))
        throw std::domain_error("ContourConfig: abscissa must be > 0");
    if (!(half_height > 0.0))
        throw std::domain_error("ContourConfig: half_height must be > 0");
    if (nodes < 64) throw std::domain_error("ContourConfig: nodes must be >= 64");
}

namespace {

// Sum of Re[Q w e^{-i tau log z}] over a composite Gauss-Legendre grid on
// [0, T]; `qw` holds Q(c + i tau_j) * w_j / pi.
struct ContourGrid {
    std::vector<double> tau;
    std::vector<cplx> qw;

    double sum(double logz) const {
        double acc = 0.0;
        for (std::size_t j = 0; j < tau.size(); ++j) {
            const double ph = tau[j] * logz;
            acc += qw[j].real() * std::cos(ph) + qw[j].imag() * std::sin(ph);
        }
        return acc;
    }
};

ContourGrid build_grid(const std::vector<double>& alphas,
                       const std::vector<double>& betas, double c, double T,
                       int panels, int order) {
    const auto& gl = quad::gauss_legendre(order);
    ContourGrid grid;
    grid.tau.reserve(std::size_t(panels) * std::size_t(order));
    grid.qw.reserve(grid.tau.capacity());
    const double h = T / double(panels);
    for (int p = 0; p < panels; ++p) {
        const double mid = (double(p) + 0.5) * h;
        for (int i = 0; i < order; ++i) {
            const double tau = mid + 0.5 * h * gl.x[std::size_t(i)];
            const double w = 0.5 * h * gl.w[std::size_t(i)];
            const cplx q = gamma_ratio(alphas, betas, cplx(c, tau));
            if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
                throw convergence_error("mellin-barnes: non-finite gamma product");
            grid.tau.push_back(tau);
            grid.qw.push_back(q * (w / M_PI));
        }
    }
    return grid;
}

} // namespace

MBValue eval_mellin_barnes(const MeijerGSpec& spec, const ContourConfig& cfg) {
    spec.validate();
    cfg.validate();
    const double c = cfg.abscissa;
    const double T = cfg.half_height;
    const double z = spec.argument;
    const double zc = std::pow(z, -c);
    const double logz = std::log(z);

    const int order = 16;
    const int panels = std::max(4, cfg.nodes / order);
    ContourGrid fine = build_grid(spec.upper_present, spec.lower_present, c, T,
                                  panels, order);
    ContourGrid coarse = build_grid(spec.upper_present, spec.lower_present, c, T,
                                    std::max(2, panels / 2), order);

    MBValue out;
    out.value = zc * fine.sum(logz);
    out.quad_err = std::fabs(out.value - zc * coarse.sum(logz));
    const TailModel tail = make_tail_model(spec.upper_present, spec.lower_present, c);
    out.trunc_err = zc * tail.bound(T);

    if (out.trunc_err > 1e-10 * std::max(std::fabs(out.value), 1e-300))
        throw convergence_error(
            "eval_mellin_barnes: tail bound exceeds tolerance at the configured "
            "half_height");
    return out;
}

struct MellinBarnesEvaluator::Impl {
    std::vector<double> alphas, betas;
    double c;
    double T;
    TailModel tail;
    double tail_abs; // tail bound relative to z^{-c}

    mutable std::mutex mtx;
    mutable std::vector<std::unique_ptr<ContourGrid>> levels;

    static constexpr int kBasePanels = 8;
    static constexpr int kMaxLevel = 11;

    const ContourGrid& level(int m) const {
        std::lock_guard<std::mutex> lock(mtx);
        if (levels.size() <= std::size_t(m)) levels.resize(std::size_t(m) + 1);
        auto& slot = levels[std::size_t(m)];
        if (!slot)
            slot = std::make_unique<ContourGrid>(
                build_grid(alphas, betas, c, T, kBasePanels << m, 16));
        return *slot;
    }
};

MellinBarnesEvaluator::MellinBarnesEvaluator(std::vector<double> upper_present,
                                             std::vector<double> lower_present,
                                             double abscissa)
    : impl_(std::make_unique<Impl>()) {
    if (lower_present.size() <= upper_present.size())
        throw std::domain_error("MellinBarnesEvaluator: requires k > l");
    if (!(abscissa > 0.0))
        throw std::domain_error("MellinBarnesEvaluator: abscissa must be > 0");
    impl_->alphas = std::move(upper_present);
    impl_->betas = std::move(lower_present);
    impl_->c = abscissa;
    impl_->tail = make_tail_model(impl_->alphas, impl_->betas, abscissa);
    const cplx q0 = gamma_ratio(impl_->alphas, impl_->betas, cplx(abscissa, 0.0));
    const double eps = 1e-14 * std::max(1.0, std::abs(q0));
    impl_->T = solve_tail_height(impl_->tail, eps);
    impl_->tail_abs = impl_->tail.bound(impl_->T);
}

MellinBarnesEvaluator::~MellinBarnesEvaluator() = default;
MellinBarnesEvaluator::MellinBarnesEvaluator(MellinBarnesEvaluator&&) noexcept = default;

double MellinBarnesEvaluator::half_height() const { return impl_->T; }

MBValue MellinBarnesEvaluator::eval_detailed(double z, double rel_tol,
                                             double abs_floor) const {
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("MellinBarnesEvaluator: argument must be positive");
    const double logz = std::log(z);
    const double zc = std::pow(z, -impl_->c);

    // enough panels that a 16-point rule resolves the z^{-i tau} oscillation
    const double need = impl_->T * std::max(1.0, std::fabs(logz)) / 8.0;
    int m = 0;
    while ((Impl::kBasePanels << m) < need && m < Impl::kMaxLevel) ++m;

    double prev = zc * impl_->level(m).sum(logz);
    for (++m; m <= Impl::kMaxLevel; ++m) {
        const double cur = zc * impl_->level(m).sum(logz);
        const double diff = std::fabs(cur - prev);
        if (diff <= std::max(rel_tol * std::fabs(cur), abs_floor)) {
            MBValue out;
            out.value = cur;
            out.quad_err = diff;
            out.trunc_err = zc * impl_->tail_abs;
            return out;
        }
        prev = cur;
    }
    throw convergence_error(
        "MellinBarnesEvaluator: refinement budget exhausted (argument " +
        std::to_string(z) + ")");
}

double MellinBarnesEvaluator::eval(double z, double rel_tol,
                                   double abs_floor) const {
    return eval_detailed(z, rel_tol, abs_floor).value;
}

// ---------------------------------------------------------------------------
// Appendix-style nested Mellin convolution backend
// ---------------------------------------------------------------------------

namespace {

struct BetaKernel {
    double p;   // x^p
    double q;   // (1-x)^{q-1}
    double lgq; // lgamma(q)
    double operator()(double x, double omx) const {
        return std::exp(p * std::log(x) + (q - 1.0) * std::log(omx) - lgq);
    }
};

struct GammaKernel {
    double p; // x^p e^{-x}
    double operator()(double x) const {
        if (x > 700.0) return 0.0;
        return std::exp(p * std::log(x) - x);
    }
};

// evaluator of a subtree of the convolution; exactly one of the two
// callables is set
struct Ev {
    // pure-beta subtree, supported on (0,1): f(x, 1-x, tol)
    std::function<double(double, double, double)> on_unit;
    // subtree containing a gamma kernel, supported on (0,inf): f(x, tol)
    std::function<double(double, double)> on_pos;
    bool pure_beta() const { return bool(on_unit); }
};

constexpr double kChildTolFactor = 0.15;

// (chain_{0..n-1} * B_{n-1})(x): nested integrals over shrinking (x, 1)
// windows, with tanh-sinh supplying exact distances to both singular
// endpoints.
double beta_chain_eval(const std::vector<BetaKernel>& ks, std::size_t count,
                       double x, double omx, double tol) {
    const BetaKernel& last = ks[count - 1];
    if (count == 1) return last(x, omx);
    if (omx <= 0.0) return 0.0;
    auto f = [&](double t, double dlo, double dhi) {
        // dlo = t - x exactly, dhi = 1 - t exactly
        const double arg = x / t;
        const double omarg = dlo / t;
        return beta_chain_eval(ks, count - 1, arg, omarg, tol * kChildTolFactor) *
               last(t, dhi) / t;
    };
    return quad::tanh_sinh(f, x, 1.0, tol).value;
}

Ev make_beta_chain(std::vector<BetaKernel> ks) {
    Ev ev;
    ev.on_unit = [ks = std::move(ks)](double x, double omx, double tol) {
        return beta_chain_eval(ks, ks.size(), x, omx, tol);
    };
    return ev;
}

Ev make_gamma_leaf(GammaKernel k) {
    Ev ev;
    ev.on_pos = [k](double x, double) { return k(x); };
    return ev;
}

// (M * C)(x) with M on (0,inf) and C a pure-beta chain on (0,1):
//   \int_0^1 C(t) M(x/t) dt / t
Ev conv_pos_beta(Ev m, Ev chain) {
    Ev ev;
    ev.on_pos = [m = std::move(m), chain = std::move(chain)](double x, double tol) {
        auto f = [&](double t, double, double dhi) {
            if (t < x * 1e-280) return 0.0;
            return chain.on_unit(t, dhi, tol * kChildTolFactor) *
                   m.on_pos(x / t, tol * kChildTolFactor) / t;
        };
        return quad::tanh_sinh(f, 0.0, 1.0, tol).value;
    };
    return ev;
}

// (L * R)(x) with both factors on (0,inf), smooth integrand:
//   \int_0^inf L(x/t) R(t) dt / t
Ev conv_pos_pos(Ev l, Ev r) {
    Ev ev;
    ev.on_pos = [l = std::move(l), r = std::move(r)](double x, double tol) {
        const double ctol = tol * kChildTolFactor;
        auto f = [&](double t) {
            if (t <= 0.0 || t < x * 1e-280) return 0.0;
            return l.on_pos(x / t, ctol) * r.on_pos(t, ctol) / t;
        };
        double total = quad::integrate(f, 0.0, 1.0, tol, 0.0).value;
        // march outward until the increments are negligible; the right
        // factor always carries at least an exp(-c t^(1/m)) tail
        double t0 = 1.0;
        for (int block = 0; block < 400; ++block) {
            const double t1 = t0 + std::max(2.0, 0.35 * t0);
            const double inc =
                quad::integrate(f, t0, t1, tol, tol * std::fabs(total)).value;
            total += inc;
            t0 = t1;
            if (std::fabs(inc) < 0.2 * tol * std::fabs(total) && t0 > x + 4.0) break;
        }
        return total;
    };
    return ev;
}

Ev build_tree(const std::vector<BetaKernel>& betas,
              const std::vector<GammaKernel>& gammas, std::size_t b_lo,
              std::size_t b_hi, std::size_t g_lo, std::size_t g_hi) {
    const std::size_t nb = b_hi - b_lo;
    const std::size_t ng = g_hi - g_lo;
    const std::size_t total = nb + ng;
    if (ng == 0)
        return make_beta_chain({betas.begin() + long(b_lo), betas.begin() + long(b_hi)});
    if (total == 1) return make_gamma_leaf(gammas[g_lo]);

    // split in half, beta kernels kept leftmost so compact supports are
    // convolved innermost
    const std::size_t half = total / 2;
    const std::size_t b_take = std::min(nb, half);
    const std::size_t g_take = half - b_take;
    Ev left = build_tree(betas, gammas, b_lo, b_lo + b_take, g_lo, g_lo + g_take);
    Ev right = build_tree(betas, gammas, b_lo + b_take, b_hi, g_lo + g_take, g_hi);

    if (left.pure_beta()) return conv_pos_beta(std::move(right), std::move(left));
    if (right.pure_beta()) return conv_pos_beta(std::move(left), std::move(right));
    return conv_pos_pos(std::move(left), std::move(right));
}

} // namespace

double eval_convolution(int k, int l, double nu, double z, double rel_tol) {
    if (k < 1 || l < 0 || k <= l)
        throw std::domain_error("eval_convolution: requires k > l >= 0");
    if (nu < 0.0)
        throw std::domain_error(
            "eval_convolution: nu < 0 invalidates the positive-kernel construction");
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("eval_convolution: argument must be positive");

    std::vector<BetaKernel> betas;
    for (int j = 0; j < l; ++j) {
        const double q = (nu + double(j) * double(k - l) / double(k)) / double(l);
        if (q == 0.0) continue; // Gamma(s+0)/Gamma(s+0): identity kernel
        betas.push_back({double(j) / double(k), q, std::lgamma(q)});
    }
    std::vector<GammaKernel> gammas;
    for (int j = l; j < k; ++j) gammas.push_back({double(j) / double(k)});

    if (betas.empty() && gammas.size() == 1)
        return gammas[0](z); // no convolution at all

    Ev root = build_tree(betas, gammas, 0, betas.size(), 0, gammas.size());
    if (root.pure_beta()) {
        if (!(z < 1.0)) return 0.0;
        return root.on_unit(z, 1.0 - z, 0.5 * rel_tol);
    }
    return root.on_pos(z, 0.5 * rel_tol);
}

} // namespace hcs::meijer
