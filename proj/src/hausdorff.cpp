#include "hcs/hausdorff.hpp"
#include "hcs/errors.hpp"
#include "hcs/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

namespace hcs::hausdorff {

double reconstruct_moment(const weights::WeightFunction& wf, long n,
                          double rel_tol) {
    if (n < 0) throw std::domain_error("reconstruct_moment: requires n >= 0");
    const double lambda = double(n) + 1.0;
    auto f = [&](double t) { return wf.density_log(t); };
    quad::Result r = quad::laplace_decaying(f, lambda, rel_tol);
    if (r.abs_err > 10.0 * rel_tol * std::max(std::fabs(r.value) + wf.atom(), 1e-12))
        throw convergence_error(
            "reconstruct_moment: quadrature failed its error target at n=" +
            std::to_string(n));
    return r.value + wf.atom();
}

VerificationReport verify_family(const moments::MomentFamily& family, long n_max,
                                 double tol, weights::Backend backend,
                                 double quad_tol) {
    if (n_max < 0) throw std::domain_error("verify_family: requires n_max >= 0");
    if (tol < 1e-13) throw std::domain_error("verify_family: tol too small");

    weights::WeightFunction wf(family, backend);
    VerificationReport rep;
    rep.family = family.name();
    rep.backend = weights::backend_name(wf.backend());
    rep.n_max = n_max;
    rep.tolerance = tol;
    rep.rows.resize(std::size_t(n_max) + 1);

    const double qtol = std::min(quad_tol, 0.1 * tol);

    auto work = [&](long n) {
        ReportRow row;
        row.n = n;
        row.rho_exact = moments::rho(family, n);
        row.rho_quadrature = reconstruct_moment(wf, n, qtol);
        row.abs_err = std::fabs(row.rho_quadrature - row.rho_exact);
        row.rel_err = row.abs_err / std::fabs(row.rho_exact);
        rep.rows[std::size_t(n)] = row;
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        unsigned(std::min<long>(long(hw), n_max + 1));
    if (workers <= 1) {
        for (long n = 0; n <= n_max; ++n) work(n);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next{0};
        for (unsigned wi = 0; wi < workers; ++wi)
            pool.emplace_back([&] {
                for (long n = next.fetch_add(1); n <= n_max; n = next.fetch_add(1))
                    work(n);
            });
        for (auto& th : pool) th.join();
    }

    rep.max_rel_err = 0.0;
    for (const auto& row : rep.rows)
        rep.max_rel_err = std::max(rep.max_rel_err, row.rel_err);
    rep.pass = rep.max_rel_err <= tol;
    return rep;
}

void write_jsonl(const VerificationReport& report, std::ostream& os) {
    for (const auto& row : report.rows) {
        nlohmann::json j{{"n", row.n},
                         {"rho_exact", row.rho_exact},
                         {"rho_quadrature", row.rho_quadrature},
                         {"abs_err", row.abs_err},
                         {"rel_err", row.rel_err}};
        os << j.dump() << '\n';
    }
}

double kernel_laplace_transform(double a, double nu, int k, int l, double p,
                                double rel_tol) {
    if (!(a > 0.0) || l < 1 || k <= l)
        throw std::domain_error("kernel_laplace_transform: requires a > 0, k > l >= 1");
    if (!(p > 0.0)) throw std::domain_error("kernel_laplace_transform: requires p > 0");

    meijer::MellinBarnesEvaluator g(meijer::delta_list(l, nu),
                                    meijer::delta_list(k, 0.0));
    const double pref = std::sqrt(double(k)) * std::pow(double(l), 0.5 - nu) /
                        std::pow(2.0 * M_PI, 0.5 * double(k - l));
    const double zc = std::pow(a, k) * std::pow(double(l), l) / std::pow(double(k), k);
    auto kern = [&](double t) {
        const double z = zc / std::pow(t, l);
        return pref * std::pow(t, nu - 1.0) * g.eval(z, 1e-10, 1e-18);
    };
    quad::Result r = quad::laplace_decaying(kern, p, rel_tol);
    return r.value;
}

} // namespace hcs::hausdorff
