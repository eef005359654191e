#include "hcs/quadrature.hpp"
#include "hcs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace hcs::quad {

namespace {

// Kronrod 15-point extension of the 7-point Gauss rule, abscissae on [0, 1].
// Standard QUADPACK values.
constexpr double kGK15X[15] = {
    0.0042723144395936940576063989283284,
    0.025446043828620756865888097308925,
    0.067567788320115451661251881887438,
    0.12923440720030276995800022632466,
    0.20695638226615442611944217787823,
    0.29707742431130140792205907018797,
    0.3961075224960507457083735971537,
    0.5,
    0.6038924775039492542916264028463,
    0.7029225756886985365667896985542,
    0.79304361773384557388055782212177,
    0.87076559279969723004199977367534,
    0.93243221167988454833874811811256,
    0.97455395617137918762296067143325,
    0.99572768556040625043124236981384};

constexpr double kGK15W[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kG7W[15] = {
    0, 0.129484966168869693270611432679082,
    0, 0.279705391489276667901467771423780,
    0, 0.381830050505118944950369775488975,
    0, 0.417959183673469387755102040816327,
    0, 0.381830050505118944950369775488975,
    0, 0.279705391489276667901467771423780,
    0, 0.129484966168869693270611432679082, 0};

struct Panel {
    double a, b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double h = b - a;
    double sk = 0.0, sg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(a + h * kGK15X[i]);
        sk += kGK15W[i] * fx;
        sg += kG7W[i] * fx;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = sk * h;
    const double diff = std::fabs(sk - sg) * h;
    // QUADPACK-style sharpened estimate for smooth integrands
    p.err = diff;
    if (diff > 0.0 && std::fabs(p.value) > 0.0) {
        const double scaled = std::pow(200.0 * diff / std::fabs(p.value), 1.5) *
                              std::fabs(p.value);
        p.err = std::min(diff, scaled);
    }
    return p;
}

} // namespace

const GaussLegendre& gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLegendre rule;
    rule.x.resize(n);
    rule.w.resize(n);
    // Newton iteration on P_n, cos-initialization
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    auto [pos, ok] = cache.emplace(n, std::move(rule));
    (void)ok;
    return pos->second;
}

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, std::size_t max_intervals) {
    Result res;
    if (a == b) return res;

    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    res.evals = 15;
    double total = first.value;
    double total_err = first.err;
    heap.push(first);

    while (heap.size() < max_intervals) {
        const double target = std::max(abs_tol, rel_tol * std::fabs(total));
        if (total_err <= target) break;
        Panel worst = heap.top();
        if (worst.err <= 1e-3 * target / std::max<std::size_t>(heap.size(), 1) ||
            worst.b - worst.a < 1e-15 * (std::fabs(worst.a) + std::fabs(worst.b) + 1e-30))
            break;
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        res.evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    res.value = total;
    res.abs_err = total_err;
    return res;
}

Result tanh_sinh(const std::function<double(double, double, double)>& f,
                 double a, double b, double rel_tol, double abs_tol,
                 int max_level) {
    Result res;
    if (a == b) return res;
    const double half = 0.5 * (b - a);
    const double len = b - a;

    // node at transform parameter t: weight and exact endpoint distances
    auto node = [&](double t, double& x, double& da, double& db, double& w) {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double ch = std::cosh(u);
        w = half * 0.5 * M_PI * std::cosh(t) / (ch * ch);
        // 1 -/+ tanh(u) without cancellation
        if (u >= 0) {
            db = len / (std::exp(2.0 * u) + 1.0);
            da = len - db;
            x = b - db;
        } else {
            da = len / (std::exp(-2.0 * u) + 1.0);
            db = len - da;
            x = a + da;
        }
    };

    const double h0 = 1.0;
    double sum = 0.0;
    {
        double x, da, db, w;
        node(0.0, x, da, db, w);
        sum = w * f(x, da, db);
        res.evals = 1;
    }
    double prev = sum * h0;
    double integral = prev;

    for (int level = 1; level <= max_level; ++level) {
        const double h = h0 / double(1 << level);
        double add = 0.0;
        // new nodes at odd multiples of h
        const long max_j = long(8.0 / h); // |t| <= 8 bounds dist > ~1e-280
        for (long j = 1; j <= max_j; j += 2) {
            bool alive = false;
            for (int s = -1; s <= 1; s += 2) {
                double x, da, db, w;
                node(s * j * h, x, da, db, w);
                if (da <= 0.0 || db <= 0.0 || w < 1e-290) continue;
                const double fx = f(x, da, db);
                const double term = w * fx;
                add += term;
                ++res.evals;
                if (std::fabs(term) > 0.5e-16 * std::fabs(sum) || j < 8) alive = true;
            }
            if (!alive && j > 16) break;
        }
        sum += add;
        integral = sum * h;
        const double diff = std::fabs(integral - prev);
        res.abs_err = diff;
        if (level >= 3 &&
            diff <= std::max(abs_tol, rel_tol * std::fabs(integral))) {
            res.value = integral;
            return res;
        }
        prev = integral;
    }
    res.value = integral;
    return res;
}

Result laplace_decaying(const std::function<double(double)>& f, double lambda,
                        double rel_tol) {
    if (lambda <= 0.0) throw std::domain_error("laplace_decaying: lambda must be > 0");

    auto damped = [&](double t) { return std::exp(-lambda * t) * f(t); };

    // geometric scan for the support of the damped integrand
    std::vector<double> ts, gs;
    double g_max = 0.0;
    std::size_t i_max = 0;
    const double t_start = 1e-9 / lambda;
    const double t_stop = 5.0e3;
    for (double t = t_start; t <= t_stop; t *= 1.30) {
        const double g = std::fabs(damped(t));
        ts.push_back(t);
        gs.push_back(g);
        if (g > g_max) {
            g_max = g;
            i_max = ts.size() - 1;
        }
        // safely past the peak once the exponential damping dominates
        if (g_max > 0.0 && g < 1e-19 * g_max && t > ts[i_max] * 4.0) break;
    }
    Result res;
    res.evals = ts.size();
    if (g_max == 0.0) return res;

    std::size_t lo = i_max, hi = i_max;
    while (lo > 0 && gs[lo] > 1e-18 * g_max) --lo;
    while (hi + 1 < ts.size() && gs[hi] > 1e-18 * g_max) ++hi;
    if (lo > 0) --lo;          // padding
    if (hi + 1 < ts.size()) ++hi;

    const double t_hi = ts[hi];
    const bool from_zero = (lo == 0);
    const double t_lo = from_zero ? 0.0 : ts[lo];

    // crude scale for absolute-tolerance allocation
    double rough = 0.0;
    for (std::size_t j = lo; j < hi; ++j)
        rough += 0.5 * (gs[j] + gs[j + 1]) * (ts[j + 1] - ts[j]);
    const double abs_alloc = 0.25 * rel_tol * std::max(rough, g_max * (t_hi - t_lo) * 1e-3);

    double total = 0.0, err = 0.0;
    if (from_zero) {
        const double t_mid = std::min(t_hi / 4.0, std::max(ts[i_max], 1e-6 / lambda));
        Result head = tanh_sinh(
            [&](double t, double, double) { return damped(t); }, 0.0, t_mid,
            0.3 * rel_tol, abs_alloc);
        Result bulk = integrate(damped, t_mid, t_hi, 0.3 * rel_tol, abs_alloc);
        total = head.value + bulk.value;
        err = head.abs_err + bulk.abs_err;
        res.evals += head.evals + bulk.evals;
    } else {
        Result bulk = integrate(damped, t_lo, t_hi, 0.3 * rel_tol, abs_alloc);
        total = bulk.value;
        err = bulk.abs_err;
        res.evals += bulk.evals;
        // neglected head is bounded by the scan threshold
        err += 1e-18 * g_max * t_lo;
    }
    err += 1e-18 * g_max * std::max(t_hi, 1.0 / lambda); // neglected tail
    res.value = total;
    res.abs_err = err;
    return res;
}

} // namespace hcs::quad
