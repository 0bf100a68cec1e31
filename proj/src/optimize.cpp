#include "nonclass/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nonclass/rng.hpp"

namespace nonclass {

OptimResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                        std::vector<double> x0, double step, double tol,
                        std::size_t max_iter) {
    const std::size_t n = x0.size();
    OptimResult out;
    if (n == 0) {
        out.x = {};
        out.value = f(x0);
        out.residual = 0.0;
        return out;
    }

    // simplex: n+1 points
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    std::vector<std::size_t> order(n + 1);

    std::size_t iter = 0;
    for (; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t(0));
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        {
            std::vector<std::vector<double>> p2(n + 1);
            std::vector<double> v2(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                p2[i] = std::move(pts[order[i]]);
                v2[i] = vals[order[i]];
            }
            pts = std::move(p2);
            vals = std::move(v2);
        }
        if (vals[n] - vals[0] <= tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / double(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = centroid[k] + t * (centroid[k] - pts[n][k]);
            return p;
        };

        std::vector<double> xr = blend(alpha);
        const double fr = f(xr);
        if (fr < vals[0]) {
            std::vector<double> xe = blend(gamma);
            const double fe = f(xe);
            if (fe < fr) {
                pts[n] = std::move(xe);
                vals[n] = fe;
            } else {
                pts[n] = std::move(xr);
                vals[n] = fr;
            }
            continue;
        }
        if (fr < vals[n - 1]) {
            pts[n] = std::move(xr);
            vals[n] = fr;
            continue;
        }
        std::vector<double> xc = blend(fr < vals[n] ? rho : -rho);
        const double fc = f(xc);
        if (fc < std::min(fr, vals[n])) {
            pts[n] = std::move(xc);
            vals[n] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {  // shrink
            for (std::size_t k = 0; k < n; ++k)
                pts[i][k] = pts[0][k] + sigma * (pts[i][k] - pts[0][k]);
            vals[i] = f(pts[i]);
        }
    }

    std::size_t best = 0;
    double worst = vals[0];
    for (std::size_t i = 1; i <= n; ++i) {
        if (vals[i] < vals[best]) best = i;
        worst = std::max(worst, vals[i]);
    }
    out.x = pts[best];
    out.value = vals[best];
    out.residual = worst - vals[best];
    out.converged = out.residual <= tol;
    return out;
}

OptimResult multistart_minimize(const std::function<double(const std::vector<double>&)>& f,
                                std::size_t dim, const OptimOptions& opt, double scale) {
    const std::size_t restarts = std::max<std::size_t>(1, opt.restarts);
    const std::size_t max_iter =
        opt.max_iter ? opt.max_iter : 300 + 200 * dim;

    OptimResult best;
    double lo = 0.0, hi = 0.0;

    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<double> x0(dim, 0.0);
        if (r > 0) {
            Rng rng(derive_seed(opt.seed, r));
            for (double& v : x0) v = (2.0 * rng.uniform() - 1.0) * scale;
        }
        OptimResult res = nelder_mead(f, std::move(x0), 0.5, opt.tol, max_iter);
        if (r == 0) {
            lo = hi = res.value;
            best = std::move(res);
        } else {
            lo = std::min(lo, res.value);
            hi = std::max(hi, res.value);
            if (res.value < best.value) best = std::move(res);
        }
    }
    best.restarts = restarts;
    best.dispersion = hi - lo;
    return best;
}

} // namespace nonclass
