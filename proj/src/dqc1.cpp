#include "nonclass/dqc1.hpp"

#include <algorithm>
#include <cmath>

#include "nonclass/parallel.hpp"

namespace nonclass {

namespace {

constexpr double kTauTol = 1e-12;

// (1+x)log2(1+x) + (1-x)log2(1-x): the per-entry summand of the dephased
// entropy, safe at x = 1 via 0 log 0 = 0.
double g_sum(double x) {
    x = std::clamp(x, 0.0, 1.0);
    double s = (1.0 + x) * std::log2(1.0 + x);
    if (x < 1.0) s += (1.0 - x) * std::log2(1.0 - x);
    return s;
}

std::vector<double> dephased_moduli(const Dqc1State& state, double phi) {
    // d_j = (u_jj^* + e^{-2i phi} u_jj)/2
    const cplx rot = std::exp(cplx(0.0, -2.0 * phi));
    std::vector<double> out;
    out.reserve(state.diagonal().size());
    for (const cplx& u : state.diagonal()) out.push_back(std::abs(0.5 * (std::conj(u) + rot * u)));
    return out;
}

double require_phi(const Dqc1State& state) {
    if (std::abs(state.tau()) <= kTauTol)
        throw DegenerateReductionError(
            "dqc1: tau = Tr(U)/2^n vanishes, arg(tau) is undefined and the commutant is all "
            "of SU(2); use the numeric lnu_distance / mid instead");
    return std::arg(state.tau());
}

} // namespace

double dqc1_lnu_closed(const Dqc1State& state, double phi) {
    const std::size_t nn = std::size_t(1) << state.n();
    const ComplexMatrix u2 = state.unitary().matrix() * state.unitary().matrix();
    const cplx rot = std::exp(cplx(0.0, -2.0 * phi));
    const double term = (rot * u2.trace()).real() / double(nn);
    const double inner = std::max(0.0, 1.0 - term);
    return state.alpha() / std::pow(2.0, (double(state.n()) + 1.0) / 2.0) * std::sqrt(inner);
}

double dqc1_lnu_closed(const Dqc1State& state) {
    return dqc1_lnu_closed(state, require_phi(state));
}

double dqc1_mid_closed(const Dqc1State& state, double phi) {
    const std::size_t nn = std::size_t(1) << state.n();
    const double a = state.alpha();
    double sum = 0.0;
    for (double dj : dephased_moduli(state, phi)) sum += g_sum(a * dj);
    return 1.0 - binary_entropy((1.0 - a) / 2.0) - sum / double(2 * nn);
}

double dqc1_mid_closed(const Dqc1State& state) {
    const double phi = std::abs(state.tau()) <= kTauTol ? 0.0 : std::arg(state.tau());
    return dqc1_mid_closed(state, phi);
}

double dqc1_mid_asymptotic(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("dqc1_mid_asymptotic: alpha outside [0,1]");
    return 1.0 - binary_entropy((1.0 - alpha) / 2.0);
}

Spectrum dqc1_spectrum_dephased(const Dqc1State& state, double phi) {
    const std::size_t nn = std::size_t(1) << state.n();
    const double a = state.alpha();
    const double norm = 1.0 / double(2 * nn);
    const std::vector<double> mods = dephased_moduli(state, phi);

    // eigenvectors: v_pm (x) e_j with v_pm the rho_A eigenvectors and a
    // d_j-dependent phase; for the eigenvalue list only the moduli matter
    const cplx rot = std::exp(cplx(0.0, -2.0 * phi));
    struct Pair {
        double val;
        ComplexMatrix vec;
    };
    std::vector<Pair> pairs;
    pairs.reserve(2 * nn);
    for (std::size_t j = 0; j < nn; ++j) {
        const cplx dj = 0.5 * (std::conj(state.diagonal()[j]) + rot * state.diagonal()[j]);
        // block [[1, a d_j],[a d_j^*, 1]]/2^{n+1} on (|0 j>, |1 j>)
        const double m = mods[j];
        const cplx ph = m > 1e-15 ? dj / m : cplx(1.0, 0.0);
        for (int sgn = +1; sgn >= -1; sgn -= 2) {
            Pair p;
            p.val = (1.0 + sgn * a * m) * norm;
            p.vec = ComplexMatrix(2 * nn, 1);
            p.vec(j, 0) = ph * (1.0 / std::sqrt(2.0));
            p.vec(nn + j, 0) = double(sgn) / std::sqrt(2.0);
            pairs.push_back(std::move(p));
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& x, const Pair& y) { return x.val > y.val; });
    Spectrum s;
    s.eigenvalues.reserve(pairs.size());
    s.eigenvectors = ComplexMatrix(2 * nn, 2 * nn);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        s.eigenvalues.push_back(pairs[k].val);
        for (std::size_t r = 0; r < 2 * nn; ++r) s.eigenvectors(r, k) = pairs[k].vec(r, 0);
    }
    return s;
}

Spectrum dqc1_spectrum_dephased(const Dqc1State& state) {
    const double phi = std::abs(state.tau()) <= kTauTol ? 0.0 : std::arg(state.tau());
    return dqc1_spectrum_dephased(state, phi);
}

Dqc1Report dqc1_report(const Dqc1State& state) {
    Dqc1Report r;
    r.n = state.n();
    r.alpha = state.alpha();
    r.tau = state.tau();
    r.degenerate_reduction = std::abs(state.tau()) <= kTauTol;
    r.phi = r.degenerate_reduction ? 0.0 : std::arg(state.tau());
    r.lnu_closed = dqc1_lnu_closed(state, r.phi);
    r.lnu_upper = state.alpha() / std::pow(2.0, double(state.n()) / 2.0);
    r.mid_closed = dqc1_mid_closed(state, r.phi);
    r.mid_asymptotic = dqc1_mid_asymptotic(state.alpha());
    return r;
}

std::vector<Dqc1ScanRow> dqc1_scan(std::size_t n, const std::vector<double>& alphas,
                                   const std::vector<std::uint64_t>& seeds,
                                   const Dqc1ScanOptions& opt) {
    std::vector<std::pair<double, std::uint64_t>> points;
    for (double a : alphas)
        for (std::uint64_t s : seeds) points.emplace_back(a, s);

    std::vector<Dqc1ScanRow> rows(points.size());
    parallel_for(points.size(), opt.threads, [&](std::size_t i) {
        const auto [alpha, seed] = points[i];
        const Dqc1State st = dqc1(n, alpha, haar_unitary(std::size_t(1) << n, seed));
        Dqc1ScanRow& row = rows[i];
        row.alpha = alpha;
        row.seed = seed;
        const Dqc1Report rep = dqc1_report(st);
        row.mid_closed = rep.mid_closed;
        row.mid_asymptotic = rep.mid_asymptotic;
        row.lnu_closed = rep.lnu_closed;
        row.mid_numeric = mid(st.density());
        if (opt.include_discord) {
            OptimOptions oo = opt.optim;
            oo.seed = derive_seed(opt.optim.seed, i);
            row.discord_numeric = discord(st.density(), Side::A, oo).value;
        }
    });
    return rows;
}

} // namespace nonclass
