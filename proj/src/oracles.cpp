#include "nonclass/oracles.hpp"

#include <cmath>

namespace nonclass {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_grid(const GridSpec& g) {
    if (g.resolution < 8) throw std::domain_error("GridSpec: resolution must be >= 8");
}

// Direct conditional entropy for a qubit measurement along (theta, phi);
// written independently of the optimizer path on purpose.
double qubit_conditional_entropy(const ComplexMatrix& rho, std::size_t n,
                                 double theta, double phi) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const cplx e = std::exp(cplx(0.0, phi));
    const cplx u0[2] = {c, e * s};
    const cplx u1[2] = {-std::conj(e) * s, c};
    double total = 0.0;
    for (const cplx* u : {u0, u1}) {
        ComplexMatrix sigma(n, n);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t a2 = 0; a2 < 2; ++a2) {
                const cplx w = std::conj(u[a]) * u[a2];
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t b2 = 0; b2 < n; ++b2)
                        sigma(b, b2) += w * rho(a * n + b, a2 * n + b2);
            }
        const double p = sigma.trace().real();
        if (p <= 1e-14) continue;
        double se = 0.0;
        for (double lam : eigenvalues_hermitian(sigma, 1e-6)) {
            const double q = std::max(0.0, lam) / p;
            if (q > 0.0) se -= q * std::log2(q);
        }
        total += p * se;
    }
    return total;
}

} // namespace

double discord_grid_oracle(const DensityOperator& rho, const GridSpec& grid) {
    check_grid(grid);
    if (rho.dim_a() != 2)
        throw DimensionError("discord_grid_oracle: measured side must be a qubit");
    const std::size_t res = grid.resolution;
    const double s_a = von_neumann_entropy(partial_trace(rho, Side::B));
    const double s_rho = von_neumann_entropy(rho.matrix());

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < res; ++i) {
        const double theta = kPi * double(i) / double(res - 1);  // inclusive endpoints
        for (std::size_t j = 0; j < res; ++j) {
            const double phi = 2.0 * kPi * double(j) / double(res);
            best = std::min(best,
                            qubit_conditional_entropy(rho.matrix(), rho.dim_b(), theta, phi));
        }
    }
    return s_a - s_rho + best;
}

double lnu_grid_oracle(const DensityOperator& rho, const GridSpec& grid) {
    check_grid(grid);
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    if (m > 4) throw DimensionError("lnu_grid_oracle: reduced side dimension must be <= 4");

    const Spectrum sa = eig_hermitian(partial_trace(rho, Side::B));
    const auto clusters = degeneracy_clusters(sa.eigenvalues);

    // grid dimensions: one phase per cluster beyond the first (global phase
    // dropped) plus, for a single 2-cluster, the SU(2) triple (phi, chi, th)
    std::size_t two_clusters = 0;
    for (std::size_t k : clusters) {
        if (k == 2) ++two_clusters;
        if (k > 2)
            throw DimensionError("lnu_grid_oracle: parameter space too large (cluster > 2)");
    }
    const std::size_t dims = (clusters.size() - 1) + 3 * two_clusters;
    if (dims > 4 || two_clusters > 1)
        throw DimensionError("lnu_grid_oracle: parameter space too large");

    const std::size_t res = grid.resolution;
    const double tr2 = purity(rho);
    const ComplexMatrix eye_b = ComplexMatrix::identity(n);

    std::vector<std::size_t> idx(dims, 0);
    double best = 0.0;
    bool done = dims == 0;
    for (;;) {
        // assemble the block unitary in the eigenbasis
        ComplexMatrix b(m, m);
        std::size_t lo = 0, dim_at = 0;
        bool first_cluster = true;
        for (std::size_t k : clusters) {
            double cluster_phase = 0.0;
            if (!first_cluster)
                cluster_phase = 2.0 * kPi * double(idx[dim_at++]) / double(res);
            if (k == 1) {
                b(lo, lo) = std::exp(cplx(0.0, cluster_phase));
            } else {
                const double phi = 2.0 * kPi * double(idx[dim_at++]) / double(res);
                const double chi = 2.0 * kPi * double(idx[dim_at++]) / double(res);
                const double th = kPi * double(idx[dim_at++]) / double(res - 1);
                const cplx ph = std::exp(cplx(0.0, cluster_phase));
                b(lo, lo) = ph * std::exp(cplx(0.0, phi)) * std::cos(th);
                b(lo, lo + 1) = ph * std::exp(cplx(0.0, chi)) * std::sin(th);
                b(lo + 1, lo) = -ph * std::exp(cplx(0.0, -chi)) * std::sin(th);
                b(lo + 1, lo + 1) = ph * std::exp(cplx(0.0, -phi)) * std::cos(th);
            }
            lo += k;
            first_cluster = false;
        }
        const ComplexMatrix u = sa.eigenvectors * b * sa.eigenvectors.adjoint();
        const ComplexMatrix w = tensor(u, eye_b);
        const ComplexMatrix rho_f = w * rho.matrix() * w.adjoint();
        cplx overlap = 0.0;
        for (std::size_t r = 0; r < rho.dim(); ++r)
            for (std::size_t c = 0; c < rho.dim(); ++c)
                overlap += rho.matrix()(r, c) * rho_f(c, r);
        best = std::max(best, std::sqrt(std::max(0.0, tr2 - overlap.real())));

        if (done) break;
        // odometer over the grid
        std::size_t d = 0;
        for (; d < dims; ++d) {
            if (++idx[d] < res) break;
            idx[d] = 0;
        }
        if (d == dims) break;
    }
    return best;
}

double mid_exhaustive_check(const DensityOperator& rho) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    if (m > 8 || n > 8) throw DimensionError("mid_exhaustive_check: dims must be <= 8x8");

    const std::vector<ComplexMatrix> pa = eigenprojectors(partial_trace(rho, Side::B));
    const std::vector<ComplexMatrix> pb = eigenprojectors(partial_trace(rho, Side::A));

    ComplexMatrix dephased(m * n, m * n);
    for (const ComplexMatrix& qa : pa)
        for (const ComplexMatrix& qb : pb) {
            const ComplexMatrix t = tensor(qa, qb);
            dephased += t * rho.matrix() * t;
        }
    const ComplexMatrix pr_a = [&] {
        ComplexMatrix out(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t a2 = 0; a2 < m; ++a2) {
                cplx s = 0.0;
                for (std::size_t b = 0; b < n; ++b) s += dephased(a * n + b, a2 * n + b);
                out(a, a2) = s;
            }
        return out;
    }();
    const ComplexMatrix pr_b = [&] {
        ComplexMatrix out(n, n);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t b2 = 0; b2 < n; ++b2) {
                cplx s = 0.0;
                for (std::size_t a = 0; a < m; ++a) s += dephased(a * n + b, a * n + b2);
                out(b, b2) = s;
            }
        return out;
    }();

    const double i_rho = mutual_information(rho);
    const double i_p = von_neumann_entropy(pr_a) + von_neumann_entropy(pr_b) -
                       von_neumann_entropy(dephased);
    return i_rho - i_p;
}

} // namespace nonclass
