#include "nonclass/measures.hpp"

#include <cmath>

namespace nonclass {

namespace {

constexpr double kPi = 3.14159265358979323846;

// rho conjugated by (V (x) I): blocks in the A eigenbasis.
ComplexMatrix basis_change_a(const ComplexMatrix& rho, const ComplexMatrix& v,
                             std::size_t dim_b) {
    const ComplexMatrix w = tensor(v, ComplexMatrix::identity(dim_b));
    return w.adjoint() * rho * w;
}

// Block views of an MN x MN matrix as an M x M grid of N x N blocks.
cplx block_trace_product(const ComplexMatrix& rho, std::size_t n,
                         std::size_t a, std::size_t a2, std::size_t c, std::size_t c2) {
    // Tr(rho[a,a2] * rho[c,c2]) where rho[x,y] is the (x,y) N x N block
    cplx s = 0.0;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t b2 = 0; b2 < n; ++b2)
            s += rho(a * n + b, a2 * n + b2) * rho(c * n + b2, c2 * n + b);
    return s;
}

// T[(a,a2),(c,c2)] = Tr(rho~[a,a2] rho~[c,c2]). With this tensor a commutant
// objective evaluation is O(M^4) instead of a full matrix conjugation:
//   Tr(rho rho_f) = sum B(a2,c) conj(B(a,c2)) T[(a,a2),(c,c2)].
std::vector<cplx> block_trace_tensor(const ComplexMatrix& rho_tilde,
                                     std::size_t m, std::size_t n) {
    std::vector<cplx> t(m * m * m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t a2 = 0; a2 < m; ++a2)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t c2 = 0; c2 < m; ++c2)
                    t[((a * m + a2) * m + c) * m + c2] =
                        block_trace_product(rho_tilde, n, a, a2, c, c2);
    return t;
}

double commutant_overlap(const std::vector<cplx>& t, const ComplexMatrix& b,
                         std::size_t m) {
    cplx s = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t a2 = 0; a2 < m; ++a2)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t c2 = 0; c2 < m; ++c2) {
                    const cplx bv = b(a2, c);
                    const cplx bw = b(a, c2);
                    if (bv == cplx(0.0, 0.0) || bw == cplx(0.0, 0.0)) continue;
                    s += bv * std::conj(bw) * t[((a * m + a2) * m + c) * m + c2];
                }
    return s.real();
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h) {
    const Spectrum s = eig_hermitian(h, 1e-8);
    const std::size_t d = h.rows();
    ComplexMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const cplx ph = std::exp(cplx(0.0, s.eigenvalues[k]));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                out(r, c) += ph * s.eigenvectors(r, k) * std::conj(s.eigenvectors(c, k));
    }
    return out;
}

// Hermitian matrix from k diagonal entries followed by re/im upper-triangle
// pairs; the parameter layout behind commutant_unitary and the general
// measurement parameterization.
ComplexMatrix hermitian_from_params(std::span<const double> p, std::size_t k) {
    ComplexMatrix h(k, k);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) h(i, i) = p[idx++];
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const double re = p[idx++];
            const double im = p[idx++];
            h(i, j) = cplx(re, im);
            h(j, i) = cplx(re, -im);
        }
    return h;
}

ComplexMatrix measurement_unitary(std::span<const double> params, std::size_t m) {
    if (m == 2) {
        const double th = params[0];
        const double ph = params[1];
        ComplexMatrix u(2, 2);
        const double c = std::cos(th / 2.0), s = std::sin(th / 2.0);
        u(0, 0) = c;
        u(1, 0) = std::exp(cplx(0.0, ph)) * s;
        u(0, 1) = -std::exp(cplx(0.0, -ph)) * s;
        u(1, 1) = c;
        return u;
    }
    return exp_i_hermitian(hermitian_from_params(params, m));
}

std::size_t measurement_param_count(std::size_t m) { return m == 2 ? 2 : m * m; }

// Conditional B states of a rank-one measurement column u on side A:
// sigma[b,b2] = sum_{a,a2} conj(u_a) rho[(a b),(a2 b2)] u_a2.
void conditional_state(const ComplexMatrix& rho, std::size_t m, std::size_t n,
                       const ComplexMatrix& u, std::size_t col, ComplexMatrix& sigma) {
    sigma = ComplexMatrix(n, n);
    for (std::size_t a = 0; a < m; ++a) {
        const cplx ua = std::conj(u(a, col));
        if (ua == cplx(0.0, 0.0)) continue;
        for (std::size_t a2 = 0; a2 < m; ++a2) {
            const cplx w = ua * u(a2, col);
            if (w == cplx(0.0, 0.0)) continue;
            for (std::size_t b = 0; b < n; ++b)
                kernels::axpy(&sigma(b, 0), &rho(a * n + b, a2 * n), n, w);
        }
    }
}

// sum_k p_k S(sigma_k / p_k) with PSD-noise clamping on the raw eigenvalues.
double conditional_entropy(const ComplexMatrix& rho, std::size_t m, std::size_t n,
                           const ComplexMatrix& u) {
    double total = 0.0;
    ComplexMatrix sigma;
    for (std::size_t k = 0; k < m; ++k) {
        conditional_state(rho, m, n, u, k, sigma);
        const double p = sigma.trace().real();
        if (p <= 1e-14) continue;
        const auto evals = eigenvalues_hermitian(sigma, 1e-6);
        double s = 0.0;
        for (double lam : evals) {
            const double q = std::max(0.0, lam) / p;
            if (q > 0.0) s -= q * std::log2(q);
        }
        total += p * s;
    }
    return total;
}

// Squared Frobenius weight of the off-diagonal A blocks after conjugating
// rho~ by a block unitary: the distance (squared) to the A-dephased state.
double offblock_sq(const ComplexMatrix& rho_tilde, std::size_t m, std::size_t n,
                   const ComplexMatrix& b) {
    const ComplexMatrix w = tensor(b, ComplexMatrix::identity(n));
    const ComplexMatrix r = w.adjoint() * rho_tilde * w;
    double s = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t a2 = 0; a2 < m; ++a2) {
            if (a == a2) continue;
            for (std::size_t bb = 0; bb < n; ++bb)
                s += kernels::frob_sq(&r(a * n + bb, a2 * n), n);
        }
    return s;
}

ComplexMatrix phase_unitary(const ComplexMatrix& v, std::span<const double> thetas) {
    // V diag(1, e^{i t1}, ...) V^dag ; thetas has dim-1 entries
    const std::size_t m = v.rows();
    ComplexMatrix u(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const cplx ph = k == 0 ? cplx(1.0, 0.0) : std::exp(cplx(0.0, thetas[k - 1]));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                u(r, c) += ph * v(r, k) * std::conj(v(c, k));
    }
    return u;
}

} // namespace

CommutantParam commutant_structure(const ComplexMatrix& reduced, double tol) {
    const Spectrum s = eig_hermitian(reduced);
    CommutantParam cp;
    cp.eigenbasis = s.eigenvectors;
    cp.blocks = degeneracy_clusters(s.eigenvalues, tol);
    cp.parameter_count = 0;
    for (std::size_t k : cp.blocks) cp.parameter_count += k * k;
    return cp;
}

ComplexMatrix commutant_unitary(const CommutantParam& cp, std::span<const double> params) {
    if (params.size() != cp.parameter_count)
        throw DimensionError("commutant_unitary: wrong parameter count");
    const std::size_t m = cp.eigenbasis.rows();
    ComplexMatrix b(m, m);
    std::size_t lo = 0, off = 0;
    for (std::size_t k : cp.blocks) {
        const ComplexMatrix blk =
            exp_i_hermitian(hermitian_from_params(params.subspan(off, k * k), k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) b(lo + r, lo + c) = blk(r, c);
        lo += k;
        off += k * k;
    }
    const ComplexMatrix& v = cp.eigenbasis;
    return v * b * v.adjoint();
}

double lnu_shift(const DensityOperator& rho, const UnitaryMatrix& u_a) {
    if (u_a.dim() != rho.dim_a())
        throw DimensionError("lnu_shift: unitary dimension does not match subsystem A");
    const ComplexMatrix rho_a = partial_trace(rho, Side::B);
    const ComplexMatrix comm = rho_a * u_a.matrix() - u_a.matrix() * rho_a;
    if (comm.frobenius_norm() > 1e-8)
        throw InvalidStateError("lnu_shift: unitary does not commute with rho_A");

    const ComplexMatrix w = tensor(u_a.matrix(), ComplexMatrix::identity(rho.dim_b()));
    const ComplexMatrix rho_f = w * rho.matrix() * w.adjoint();

    const double d_norm = frobenius_distance(rho.matrix(), rho_f) / std::sqrt(2.0);
    cplx overlap = 0.0;
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) overlap += rho.matrix()(r, c) * rho_f(c, r);
    const double tr2 = kernels::frob_sq(rho.matrix().data(), rho.matrix().size());
    // compare the squared routes: the sqrt would amplify cancellation noise
    // for near-zero shifts past any fixed tolerance
    if (std::abs(d_norm * d_norm - (tr2 - overlap.real())) > 1e-10)
        throw InvalidStateError("lnu_shift: the two routes of the shift formula disagree");
    return d_norm;
}

double lnu_bound(const DensityOperator& rho) {
    const double tr2 = purity(rho);
    return std::sqrt(std::max(0.0, 2.0 * (tr2 - 1.0 / double(rho.dim()))));
}

MeasureReport lnu_distance(const DensityOperator& rho, Side side, const OptimOptions& opt) {
    const DensityOperator w = side == Side::B ? rho.swapped() : rho;
    const std::size_t m = w.dim_a();
    const std::size_t n = w.dim_b();

    MeasureReport rep;
    rep.restarts = opt.restarts;
    if (m == 1) {
        rep.value = 0.0;
        rep.argopt = ComplexMatrix::identity(1);
        return rep;
    }

    const CommutantParam cp = commutant_structure(partial_trace(w, Side::B));
    const ComplexMatrix rho_tilde = basis_change_a(w.matrix(), cp.eigenbasis, n);
    const std::vector<cplx> tt = block_trace_tensor(rho_tilde, m, n);
    const double tr2 = purity(w);

    const bool all_singleton =
        std::all_of(cp.blocks.begin(), cp.blocks.end(), [](std::size_t k) { return k == 1; });

    ComplexMatrix best_u;
    OptimResult res;
    if (all_singleton) {
        // commutant = phases in the eigenbasis; one global phase dropped
        auto objective = [&](const std::vector<double>& th) {
            ComplexMatrix b(m, m);
            for (std::size_t k = 0; k < m; ++k)
                b(k, k) = k == 0 ? cplx(1.0, 0.0) : std::exp(cplx(0.0, th[k - 1]));
            return commutant_overlap(tt, b, m) - tr2;  // -(shift^2)
        };
        res = multistart_minimize(objective, m - 1, opt);
        best_u = phase_unitary(cp.eigenbasis, res.x);
    } else {
        auto objective = [&](const std::vector<double>& p) {
            ComplexMatrix b(m, m);
            std::size_t lo = 0, off = 0;
            for (std::size_t k : cp.blocks) {
                const ComplexMatrix blk = exp_i_hermitian(
                    hermitian_from_params(std::span(p).subspan(off, k * k), k));
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) b(lo + r, lo + c) = blk(r, c);
                lo += k;
                off += k * k;
            }
            return commutant_overlap(tt, b, m) - tr2;
        };
        res = multistart_minimize(objective, cp.parameter_count, opt);
        best_u = commutant_unitary(cp, res.x);
    }

    const UnitaryMatrix u(best_u);
    rep.value = lnu_shift(w, u);  // certified: the value of an explicit feasible unitary
    rep.residual = res.residual;
    rep.dispersion = res.dispersion;
    rep.converged = res.converged;
    rep.argopt = u.matrix();
    return rep;
}

double mutual_information(const DensityOperator& rho) {
    const double sa = von_neumann_entropy(partial_trace(rho, Side::B));
    const double sb = von_neumann_entropy(partial_trace(rho, Side::A));
    const double s = von_neumann_entropy(rho.matrix());
    return sa + sb - s;
}

MeasureReport discord(const DensityOperator& rho, Side measured, const OptimOptions& opt) {
    const DensityOperator w = measured == Side::B ? rho.swapped() : rho;
    const std::size_t m = w.dim_a();
    const std::size_t n = w.dim_b();

    const double s_a = von_neumann_entropy(partial_trace(w, Side::B));
    const double s_rho = von_neumann_entropy(w.matrix());

    auto objective = [&](const std::vector<double>& p) {
        return conditional_entropy(w.matrix(), m, n, measurement_unitary(p, m));
    };
    const OptimResult res = multistart_minimize(objective, measurement_param_count(m), opt);

    MeasureReport rep;
    rep.value = s_a - s_rho + res.value;
    rep.restarts = res.restarts;
    rep.residual = res.residual;
    rep.dispersion = res.dispersion;
    rep.converged = res.converged;
    rep.argopt = measurement_unitary(res.x, m);
    return rep;
}

bool is_zero_discord(const DensityOperator& rho, Side side, double tol,
                     const OptimOptions& opt) {
    const DensityOperator w = side == Side::B ? rho.swapped() : rho;
    const std::size_t m = w.dim_a();
    const std::size_t n = w.dim_b();
    const CommutantParam cp = commutant_structure(partial_trace(w, Side::B));
    const ComplexMatrix rho_tilde = basis_change_a(w.matrix(), cp.eigenbasis, n);

    const bool all_singleton =
        std::all_of(cp.blocks.begin(), cp.blocks.end(), [](std::size_t k) { return k == 1; });
    if (all_singleton)
        return std::sqrt(offblock_sq(rho_tilde, m, n, ComplexMatrix::identity(m))) <= tol;

    auto objective = [&](const std::vector<double>& p) {
        ComplexMatrix b(m, m);
        std::size_t lo = 0, off = 0;
        for (std::size_t k : cp.blocks) {
            const ComplexMatrix blk =
                exp_i_hermitian(hermitian_from_params(std::span(p).subspan(off, k * k), k));
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) b(lo + r, lo + c) = blk(r, c);
            lo += k;
            off += k * k;
        }
        return offblock_sq(rho_tilde, m, n, b);
    };
    const OptimResult res = multistart_minimize(objective, cp.parameter_count, opt);
    return std::sqrt(std::max(0.0, res.value)) <= tol;
}

double mid(const DensityOperator& rho) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    const Spectrum sa = eig_hermitian(partial_trace(rho, Side::B));
    const Spectrum sb = eig_hermitian(partial_trace(rho, Side::A));

    const ComplexMatrix w = tensor(sa.eigenvectors, sb.eigenvectors);
    const ComplexMatrix rot = w.adjoint() * rho.matrix() * w;

    std::vector<double> joint(m * n);
    for (std::size_t i = 0; i < m * n; ++i) joint[i] = rot(i, i).real();
    std::vector<double> marg_a(m, 0.0), marg_b(n, 0.0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            marg_a[a] += joint[a * n + b];
            marg_b[b] += joint[a * n + b];
        }

    const double s_p = shannon_entropy(joint);
    const double s_rho = shannon_entropy(eigenvalues_hermitian(rho.matrix()));
    const double s_a = shannon_entropy(sa.eigenvalues);
    const double s_b = shannon_entropy(sb.eigenvalues);

    const double via_entropy = s_p - s_rho;
    const double via_information =
        (s_a + s_b - s_rho) - (shannon_entropy(marg_a) + shannon_entropy(marg_b) - s_p);
    if (std::abs(via_entropy - via_information) > 1e-9)
        throw InvalidStateError("mid: the two defining routes disagree (reduced states moved)");
    return via_entropy;
}

DensityOperator dephase(const DensityOperator& rho,
                        const std::vector<ComplexMatrix>& proj_a,
                        const std::vector<ComplexMatrix>& proj_b) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    auto validate = [](const std::vector<ComplexMatrix>& ps, std::size_t d, const char* side) {
        if (ps.size() != d)
            throw InvalidStateError(std::string("dephase: projector set on ") + side +
                                    " is incomplete");
        ComplexMatrix sum(d, d);
        for (const ComplexMatrix& p : ps) {
            if (p.rows() != d || p.cols() != d)
                throw DimensionError("dephase: projector shape mismatch");
            if (!p.is_hermitian(1e-8))
                throw InvalidStateError("dephase: projector not Hermitian");
            if (frobenius_distance(p * p, p) > 1e-8)
                throw InvalidStateError("dephase: projector not idempotent");
            if (std::abs(p.trace() - cplx(1.0)) > 1e-8)
                throw InvalidStateError("dephase: projector is not rank one");
            sum += p;
        }
        if (frobenius_distance(sum, ComplexMatrix::identity(d)) > 1e-8)
            throw InvalidStateError(std::string("dephase: projector set on ") + side +
                                    " does not resolve the identity (non-orthogonal or incomplete)");
    };
    validate(proj_a, m, "A");
    validate(proj_b, n, "B");

    ComplexMatrix out(m * n, m * n);
    for (const ComplexMatrix& pa : proj_a)
        for (const ComplexMatrix& pb : proj_b) {
            const ComplexMatrix t = tensor(pa, pb);
            out += t * rho.matrix() * t;
        }
    // hermitize roundoff before the constructor validates
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = r; c < out.cols(); ++c) {
            const cplx v = 0.5 * (out(r, c) + std::conj(out(c, r)));
            out(r, c) = v;
            out(c, r) = std::conj(v);
        }
    return DensityOperator(m, n, std::move(out));
}

std::optional<UnitaryMatrix> discord_witness_unitary(const DensityOperator& rho,
                                                     const OptimOptions& opt) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    if (m == 1) return std::nullopt;
    const Spectrum sa = eig_hermitian(partial_trace(rho, Side::B));
    const ComplexMatrix rho_tilde = basis_change_a(rho.matrix(), sa.eigenvectors, n);
    const std::vector<cplx> tt = block_trace_tensor(rho_tilde, m, n);
    const double tr2 = purity(rho);

    auto objective = [&](const std::vector<double>& th) {
        ComplexMatrix b(m, m);
        for (std::size_t k = 0; k < m; ++k)
            b(k, k) = k == 0 ? cplx(1.0, 0.0) : std::exp(cplx(0.0, th[k - 1]));
        return commutant_overlap(tt, b, m) - tr2;
    };
    const OptimResult res = multistart_minimize(objective, m - 1, opt);
    const double shift = std::sqrt(std::max(0.0, -res.value));
    if (shift <= 1e-8) return std::nullopt;
    return UnitaryMatrix(phase_unitary(sa.eigenvectors, res.x));
}

std::vector<ComplexMatrix> eigenprojectors(const ComplexMatrix& hermitian) {
    const Spectrum s = eig_hermitian(hermitian);
    std::vector<ComplexMatrix> out;
    out.reserve(s.eigenvectors.cols());
    for (std::size_t k = 0; k < s.eigenvectors.cols(); ++k) {
        const ComplexMatrix v = column(s.eigenvectors, k);
        out.push_back(outer(v, v));
    }
    return out;
}

} // namespace nonclass
