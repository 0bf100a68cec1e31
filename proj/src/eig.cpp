#include "nonclass/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nonclass {

namespace {

// Sum of squared magnitudes of the strict upper triangle.
double offdiag_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
    return s;
}

// One cyclic sweep of plane rotations; returns the rotation count applied.
// A is updated in place to J^dag A J; W accumulates J on the right but is
// stored transposed (rows of W are the columns of the accumulated V), so the
// update is a contiguous kernels::rot on two rows.
std::size_t jacobi_sweep(ComplexMatrix& a, ComplexMatrix& w, double skip_thr) {
    const std::size_t d = a.rows();
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
            const cplx apq = a(p, q);
            const double beta = std::abs(apq);
            if (beta <= skip_thr) continue;
            ++rotations;
            const cplx phase = apq / beta;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double tau = (aqq - app) / (2.0 * beta);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const cplx u = s * phase;  // J = [[c, u], [-conj(u), c]]

            // rows p,q of A:   A <- J^dag A  with (J^dag)(p,:) = c a_p - u a_q
            kernels::rot(&a(p, 0), &a(q, 0), d, c, -u);
            // columns p,q of A: A <- A J
            for (std::size_t r = 0; r < d; ++r) {
                const cplx arp = a(r, p);
                const cplx arq = a(r, q);
                a(r, p) = c * arp - std::conj(u) * arq;
                a(r, q) = u * arp + c * arq;
            }
            // clean up the rotated pivot pair
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = cplx(a(p, p).real(), 0.0);
            a(q, q) = cplx(a(q, q).real(), 0.0);
            // accumulate V <- V J on the transposed store (rows of w are V columns)
            kernels::rot(&w(p, 0), &w(q, 0), d, c, -std::conj(u));
        }
    }
    return rotations;
}

void solve_jacobi(const ComplexMatrix& input, std::vector<double>& evals,
                  ComplexMatrix* evecs, double herm_tol) {
    if (input.rows() != input.cols())
        throw InvalidStateError("eig_hermitian: matrix is not square");
    if (!input.is_finite())
        throw InvalidStateError("eig_hermitian: non-finite entries");
    if (!input.is_hermitian(herm_tol))
        throw InvalidStateError("eig_hermitian: matrix is not Hermitian within tolerance");

    const std::size_t d = input.rows();
    // Work on the symmetrized copy so roundoff in the input cannot leak
    // imaginary parts into the diagonal.
    ComplexMatrix a(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

    ComplexMatrix w = ComplexMatrix::identity(d);  // transposed eigenvector store
    const double fnorm = std::max(a.frobenius_norm(), 1e-300);
    const double target = 1e-13 * fnorm;
    const double skip_thr = 1e-18 * fnorm;

    for (int sweep = 0; sweep < 60; ++sweep) {
        if (std::sqrt(offdiag_sq(a)) <= target) break;
        if (jacobi_sweep(a, w, skip_thr) == 0) break;
    }

    evals.resize(d);
    for (std::size_t i = 0; i < d; ++i) evals[i] = a(i, i).real();

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return evals[x] > evals[y]; });

    std::vector<double> sorted(d);
    for (std::size_t i = 0; i < d; ++i) sorted[i] = evals[order[i]];
    evals = std::move(sorted);

    if (evecs) {
        ComplexMatrix v(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t r = 0; r < d; ++r) v(r, i) = w(order[i], r);
        *evecs = std::move(v);
    }
}

// Replace the columns [lo, lo+k) of v (a degenerate eigenspace) by the
// canonical basis: modified Gram-Schmidt over the projections of the
// computational basis vectors, taken in index order.
void canonicalize_cluster(ComplexMatrix& v, std::size_t lo, std::size_t k) {
    const std::size_t d = v.rows();
    // projector onto the cluster span
    ComplexMatrix proj(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            cplx s = 0.0;
            for (std::size_t j = lo; j < lo + k; ++j) s += v(r, j) * std::conj(v(c, j));
            proj(r, c) = s;
        }

    std::vector<std::vector<cplx>> basis;
    basis.reserve(k);
    for (std::size_t e = 0; e < d && basis.size() < k; ++e) {
        std::vector<cplx> cand(d);
        for (std::size_t r = 0; r < d; ++r) cand[r] = proj(r, e);
        for (const auto& b : basis) {
            cplx ip = 0.0;
            for (std::size_t r = 0; r < d; ++r) ip += std::conj(b[r]) * cand[r];
            for (std::size_t r = 0; r < d; ++r) cand[r] -= ip * b[r];
        }
        double nrm = 0.0;
        for (const cplx& x : cand) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) continue;
        for (cplx& x : cand) x /= nrm;
        basis.push_back(std::move(cand));
    }
    if (basis.size() < k) return;  // pathological projection; keep Jacobi basis
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t r = 0; r < d; ++r) v(r, lo + j) = basis[j][r];
}

void fix_phase(ComplexMatrix& v, std::size_t col) {
    const std::size_t d = v.rows();
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < d; ++r) {
        const double m = std::abs(v(r, col));
        if (m > best + 1e-12) {
            best = m;
            imax = r;
        }
    }
    if (best <= 0.0) return;
    const cplx ph = std::conj(v(imax, col)) / best;
    for (std::size_t r = 0; r < d; ++r) v(r, col) *= ph;
}

} // namespace

std::vector<std::size_t> degeneracy_clusters(const std::vector<double>& descending,
                                             double tol) {
    std::vector<std::size_t> sizes;
    std::size_t i = 0;
    while (i < descending.size()) {
        std::size_t j = i;
        while (j + 1 < descending.size() && descending[j] - descending[j + 1] <= tol) ++j;
        sizes.push_back(j - i + 1);
        i = j + 1;
    }
    return sizes;
}

Spectrum eig_hermitian(const ComplexMatrix& a, double herm_tol) {
    Spectrum s;
    solve_jacobi(a, s.eigenvalues, &s.eigenvectors, herm_tol);

    const auto clusters = degeneracy_clusters(s.eigenvalues);
    std::size_t lo = 0;
    for (std::size_t k : clusters) {
        if (k > 1) canonicalize_cluster(s.eigenvectors, lo, k);
        lo += k;
    }
    for (std::size_t c = 0; c < s.eigenvectors.cols(); ++c) fix_phase(s.eigenvectors, c);
    return s;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& a, double herm_tol) {
    std::vector<double> evals;
    solve_jacobi(a, evals, nullptr, herm_tol);
    return evals;
}

} // namespace nonclass
