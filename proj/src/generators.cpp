#include "nonclass/generators.hpp"

#include <cmath>

namespace nonclass {

namespace {

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    // Tr(a b) for Hermitian a, b: sum over entries of a .* conj(b)... here
    // Tr(ab) = sum_{rc} a(r,c) b(c,r); both Hermitian so this is real.
    cplx s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * b(c, r);
    return s.real();
}

} // namespace

GeneratorSet su_generators(std::size_t dim, const ComplexMatrix& basis) {
    if (dim < 2) throw DimensionError("su_generators: dim must be >= 2");
    if (basis.rows() != dim || basis.cols() != dim)
        throw DimensionError("su_generators: basis has wrong shape");
    const ComplexMatrix gram = basis.adjoint() * basis;
    if (frobenius_distance(gram, ComplexMatrix::identity(dim)) > 1e-10)
        throw InvalidStateError("su_generators: basis columns are not orthonormal");

    GeneratorSet set;
    set.dim = dim;
    set.basis = basis;
    set.matrices.reserve(dim * dim - 1);

    auto ket = [&](std::size_t k) { return column(basis, k); };

    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = p + 1; q < dim; ++q)
            set.matrices.push_back(outer(ket(p), ket(q)) + outer(ket(q), ket(p)));
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = p + 1; q < dim; ++q) {
            ComplexMatrix v = outer(ket(p), ket(q)) * cplx(0.0, -1.0) +
                              outer(ket(q), ket(p)) * cplx(0.0, 1.0);
            set.matrices.push_back(std::move(v));
        }
    for (std::size_t r = 1; r < dim; ++r) {
        const double scale = std::sqrt(2.0 / (double(r) * double(r + 1)));
        ComplexMatrix w(dim, dim);
        for (std::size_t k = 0; k < r; ++k) w += outer(ket(k), ket(k));
        w -= outer(ket(r), ket(r)) * cplx(double(r), 0.0);
        w *= scale;
        set.matrices.push_back(std::move(w));
    }
    return set;
}

GeneratorSet su_generators(std::size_t dim) {
    return su_generators(dim, ComplexMatrix::identity(dim));
}

FanoForm fano_decompose(const DensityOperator& rho) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    const GeneratorSet ga = su_generators(m);
    const GeneratorSet gb = su_generators(n);
    const ComplexMatrix rho_a = partial_trace(rho, Side::B);
    const ComplexMatrix rho_b = partial_trace(rho, Side::A);

    FanoForm f;
    f.dim_a = m;
    f.dim_b = n;
    f.r_a.resize(ga.matrices.size());
    f.r_b.resize(gb.matrices.size());
    for (std::size_t s = 0; s < ga.matrices.size(); ++s)
        f.r_a[s] = 0.5 * double(m) * real_trace_product(rho_a, ga.matrices[s]);
    for (std::size_t t = 0; t < gb.matrices.size(); ++t)
        f.r_b[t] = 0.5 * double(n) * real_trace_product(rho_b, gb.matrices[t]);

    f.t.assign(ga.matrices.size(), std::vector<double>(gb.matrices.size(), 0.0));
    const ComplexMatrix& r = rho.matrix();
    for (std::size_t s = 0; s < ga.matrices.size(); ++s)
        for (std::size_t t = 0; t < gb.matrices.size(); ++t) {
            // Tr((sa (x) sb) rho) without forming the tensor product
            cplx acc = 0.0;
            const ComplexMatrix& sa = ga.matrices[s];
            const ComplexMatrix& sb = gb.matrices[t];
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t a2 = 0; a2 < m; ++a2) {
                    const cplx sav = sa(a, a2);
                    if (sav == cplx(0.0, 0.0)) continue;
                    for (std::size_t b = 0; b < n; ++b)
                        for (std::size_t b2 = 0; b2 < n; ++b2)
                            acc += sav * sb(b, b2) * r(a2 * n + b2, a * n + b);
                }
            f.t[s][t] = 0.25 * double(m * n) * acc.real();
        }
    return f;
}

ComplexMatrix fano_reconstruct(const FanoForm& f) {
    const std::size_t m = f.dim_a;
    const std::size_t n = f.dim_b;
    const GeneratorSet ga = su_generators(m);
    const GeneratorSet gb = su_generators(n);
    const ComplexMatrix ia = ComplexMatrix::identity(m);
    const ComplexMatrix ib = ComplexMatrix::identity(n);

    ComplexMatrix out = tensor(ia, ib);
    for (std::size_t s = 0; s < f.r_a.size(); ++s)
        out += tensor(ga.matrices[s], ib) * cplx(f.r_a[s], 0.0);
    for (std::size_t t = 0; t < f.r_b.size(); ++t)
        out += tensor(ia, gb.matrices[t]) * cplx(f.r_b[t], 0.0);
    for (std::size_t s = 0; s < f.r_a.size(); ++s)
        for (std::size_t t = 0; t < f.r_b.size(); ++t)
            if (f.t[s][t] != 0.0)
                out += tensor(ga.matrices[s], gb.matrices[t]) * cplx(f.t[s][t], 0.0);
    out *= 1.0 / double(m * n);
    return out;
}

} // namespace nonclass
