#include "nonclass/density.hpp"

#include <cmath>

namespace nonclass {

namespace {

double clamped_plogp(double p) {
    if (p < -1e-10) throw InvalidStateError("entropy: eigenvalue below -1e-10 (not PSD)");
    if (p <= 0.0) return 0.0;
    return -p * std::log2(p);
}

} // namespace

DensityOperator::DensityOperator(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat)
    : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(mat)) {
    if (dim_a_ == 0 || dim_b_ == 0 || mat_.rows() != dim_a_ * dim_b_ ||
        mat_.cols() != dim_a_ * dim_b_)
        throw DimensionError("DensityOperator: matrix size does not match dimA*dimB");
    if (!mat_.is_finite())
        throw InvalidStateError("DensityOperator: non-finite entries");
    if (!mat_.is_hermitian(1e-10))
        throw InvalidStateError("DensityOperator: hermiticity violated (||rho-rho^dag||_F > 1e-10)");
    if (std::abs(mat_.trace() - cplx(1.0)) > 1e-10)
        throw InvalidStateError("DensityOperator: unit trace violated (|Tr(rho)-1| > 1e-10)");
    const auto evals = eigenvalues_hermitian(mat_);
    if (!evals.empty() && evals.back() < -1e-10)
        throw InvalidStateError("DensityOperator: positivity violated (min eigenvalue < -1e-10)");
}

DensityOperator DensityOperator::swapped() const {
    ComplexMatrix out(dim(), dim());
    for (std::size_t a = 0; a < dim_a_; ++a)
        for (std::size_t b = 0; b < dim_b_; ++b)
            for (std::size_t a2 = 0; a2 < dim_a_; ++a2)
                for (std::size_t b2 = 0; b2 < dim_b_; ++b2)
                    out(b * dim_a_ + a, b2 * dim_a_ + a2) =
                        mat_(a * dim_b_ + b, a2 * dim_b_ + b2);
    return DensityOperator(dim_b_, dim_a_, std::move(out));
}

ComplexMatrix partial_trace(const DensityOperator& rho, Side traced) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    const ComplexMatrix& r = rho.matrix();
    if (traced == Side::B) {
        ComplexMatrix out(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t a2 = 0; a2 < m; ++a2) {
                cplx s = 0.0;
                for (std::size_t b = 0; b < n; ++b) s += r(a * n + b, a2 * n + b);
                out(a, a2) = s;
            }
        return out;
    }
    ComplexMatrix out(n, n);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
            cplx s = 0.0;
            for (std::size_t a = 0; a < m; ++a) s += r(a * n + b, a * n + b2);
            out(b, b2) = s;
        }
    return out;
}

ComplexMatrix partial_transpose(const DensityOperator& rho, Side side) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix out(m * n, m * n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t a2 = 0; a2 < m; ++a2)
                for (std::size_t b2 = 0; b2 < n; ++b2) {
                    if (side == Side::A)
                        out(a2 * n + b, a * n + b2) = r(a * n + b, a2 * n + b2);
                    else
                        out(a * n + b2, a2 * n + b) = r(a * n + b, a2 * n + b2);
                }
    return out;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols()) throw DimensionError("entropy: matrix not square");
    if (std::abs(rho.trace() - cplx(1.0)) > 1e-8)
        throw InvalidStateError("entropy: trace differs from 1");
    const auto evals = eigenvalues_hermitian(rho);
    double s = 0.0;
    for (double v : evals) s += clamped_plogp(v);
    return s;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p outside [0,1]");
    return clamped_plogp(p) + clamped_plogp(1.0 - p);
}

double purity(const DensityOperator& rho) {
    return kernels::frob_sq(rho.matrix().data(), rho.matrix().size());
}

double shannon_entropy(std::span<const double> p) {
    double s = 0.0;
    for (double v : p) s += clamped_plogp(v);
    return s;
}

} // namespace nonclass
