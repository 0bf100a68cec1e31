#include "nonclass/states.hpp"

#include <cmath>

namespace nonclass {

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) g(r, c) = rng.complex_normal();
    return g;
}

// Modified Gram-Schmidt, columns in order; two passes for orthogonality.
void orthonormalize_columns(ComplexMatrix& m) {
    const std::size_t d = m.rows();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                cplx ip = 0.0;
                for (std::size_t r = 0; r < d; ++r) ip += std::conj(m(r, p)) * m(r, c);
                for (std::size_t r = 0; r < d; ++r) m(r, c) -= ip * m(r, p);
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < d; ++r) nrm += std::norm(m(r, c));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-14) throw InvalidStateError("orthonormalize: rank deficient sample");
        for (std::size_t r = 0; r < d; ++r) m(r, c) /= nrm;
    }
}

ComplexMatrix bloch_projector(double nx, double ny, double nz, int sign) {
    ComplexMatrix p(2, 2);
    const double s = sign >= 0 ? 1.0 : -1.0;
    p(0, 0) = 0.5 * (1.0 + s * nz);
    p(1, 1) = 0.5 * (1.0 - s * nz);
    p(0, 1) = 0.5 * s * cplx(nx, -ny);
    p(1, 0) = std::conj(p(0, 1));
    return p;
}

} // namespace

UnitaryMatrix::UnitaryMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols()) throw DimensionError("UnitaryMatrix: not square");
    const ComplexMatrix gram = mat_.adjoint() * mat_;
    if (frobenius_distance(gram, ComplexMatrix::identity(mat_.rows())) > 1e-10)
        throw InvalidStateError("UnitaryMatrix: ||U^dag U - I||_F > 1e-10");
}

Dqc1State::Dqc1State(std::size_t n, double alpha, UnitaryMatrix u)
    : n_(n),
      alpha_(alpha),
      u_(std::move(u)),
      tau_(0.0),
      rho_(1, 1, ComplexMatrix::identity(1)) {
    if (n_ == 0 || n_ > 20) throw DimensionError("dqc1: n out of range");
    const std::size_t nn = std::size_t(1) << n_;
    if (u_.dim() != nn) throw DimensionError("dqc1: unitary dimension is not 2^n");
    if (!(alpha_ >= 0.0 && alpha_ <= 1.0)) throw std::domain_error("dqc1: alpha outside [0,1]");

    tau_ = u_.matrix().trace() / double(nn);
    diag_.resize(nn);
    for (std::size_t j = 0; j < nn; ++j) diag_[j] = u_.matrix()(j, j);

    const double norm = 1.0 / double(2 * nn);
    ComplexMatrix m(2 * nn, 2 * nn);
    for (std::size_t j = 0; j < nn; ++j) {
        m(j, j) = norm;
        m(nn + j, nn + j) = norm;
    }
    for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t c = 0; c < nn; ++c) {
            m(r, nn + c) = alpha_ * norm * std::conj(u_.matrix()(c, r));  // alpha U^dag
            m(nn + r, c) = alpha_ * norm * u_.matrix()(r, c);             // alpha U
        }
    rho_ = DensityOperator(2, nn, std::move(m));
}

Dqc1State dqc1(std::size_t n, double alpha, UnitaryMatrix u) {
    return Dqc1State(n, alpha, std::move(u));
}

DensityOperator isotropic(double z) {
    if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("isotropic: z outside [0,1]");
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = (1.0 - z) / 4.0;
    m(0, 0) += z / 2.0;
    m(3, 3) += z / 2.0;
    m(0, 3) += z / 2.0;
    m(3, 0) += z / 2.0;
    return DensityOperator(2, 2, std::move(m));
}

DensityOperator horodecki_2x4(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("horodecki_2x4: p outside [0,1]");
    const double x = std::sqrt(std::max(0.0, 1.0 - p * p)) / 2.0;
    ComplexMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = p;
    m(4, 4) = m(7, 7) = (1.0 + p) / 2.0;
    m(0, 5) = m(5, 0) = p;
    m(1, 6) = m(6, 1) = p;
    m(2, 7) = m(7, 2) = p;
    m(4, 7) = m(7, 4) = x;
    m *= 1.0 / (1.0 + 7.0 * p);
    return DensityOperator(2, 4, std::move(m));
}

DensityOperator zero_discord_example(double b_gamma, double b_delta) {
    const double bx = std::sin(b_gamma) * std::cos(b_delta);
    const double by = std::sin(b_gamma) * std::sin(b_delta);
    const double bz = std::cos(b_gamma);
    const ComplexMatrix ap = bloch_projector(0, 0, 1, +1);
    const ComplexMatrix am = bloch_projector(0, 0, 1, -1);
    const ComplexMatrix bp = bloch_projector(bx, by, bz, +1);
    const ComplexMatrix bm = bloch_projector(bx, by, bz, -1);
    ComplexMatrix m = tensor(ap, bp) + tensor(am, bm);
    m *= 0.5;
    return DensityOperator(2, 2, std::move(m));
}

UnitaryMatrix haar_unitary(std::size_t dim, Rng& rng) {
    if (dim == 0) throw DimensionError("haar_unitary: dim must be >= 1");
    ComplexMatrix g = ginibre(dim, dim, rng);
    orthonormalize_columns(g);
    return UnitaryMatrix(std::move(g));
}

UnitaryMatrix haar_unitary(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(dim, rng);
}

DensityOperator random_density(std::size_t dim_a, std::size_t dim_b,
                               std::size_t rank, Rng& rng) {
    const std::size_t d = dim_a * dim_b;
    if (rank == 0 || rank > d) throw std::domain_error("random_density: rank outside [1, dimA*dimB]");
    const ComplexMatrix x = ginibre(d, rank, rng);
    ComplexMatrix rho = x * x.adjoint();
    // exact hermitization; the product is Hermitian only up to roundoff
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c) {
            const cplx v = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
            rho(r, c) = v;
            rho(c, r) = std::conj(v);
        }
    rho *= 1.0 / rho.trace().real();
    return DensityOperator(dim_a, dim_b, std::move(rho));
}

DensityOperator random_density(std::size_t dim_a, std::size_t dim_b,
                               std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(dim_a, dim_b, rank, rng);
}

DensityOperator pseudo_pure(std::size_t dim_a, std::size_t dim_b, double epsilon,
                            const ComplexMatrix& psi) {
    const std::size_t d = dim_a * dim_b;
    if (psi.rows() != d || psi.cols() != 1) throw DimensionError("pseudo_pure: psi has wrong shape");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::domain_error("pseudo_pure: eps outside [0,1]");
    double nrm = 0.0;
    for (std::size_t r = 0; r < d; ++r) nrm += std::norm(psi(r, 0));
    if (std::abs(nrm - 1.0) > 1e-10) throw InvalidStateError("pseudo_pure: psi is not normalized");
    ComplexMatrix m = outer(psi, psi);
    m *= epsilon;
    for (std::size_t i = 0; i < d; ++i) m(i, i) += (1.0 - epsilon) / double(d);
    return DensityOperator(dim_a, dim_b, std::move(m));
}

ComplexMatrix random_state_vector(std::size_t dim, Rng& rng) {
    ComplexMatrix v = ginibre(dim, 1, rng);
    double nrm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) nrm += std::norm(v(r, 0));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < dim; ++r) v(r, 0) /= nrm;
    return v;
}

DensityOperator random_separable(std::size_t dim_a, std::size_t dim_b,
                                 std::size_t terms, Rng& rng) {
    if (terms == 0) throw std::domain_error("random_separable: need at least one term");
    std::vector<double> w(terms);
    double tot = 0.0;
    for (double& v : w) {
        v = rng.uniform() + 1e-12;
        tot += v;
    }
    ComplexMatrix m(dim_a * dim_b, dim_a * dim_b);
    for (std::size_t k = 0; k < terms; ++k) {
        const ComplexMatrix a = random_state_vector(dim_a, rng);
        const ComplexMatrix b = random_state_vector(dim_b, rng);
        const ComplexMatrix term = tensor(outer(a, a), outer(b, b));
        for (std::size_t i = 0; i < m.size(); ++i)
            m.data()[i] += (w[k] / tot) * term.data()[i];
    }
    // hermitize away roundoff
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r; c < m.cols(); ++c) {
            const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    return DensityOperator(dim_a, dim_b, std::move(m));
}

} // namespace nonclass
