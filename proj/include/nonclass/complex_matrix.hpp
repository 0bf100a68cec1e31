#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "nonclass/errors.hpp"
#include "nonclass/kernels.hpp"

namespace nonclass {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major, value semantics. The workhorse type:
/// density matrices, unitaries and projectors are all stored as one of these.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    cplx trace() const;
    double frobenius_norm() const { return std::sqrt(kernels::frob_sq(data(), size())); }
    bool is_finite() const;
    bool is_hermitian(double tol = 1e-10) const;
    bool same_shape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F; throws DimensionError on shape mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column r of `m` as a vector-shaped matrix (rows x 1).
ComplexMatrix column(const ComplexMatrix& m, std::size_t c);

/// Outer product v w^dag of two column vectors.
ComplexMatrix outer(const ComplexMatrix& v, const ComplexMatrix& w);

} // namespace nonclass
