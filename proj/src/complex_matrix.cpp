#include "nonclass/complex_matrix.hpp"

#include <cmath>

namespace nonclass {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_finite() const {
    for (const cplx& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    double acc = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c) {
            const cplx d = (*this)(r, c) - std::conj((*this)(c, r));
            acc += (c == r ? 1.0 : 2.0) * std::norm(d);
        }
    return std::sqrt(acc) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (!same_shape(o)) throw DimensionError("matrix add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (!same_shape(o)) throw DimensionError("matrix subtract: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix multiply: inner dimension mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    kernels::gemm(c.data(), a.data(), b.data(), a.rows(), a.cols(), b.cols());
    return c;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const cplx av = a(ra, ca);
            if (av == cplx(0.0, 0.0)) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                kernels::axpy(&out(ra * b.rows() + rb, ca * b.cols()),
                              &b(rb, 0), b.cols(), av);
        }
    return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw DimensionError("frobenius_distance: shape mismatch");
    return std::sqrt(kernels::frob_dist_sq(a.data(), b.data(), a.size()));
}

ComplexMatrix column(const ComplexMatrix& m, std::size_t c) {
    ComplexMatrix v(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) v(r, 0) = m(r, c);
    return v;
}

ComplexMatrix outer(const ComplexMatrix& v, const ComplexMatrix& w) {
    ComplexMatrix out(v.rows(), w.rows());
    for (std::size_t r = 0; r < v.rows(); ++r)
        for (std::size_t c = 0; c < w.rows(); ++c) out(r, c) = v(r, 0) * std::conj(w(c, 0));
    return out;
}

} // namespace nonclass
