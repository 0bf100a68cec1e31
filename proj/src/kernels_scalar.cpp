#include "nonclass/kernels.hpp"

#include <algorithm>

namespace nonclass::kernels::scalar {

void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = a + i * k;
        cplx* crow = c + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const cplx av = arow[l];
            if (av.real() == 0.0 && av.imag() == 0.0) continue;
            const cplx* brow = b + l * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

double frob_sq(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = a[i].real() - b[i].real();
        const double di = a[i].imag() - b[i].imag();
        s += dr * dr + di * di;
    }
    return s;
}

void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
    const cplx ms = -std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = c * xi + s * yi;
        y[i] = ms * xi + c * yi;
    }
}

void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

} // namespace nonclass::kernels::scalar
