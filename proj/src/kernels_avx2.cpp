#if defined(__x86_64__) || defined(_M_X64)

#include "nonclass/kernels.hpp"

#include <algorithm>
#include <immintrin.h>

// Lane layout: a __m256d holds two complex doubles as [re0 im0 re1 im1].
// Complex multiply-accumulate uses the classic split
//   (ar + i*ai)(br + i*bi) = ar*[br bi] + ai*[-bi br]
// so each scalar-times-vector step is one broadcast, one permute, one sign
// flip on the real lanes, and two FMAs.

namespace nonclass::kernels::avx2 {

namespace {

inline __m256d neg_real_lanes(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set_epi64x(
        0, 0x8000000000000000LL, 0, 0x8000000000000000LL));
    return _mm256_xor_pd(v, mask);
}

} // namespace

bool available() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, cplx(0.0, 0.0));
    const std::size_t n2 = n & ~std::size_t(1);
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = a + i * k;
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t l = 0; l < k; ++l) {
            const cplx av = arow[l];
            if (av.real() == 0.0 && av.imag() == 0.0) continue;
            const __m256d ar = _mm256_set1_pd(av.real());
            const __m256d ai = _mm256_set1_pd(av.imag());
            const double* brow = reinterpret_cast<const double*>(b + l * n);
            std::size_t j = 0;
            for (; j < n2; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d bs = neg_real_lanes(_mm256_permute_pd(bv, 0x5));
                __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                cv = _mm256_fmadd_pd(ar, bv, cv);
                cv = _mm256_fmadd_pd(ai, bs, cv);
                _mm256_storeu_pd(crow + 2 * j, cv);
            }
            if (j < n) {
                cplx* ctail = c + i * n + j;
                *ctail += av * b[l * n + j];
            }
        }
    }
}

double frob_sq(const cplx* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    const std::size_t d = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= d; i += 4) {
        const __m256d v = _mm256_loadu_pd(p + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    double s = buf[0] + buf[1] + buf[2] + buf[3];
    for (; i < d; ++i) s += p[i] * p[i];
    return s;
}

double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const std::size_t d = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= d; i += 4) {
        const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    double s = buf[0] + buf[1] + buf[2] + buf[3];
    for (; i < d; ++i) {
        const double v = pa[i] - pb[i];
        s += v * v;
    }
    return s;
}

void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const std::size_t n2 = n & ~std::size_t(1);
    std::size_t j = 0;
    for (; j < n2; j += 2) {
        const __m256d xv = _mm256_loadu_pd(px + 2 * j);
        const __m256d yv = _mm256_loadu_pd(py + 2 * j);
        const __m256d xs = neg_real_lanes(_mm256_permute_pd(xv, 0x5));
        const __m256d ys = neg_real_lanes(_mm256_permute_pd(yv, 0x5));
        // x' = c*x + sr*y + si*swap(y)
        __m256d xn = _mm256_mul_pd(cv, xv);
        xn = _mm256_fmadd_pd(sr, yv, xn);
        xn = _mm256_fmadd_pd(si, ys, xn);
        // y' = c*y - sr*x + si*swap(x)   (-conj(s) = (-sr, si))
        __m256d yn = _mm256_mul_pd(cv, yv);
        yn = _mm256_fnmadd_pd(sr, xv, yn);
        yn = _mm256_fmadd_pd(si, xs, yn);
        _mm256_storeu_pd(px + 2 * j, xn);
        _mm256_storeu_pd(py + 2 * j, yn);
    }
    if (j < n) {
        const cplx xi = x[j], yi = y[j];
        x[j] = c * xi + s * yi;
        y[j] = -std::conj(s) * xi + c * yi;
    }
}

void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    const std::size_t n2 = n & ~std::size_t(1);
    std::size_t j = 0;
    for (; j < n2; j += 2) {
        const __m256d xv = _mm256_loadu_pd(px + 2 * j);
        const __m256d xs = neg_real_lanes(_mm256_permute_pd(xv, 0x5));
        __m256d yv = _mm256_loadu_pd(py + 2 * j);
        yv = _mm256_fmadd_pd(ar, xv, yv);
        yv = _mm256_fmadd_pd(ai, xs, yv);
        _mm256_storeu_pd(py + 2 * j, yv);
    }
    if (j < n) y[j] += alpha * x[j];
}

} // namespace nonclass::kernels::avx2

#endif
