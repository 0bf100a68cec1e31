#if defined(__aarch64__)

#include "nonclass/kernels.hpp"

#include <algorithm>
#include <arm_neon.h>

// One complex double per float64x2_t, lanes [re im]. The imaginary-part
// contribution uses the same swap-and-negate trick as the AVX2 backend.

namespace nonclass::kernels::neon {

namespace {

inline float64x2_t swap_neg_re(float64x2_t v) {
    const float64x2_t sw = vextq_f64(v, v, 1);     // [im re]
    const float64x2_t sign = {-1.0, 1.0};
    return vmulq_f64(sw, sign);                    // [-im re]
}

} // namespace

bool available() { return true; }  // NEON is mandatory on aarch64

void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = a + i * k;
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t l = 0; l < k; ++l) {
            const cplx av = arow[l];
            if (av.real() == 0.0 && av.imag() == 0.0) continue;
            const float64x2_t ar = vdupq_n_f64(av.real());
            const float64x2_t ai = vdupq_n_f64(av.imag());
            const double* brow = reinterpret_cast<const double*>(b + l * n);
            for (std::size_t j = 0; j < n; ++j) {
                const float64x2_t bv = vld1q_f64(brow + 2 * j);
                float64x2_t cv = vld1q_f64(crow + 2 * j);
                cv = vfmaq_f64(cv, ar, bv);
                cv = vfmaq_f64(cv, ai, swap_neg_re(bv));
                vst1q_f64(crow + 2 * j, cv);
            }
        }
    }
}

double frob_sq(const cplx* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vld1q_f64(p + 2 * i);
        acc = vfmaq_f64(acc, v, v);
    }
    return vaddvq_f64(acc);
}

double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vsubq_f64(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i));
        acc = vfmaq_f64(acc, v, v);
    }
    return vaddvq_f64(acc);
}

void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
    const float64x2_t cv = vdupq_n_f64(c);
    const float64x2_t sr = vdupq_n_f64(s.real());
    const float64x2_t si = vdupq_n_f64(s.imag());
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (std::size_t j = 0; j < n; ++j) {
        const float64x2_t xv = vld1q_f64(px + 2 * j);
        const float64x2_t yv = vld1q_f64(py + 2 * j);
        float64x2_t xn = vmulq_f64(cv, xv);
        xn = vfmaq_f64(xn, sr, yv);
        xn = vfmaq_f64(xn, si, swap_neg_re(yv));
        float64x2_t yn = vmulq_f64(cv, yv);
        yn = vfmsq_f64(yn, sr, xv);
        yn = vfmaq_f64(yn, si, swap_neg_re(xv));
        vst1q_f64(px + 2 * j, xn);
        vst1q_f64(py + 2 * j, yn);
    }
}

void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha) {
    const float64x2_t ar = vdupq_n_f64(alpha.real());
    const float64x2_t ai = vdupq_n_f64(alpha.imag());
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    for (std::size_t j = 0; j < n; ++j) {
        const float64x2_t xv = vld1q_f64(px + 2 * j);
        float64x2_t yv = vld1q_f64(py + 2 * j);
        yv = vfmaq_f64(yv, ar, xv);
        yv = vfmaq_f64(yv, ai, swap_neg_re(xv));
        vst1q_f64(py + 2 * j, yv);
    }
}

} // namespace nonclass::kernels::neon

#endif
