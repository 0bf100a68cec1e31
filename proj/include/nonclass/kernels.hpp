#pragma once

#include <complex>
#include <cstddef>

// Dense complex arithmetic kernels. Every entry point has a scalar reference
// implementation and, where the target CPU supports it, a SIMD variant
// (AVX2 on x86-64, NEON on aarch64). The backend is selected once at runtime;
// NONCLASS_SIMD=scalar|avx2|neon forces a choice (used by equivalence tests).

namespace nonclass::kernels {

using cplx = std::complex<double>;

// C = A * B with A (m x k), B (k x n), C (m x n), all row-major.
// C must not alias A or B.
void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n);

// sum |a_i|^2
double frob_sq(const cplx* a, std::size_t n);

// sum |a_i - b_i|^2
double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n);

// Unitary plane rotation with real cosine:
//   x <- c*x + s*y
//   y <- -conj(s)*x + c*y
// applied element-wise to two length-n vectors (the Jacobi row update).
void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s);

// y += alpha * x
void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha);

const char* active_backend();
// Force a backend by name; returns false if it is not available on this CPU.
bool set_backend(const char* name);

namespace scalar {
void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n);
double frob_sq(const cplx* a, std::size_t n);
double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n);
void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s);
void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n);
double frob_sq(const cplx* a, std::size_t n);
double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n);
void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s);
void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha);
bool available();
} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n);
double frob_sq(const cplx* a, std::size_t n);
double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n);
void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s);
void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha);
bool available();
} // namespace neon
#endif

} // namespace nonclass::kernels
