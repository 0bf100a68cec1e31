#include "nonclass/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

namespace nonclass::kernels {

namespace {

struct Backend {
    const char* name;
    void (*gemm)(cplx*, const cplx*, const cplx*, std::size_t, std::size_t, std::size_t);
    double (*frob_sq)(const cplx*, std::size_t);
    double (*frob_dist_sq)(const cplx*, const cplx*, std::size_t);
    void (*rot)(cplx*, cplx*, std::size_t, double, cplx);
    void (*axpy)(cplx*, const cplx*, std::size_t, cplx);
};

constexpr Backend kScalar{"scalar", scalar::gemm, scalar::frob_sq,
                          scalar::frob_dist_sq, scalar::rot, scalar::axpy};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Backend kSimd{"avx2", avx2::gemm, avx2::frob_sq,
                        avx2::frob_dist_sq, avx2::rot, avx2::axpy};
bool simd_available() { return avx2::available(); }
#elif defined(__aarch64__)
constexpr Backend kSimd{"neon", neon::gemm, neon::frob_sq,
                        neon::frob_dist_sq, neon::rot, neon::axpy};
bool simd_available() { return neon::available(); }
#else
constexpr Backend kSimd = kScalar;
bool simd_available() { return false; }
#endif

const Backend* g_active = nullptr;
std::once_flag g_init;

void init_backend() {
    const Backend* pick = simd_available() ? &kSimd : &kScalar;
    if (const char* env = std::getenv("NONCLASS_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) pick = &kScalar;
        else if (std::strcmp(env, kSimd.name) == 0 && simd_available()) pick = &kSimd;
    }
    g_active = pick;
}

const Backend& active() {
    std::call_once(g_init, init_backend);
    return *g_active;
}

} // namespace

void gemm(cplx* c, const cplx* a, const cplx* b,
          std::size_t m, std::size_t k, std::size_t n) {
    active().gemm(c, a, b, m, k, n);
}

double frob_sq(const cplx* a, std::size_t n) { return active().frob_sq(a, n); }

double frob_dist_sq(const cplx* a, const cplx* b, std::size_t n) {
    return active().frob_dist_sq(a, b, n);
}

void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
    active().rot(x, y, n, c, s);
}

void axpy(cplx* y, const cplx* x, std::size_t n, cplx alpha) {
    active().axpy(y, x, n, alpha);
}

const char* active_backend() { return active().name; }

bool set_backend(const char* name) {
    std::call_once(g_init, init_backend);
    if (std::strcmp(name, "scalar") == 0) {
        g_active = &kScalar;
        return true;
    }
    if (std::strcmp(name, kSimd.name) == 0 && simd_available()) {
        g_active = &kSimd;
        return true;
    }
    return false;
}

} // namespace nonclass::kernels
