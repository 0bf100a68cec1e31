#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "nonclass/kernels.hpp"
#include "nonclass/rng.hpp"

using namespace nonclass;
using kernels::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, Rng& rng) {
    std::vector<cplx> v(n);
    for (cplx& x : v) x = rng.complex_normal();
    return v;
}

// plain triple loop, independent of the library gemm paths
std::vector<cplx> naive_gemm(const std::vector<cplx>& a, const std::vector<cplx>& b,
                             std::size_t m, std::size_t k, std::size_t n) {
    std::vector<cplx> c(m * n, cplx(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < k; ++l) c[i * n + j] += a[i * k + l] * b[l * n + j];
    return c;
}

} // namespace

TEST_CASE("scalar gemm matches a naive reference") {
    Rng rng(11);
    for (auto [m, k, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 1, 1},
                           {2, 3, 4},
                           {5, 5, 5},
                           {7, 2, 9},
                           {16, 16, 16},
                           {17, 31, 13}}) {
        const auto a = random_vec(m * k, rng);
        const auto b = random_vec(k * n, rng);
        std::vector<cplx> c(m * n);
        kernels::scalar::gemm(c.data(), a.data(), b.data(), m, k, n);
        const auto ref = naive_gemm(a, b, m, k, n);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c[i] - ref[i]) < 1e-12);
    }
}

TEST_CASE("scalar rot is the expected unitary plane rotation") {
    Rng rng(5);
    auto x = random_vec(9, rng);
    auto y = random_vec(9, rng);
    const auto x0 = x, y0 = y;
    const double c = 0.6;
    const cplx s(0.48, -0.64);  // c^2 + |s|^2 = 1
    kernels::scalar::rot(x.data(), y.data(), x.size(), c, s);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(std::abs(x[i] - (c * x0[i] + s * y0[i])) < 1e-14);
        CHECK(std::abs(y[i] - (-std::conj(s) * x0[i] + c * y0[i])) < 1e-14);
    }
    // norm preserved
    double before = kernels::scalar::frob_sq(x0.data(), x0.size()) +
                    kernels::scalar::frob_sq(y0.data(), y0.size());
    double after = kernels::scalar::frob_sq(x.data(), x.size()) +
                   kernels::scalar::frob_sq(y.data(), y.size());
    CHECK(before == doctest::Approx(after).epsilon(1e-13));
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernels agree with scalar kernels") {
    if (!kernels::avx2::available()) {
        MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
        return;
    }
    Rng rng(23);
    for (std::size_t n : {1, 2, 3, 4, 5, 8, 15, 16, 17, 31, 32, 33, 64, 127}) {
        const auto a = random_vec(n * n, rng);
        const auto b = random_vec(n * n, rng);

        std::vector<cplx> cs(n * n), cv(n * n);
        kernels::scalar::gemm(cs.data(), a.data(), b.data(), n, n, n);
        kernels::avx2::gemm(cv.data(), a.data(), b.data(), n, n, n);
        for (std::size_t i = 0; i < cs.size(); ++i)
            CHECK(std::abs(cs[i] - cv[i]) < 1e-11 * double(n));

        CHECK(kernels::scalar::frob_sq(a.data(), a.size()) ==
              doctest::Approx(kernels::avx2::frob_sq(a.data(), a.size())).epsilon(1e-13));
        CHECK(kernels::scalar::frob_dist_sq(a.data(), b.data(), a.size()) ==
              doctest::Approx(kernels::avx2::frob_dist_sq(a.data(), b.data(), a.size()))
                  .epsilon(1e-13));

        auto xs = a, ys = b, xv = a, yv = b;
        const double c = 0.28;
        const cplx s(0.6, 0.76);
        kernels::scalar::rot(xs.data(), ys.data(), n, c, s);
        kernels::avx2::rot(xv.data(), yv.data(), n, c, s);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(xs[i] - xv[i]) < 1e-13);
            CHECK(std::abs(ys[i] - yv[i]) < 1e-13);
        }

        auto zs = a, zv = a;
        kernels::scalar::axpy(zs.data(), b.data(), n, cplx(0.3, -1.1));
        kernels::avx2::axpy(zv.data(), b.data(), n, cplx(0.3, -1.1));
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(zs[i] - zv[i]) < 1e-13);
    }
}
#endif

TEST_CASE("runtime dispatch reports a backend and can be forced to scalar") {
    const std::string active = kernels::active_backend();
    CHECK((active == "avx2" || active == "neon" || active == "scalar"));
    CHECK(kernels::set_backend("scalar"));
    CHECK(std::string(kernels::active_backend()) == "scalar");
    if (active != "scalar") {
        CHECK(kernels::set_backend(active.c_str()));
        CHECK(std::string(kernels::active_backend()) == active);
    }
    CHECK_FALSE(kernels::set_backend("avx512-nonexistent"));
}
