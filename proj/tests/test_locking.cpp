#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonclass/locking.hpp"

using namespace nonclass;

namespace {

double overlap_offset(const MubFamily& f) {
    // worst deviation of any cross-basis overlap from 1/sqrt(d)
    double worst = 0.0;
    const double target = 1.0 / std::sqrt(double(f.d));
    for (std::size_t t = 0; t < f.m; ++t)
        for (std::size_t t2 = t + 1; t2 < f.m; ++t2) {
            const ComplexMatrix ov = f.bases[t].matrix().adjoint() * f.bases[t2].matrix();
            for (std::size_t i = 0; i < f.d; ++i)
                for (std::size_t j = 0; j < f.d; ++j)
                    worst = std::max(worst, std::abs(std::abs(ov(i, j)) - target));
        }
    return worst;
}

} // namespace

TEST_CASE("mub_family: qubit triple is the Pauli eigenbases") {
    const MubFamily f = mub_family(2, 3);
    REQUIRE(f.bases.size() == 3);
    CHECK(overlap_offset(f) <= 1e-12);
    // z-basis = computational, x-basis columns (1,1)/sqrt2 and (1,-1)/sqrt2,
    // y-basis columns (1, i)/sqrt2 and (1, -i)/sqrt2
    CHECK(frobenius_distance(f.bases[0].matrix(), ComplexMatrix::identity(2)) == 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f.bases[1].matrix()(1, 1) - cplx(-r)) < 1e-15);
    CHECK(std::abs(f.bases[2].matrix()(1, 0) - cplx(0.0, r)) < 1e-15);
}

TEST_CASE("mub_family: Fourier-type basis for d=2^n, overlap 1/2^{n/2}") {
    for (std::size_t d : {2, 4, 8}) {
        const MubFamily f = mub_family(d, 2);
        CHECK(overlap_offset(f) <= 1e-9);
        // uniform magnitude columns
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                CHECK(std::abs(std::abs(f.bases[1].matrix()(r, c)) - 1.0 / std::sqrt(double(d))) <
                      1e-12);
    }
}

TEST_CASE("mub_family: complete set for d=3 and a partial set for d=5") {
    CHECK(overlap_offset(mub_family(3, 4)) <= 1e-9);
    CHECK(overlap_offset(mub_family(5, 6)) <= 1e-9);
    CHECK(overlap_offset(mub_family(7, 3)) <= 1e-9);
}

TEST_CASE("mub_family: unsupported requests throw") {
    CHECK_THROWS_AS(mub_family(4, 3), UnsupportedConstructionError);
    CHECK_THROWS_AS(mub_family(6, 2), UnsupportedConstructionError);
    CHECK_THROWS_AS(mub_family(2, 4), UnsupportedConstructionError);
    CHECK_THROWS_AS(mub_family(3, 5), UnsupportedConstructionError);
}

TEST_CASE("locking_state: spectrum, entropy, maximally mixed reductions") {
    const LockingState st = locking_state(mub_family(3, 2));
    const auto ev = eigenvalues_hermitian(st.rho.matrix());
    // md eigenvalues 1/(md), the rest zero
    const std::size_t md = 6;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (i < md) CHECK(ev[i] == doctest::Approx(1.0 / double(md)).epsilon(1e-12));
        else CHECK(std::abs(ev[i]) < 1e-12);
    }
    CHECK(von_neumann_entropy(st.rho.matrix()) ==
          doctest::Approx(std::log2(2.0) + std::log2(3.0)).epsilon(1e-10));

    ComplexMatrix ia = ComplexMatrix::identity(6);
    ia *= 1.0 / 6.0;
    CHECK(frobenius_distance(partial_trace(st.rho, Side::B), ia) < 1e-12);
    ComplexMatrix ib = ComplexMatrix::identity(3);
    ib *= 1.0 / 3.0;
    CHECK(frobenius_distance(partial_trace(st.rho, Side::A), ib) < 1e-12);
}

TEST_CASE("locking_mid: closed form across supported families") {
    CHECK(locking_mid(locking_state(mub_family(2, 2))) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(locking_mid(locking_state(mub_family(2, 3))) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(locking_mid(locking_state(mub_family(3, 3))) ==
          doctest::Approx((2.0 / 3.0) * std::log2(3.0)).epsilon(1e-9));
    CHECK(locking_mid_closed(3, 3) == doctest::Approx(1.0566416671474375).epsilon(1e-12));
    CHECK(locking_mid_closed(3, 4) == doctest::Approx(1.188721875540867).epsilon(1e-12));
    CHECK(locking_mid(locking_state(mub_family(4, 2))) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dephased locking-state spectrum matches the paper pattern") {
    for (auto [d, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}, {4, 2}}) {
        const LockingState st = locking_state(mub_family(d, m));
        const auto pa = eigenprojectors(partial_trace(st.rho, Side::B));
        const auto pb = eigenprojectors(partial_trace(st.rho, Side::A));
        const auto ev = eigenvalues_hermitian(dephase(st.rho, pa, pb).matrix());
        // d entries 1/(md), (m-1)d^2 entries 1/(md^2), d(d-1) zeros
        const double big = 1.0 / double(m * d);
        const double small = 1.0 / double(m * d * d);
        std::size_t i = 0;
        for (; i < d; ++i) CHECK(ev[i] == doctest::Approx(big).epsilon(1e-10));
        for (; i < d + (m - 1) * d * d; ++i)
            CHECK(ev[i] == doctest::Approx(small).epsilon(1e-10));
        for (; i < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-12);
        // and S(P(rho)) = log m + (2 - 1/m) log d
        CHECK(von_neumann_entropy(dephase(st.rho, pa, pb).matrix()) ==
              doctest::Approx(std::log2(double(m)) +
                              (2.0 - 1.0 / double(m)) * std::log2(double(d)))
                  .epsilon(1e-9));
    }
}

TEST_CASE("locking MID is invariant under relabeling the bases") {
    MubFamily f = mub_family(3, 3);
    const double base = locking_mid(locking_state(f));
    std::swap(f.bases[0], f.bases[2]);
    CHECK(locking_mid(locking_state(std::move(f))) == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("post_communication_mid is zero for every label") {
    for (auto [d, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 4}, {4, 2}}) {
        const LockingState st = locking_state(mub_family(d, m));
        for (std::size_t t = 0; t < m; ++t)
            CHECK(std::abs(post_communication_mid(st, t)) <= 1e-10);
        CHECK_THROWS_AS(post_communication_mid(st, m), std::out_of_range);
    }
}

TEST_CASE("locking_lnu_bound: printed form for d=2^n, purity 1/(md)") {
    const LockingState s1 = locking_state(mub_family(2, 2));
    CHECK(locking_lnu_bound(s1) == doctest::Approx(0.5).epsilon(1e-12));
    const LockingState s2 = locking_state(mub_family(4, 2));
    CHECK(locking_lnu_bound(s2) == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
    // general fallback for m != 2
    const LockingState s3 = locking_state(mub_family(3, 3));
    CHECK(locking_lnu_bound(s3) == doctest::Approx(lnu_bound(s3.rho)).epsilon(1e-12));

    for (auto [d, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 3}, {4, 2}})
        CHECK(purity(locking_state(mub_family(d, m)).rho) ==
              doctest::Approx(1.0 / double(m * d)).epsilon(1e-12));
}
