#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonclass/generators.hpp"
#include "nonclass/measures.hpp"
#include "nonclass/states.hpp"

using namespace nonclass;

namespace {

ComplexMatrix bell_vec() {
    ComplexMatrix psi(4, 1);
    psi(0, 0) = psi(3, 0) = 1.0 / std::sqrt(2.0);
    return psi;
}

DensityOperator bell_density() { return DensityOperator(2, 2, outer(bell_vec(), bell_vec())); }

ComplexMatrix pauli(int k) {
    ComplexMatrix m(2, 2);
    if (k == 0) {
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
    } else if (k == 1) {
        m(0, 1) = cplx(0.0, -1.0);
        m(1, 0) = cplx(0.0, 1.0);
    } else {
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
    }
    return m;
}

// classical-classical state sum p_ij |i><i| (x) |j><j|
DensityOperator classical_classical() {
    ComplexMatrix m(4, 4);
    m(0, 0) = 0.1;
    m(1, 1) = 0.2;
    m(2, 2) = 0.3;
    m(3, 3) = 0.4;
    return DensityOperator(2, 2, m);
}

OptimOptions fast_opts() {
    OptimOptions o;
    o.restarts = 8;
    return o;
}

} // namespace

TEST_CASE("lnu_shift: identity, product states, the paper's theta family") {
    const DensityOperator rho = random_density(2, 3, 4, 21);
    CHECK(lnu_shift(rho, UnitaryMatrix(ComplexMatrix::identity(2))) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // product state: any commuting unitary gives zero shift
    Rng rng(4);
    const DensityOperator a = random_density(2, 1, 2, rng);
    const DensityOperator b = random_density(3, 1, 3, rng);
    const DensityOperator prod(2, 3, tensor(a.matrix(), b.matrix()));
    const Spectrum sa = eig_hermitian(a.matrix());
    ComplexMatrix phases(2, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const cplx ph = std::exp(cplx(0.0, 0.7 + 1.1 * double(k)));
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                phases(r, c) += ph * sa.eigenvectors(r, k) * std::conj(sa.eigenvectors(c, k));
    }
    CHECK(lnu_shift(prod, UnitaryMatrix(phases)) < 1e-9);

    // zero-discord example: Tr(rho rho_f) = cos^2(theta)/2, shift = |sin|/sqrt2
    const DensityOperator zd = zero_discord_example(0.9, 0.4);
    for (double theta : {0.0, 0.3, 1.0, 1.5707963267948966}) {
        ComplexMatrix u(2, 2);
        u(0, 0) = std::cos(theta);
        u(0, 1) = cplx(0.0, std::sin(theta));   // chi = pi/2, phi = 0 in Eq-(10) form
        u(1, 0) = cplx(0.0, std::sin(theta));
        u(1, 1) = std::cos(theta);
        CHECK(lnu_shift(zd, UnitaryMatrix(u)) ==
              doctest::Approx(std::abs(std::sin(theta)) / std::sqrt(2.0)).epsilon(1e-9));
    }

    // non-commuting unitary rejected
    ComplexMatrix nc(2, 2);
    nc(0, 0) = 1.0;
    nc(1, 1) = cplx(0.0, 1.0);
    const Dqc1State st = dqc1(2, 1.0, haar_unitary(4, 2));
    CHECK_THROWS_AS(lnu_shift(st.density(), UnitaryMatrix(nc)), InvalidStateError);
}

TEST_CASE("lnu_distance: isotropic closed form d_max = z") {
    for (double z : {0.0, 0.25, 0.5, 1.0}) {
        const MeasureReport r = lnu_distance(isotropic(z), Side::A, fast_opts());
        CHECK(r.value == doctest::Approx(z).epsilon(1e-5));
        CHECK(r.value <= lnu_bound(isotropic(z)) + 1e-9);
    }
}

TEST_CASE("lnu_distance: zero-discord example attains 1/sqrt(2); products give 0") {
    const MeasureReport r = lnu_distance(zero_discord_example(1.3, 0.2), Side::A, fast_opts());
    CHECK(r.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-5));

    Rng rng(31);
    const DensityOperator a = random_density(2, 1, 2, rng);
    const DensityOperator b = random_density(2, 1, 2, rng);
    const DensityOperator prod(2, 2, tensor(a.matrix(), b.matrix()));
    CHECK(lnu_distance(prod, Side::A, fast_opts()).value < 1e-6);

    // side B by symmetry: swap the factors and the sides
    const DensityOperator swapped_prod(2, 2, tensor(b.matrix(), a.matrix()));
    CHECK(lnu_distance(swapped_prod, Side::B, fast_opts()).value < 1e-6);
}

TEST_CASE("lnu_bound: maximally mixed, DQC1, side independence") {
    ComplexMatrix mm = ComplexMatrix::identity(6);
    mm *= 1.0 / 6.0;
    CHECK(lnu_bound(DensityOperator(2, 3, mm)) == doctest::Approx(0.0).epsilon(1e-12));

    for (std::size_t n : {1, 3}) {
        for (double alpha : {0.25, 1.0}) {
            const Dqc1State st = dqc1(n, alpha, haar_unitary(std::size_t(1) << n, 13));
            CHECK(lnu_bound(st.density()) ==
                  doctest::Approx(alpha / std::pow(2.0, double(n) / 2.0)).epsilon(1e-12));
            CHECK(lnu_bound(st.density().swapped()) ==
                  doctest::Approx(lnu_bound(st.density())).epsilon(1e-12));
        }
    }
}

TEST_CASE("mutual_information: product zero, Bell two, Horodecki p=0 zero") {
    Rng rng(41);
    const DensityOperator a = random_density(2, 1, 2, rng);
    const DensityOperator b = random_density(2, 1, 2, rng);
    CHECK(mutual_information(DensityOperator(2, 2, tensor(a.matrix(), b.matrix()))) ==
          doctest::Approx(0.0).epsilon(1e-9));

    CHECK(mutual_information(bell_density()) == doctest::Approx(2.0).epsilon(1e-10));

    // the p=0 Horodecki state is a pure *product* state in the paper's
    // layout, so all of its correlation measures vanish
    CHECK(mutual_information(horodecki_2x4(0.0)) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("discord: zero-discord example, pure states, classical-classical") {
    const MeasureReport zd = discord(zero_discord_example(0.8, 1.9), Side::A, fast_opts());
    CHECK(zd.value <= 1e-6);
    CHECK(zd.value >= -1e-8);

    // pure states: discord = entanglement entropy of the reduction
    Rng rng(52);
    for (int i = 0; i < 3; ++i) {
        const ComplexMatrix psi = random_state_vector(4, rng);
        const DensityOperator pure(2, 2, outer(psi, psi));
        const double sa = von_neumann_entropy(partial_trace(pure, Side::B));
        CHECK(discord(pure, Side::A, fast_opts()).value == doctest::Approx(sa).epsilon(1e-6));
    }
    CHECK(discord(bell_density(), Side::A, fast_opts()).value ==
          doctest::Approx(1.0).epsilon(1e-8));

    CHECK(discord(classical_classical(), Side::A, fast_opts()).value <= 1e-7);
    CHECK(discord(classical_classical(), Side::B, fast_opts()).value <= 1e-7);
}

TEST_CASE("is_zero_discord: positives and negatives") {
    CHECK(is_zero_discord(zero_discord_example(1.0, 0.5), Side::A, 1e-8, fast_opts()));
    CHECK(is_zero_discord(classical_classical(), Side::A, 1e-10));
    CHECK_FALSE(is_zero_discord(bell_density(), Side::A, 1e-6));

    const Dqc1State st = dqc1(3, 0.5, haar_unitary(8, 19));
    CHECK(discord(st.density(), Side::A, fast_opts()).value > 0.01);
    CHECK_FALSE(is_zero_discord(st.density(), Side::A, 1e-6));
}

TEST_CASE("mid: classical-classical zero, Bell one, Horodecki anchors") {
    CHECK(mid(classical_classical()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mid(bell_density()) == doctest::Approx(1.0).epsilon(1e-10));

    // paper-faithful layout: the p=0 state is pure product, dephasing leaves
    // it invariant; the p=1 state keeps its p-coherences and loses 0.75 bits
    CHECK(mid(horodecki_2x4(0.0)) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(mid(horodecki_2x4(1.0)) == doctest::Approx(0.75).epsilon(1e-9));
    // frozen scipy cross-check values
    CHECK(mid(horodecki_2x4(0.25)) == doctest::Approx(0.518672681654).epsilon(1e-9));
    CHECK(mid(horodecki_2x4(0.5)) == doctest::Approx(0.649525105464).epsilon(1e-9));
}

TEST_CASE("mid is nonnegative and the two routes agree on random states") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const DensityOperator rho = random_density(2, 3, 6, seed);
        const double m = mid(rho);  // internal 1e-9 two-route check
        CHECK(m >= -1e-9);
    }
}

TEST_CASE("dephase: diagonal states, Bell, reduced-state invariance, validation") {
    std::vector<ComplexMatrix> comp2 = {outer(column(ComplexMatrix::identity(2), 0),
                                              column(ComplexMatrix::identity(2), 0)),
                                        outer(column(ComplexMatrix::identity(2), 1),
                                              column(ComplexMatrix::identity(2), 1))};

    const DensityOperator cc = classical_classical();
    CHECK(frobenius_distance(dephase(cc, comp2, comp2).matrix(), cc.matrix()) < 1e-12);

    ComplexMatrix expect(4, 4);
    expect(0, 0) = expect(3, 3) = 0.5;
    CHECK(frobenius_distance(dephase(bell_density(), comp2, comp2).matrix(), expect) < 1e-12);

    // eigenprojector dephasing leaves the reduced states invariant
    for (std::uint64_t seed = 3; seed < 8; ++seed) {
        const DensityOperator rho = random_density(2, 4, 8, seed);
        const auto pa = eigenprojectors(partial_trace(rho, Side::B));
        const auto pb = eigenprojectors(partial_trace(rho, Side::A));
        const DensityOperator dep = dephase(rho, pa, pb);
        CHECK(frobenius_distance(partial_trace(dep, Side::B), partial_trace(rho, Side::B)) <=
              1e-9);
        CHECK(frobenius_distance(partial_trace(dep, Side::A), partial_trace(rho, Side::A)) <=
              1e-9);
    }

    // Horodecki eigenprojector dephasing reproduces the printed matrix:
    // the three p-coherences vanish, the sqrt coherence survives
    const double p = 0.3;
    const DensityOperator h = horodecki_2x4(p);
    const DensityOperator hd = dephase(h, eigenprojectors(partial_trace(h, Side::B)),
                                       eigenprojectors(partial_trace(h, Side::A)));
    ComplexMatrix printed(8, 8);
    const double x = std::sqrt(1.0 - p * p) / 2.0;
    for (std::size_t i = 0; i < 8; ++i) printed(i, i) = p;
    printed(4, 4) = printed(7, 7) = (1.0 + p) / 2.0;
    printed(4, 7) = printed(7, 4) = x;
    printed *= 1.0 / (1.0 + 7.0 * p);
    CHECK(frobenius_distance(hd.matrix(), printed) < 1e-10);

    // incomplete and non-orthogonal sets are rejected
    CHECK_THROWS_AS(dephase(cc, {comp2[0]}, comp2), InvalidStateError);
    std::vector<ComplexMatrix> skew = {comp2[0], comp2[0]};
    CHECK_THROWS_AS(dephase(cc, skew, comp2), InvalidStateError);
}

TEST_CASE("fano_decompose: maximally mixed, Bell, zero-discord outer structure") {
    ComplexMatrix mm = ComplexMatrix::identity(4);
    mm *= 0.25;
    const FanoForm f0 = fano_decompose(DensityOperator(2, 2, mm));
    for (double v : f0.r_a) CHECK(std::abs(v) < 1e-12);
    for (double v : f0.r_b) CHECK(std::abs(v) < 1e-12);
    for (const auto& row : f0.t)
        for (double v : row) CHECK(std::abs(v) < 1e-12);

    const FanoForm fb = fano_decompose(bell_density());
    CHECK(fb.t[0][0] == doctest::Approx(1.0).epsilon(1e-12));   // U12 ~ sigma_x
    CHECK(fb.t[1][1] == doctest::Approx(-1.0).epsilon(1e-12));  // V12 ~ sigma_y
    CHECK(fb.t[2][2] == doctest::Approx(1.0).epsilon(1e-12));   // W1  ~ sigma_z
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t)
            if (s != t) CHECK(std::abs(fb.t[s][t]) < 1e-12);

    // zero-discord example: T = a b^T with a = z-axis
    const double g = 0.9, d = 2.1;
    const FanoForm fz = fano_decompose(zero_discord_example(g, d));
    const double b[3] = {std::sin(g) * std::cos(d), std::sin(g) * std::sin(d), std::cos(g)};
    for (double v : fz.r_a) CHECK(std::abs(v) < 1e-12);
    for (double v : fz.r_b) CHECK(std::abs(v) < 1e-12);
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(fz.t[0][t] == doctest::Approx(0.0 * b[t]).epsilon(1e-12));
        CHECK(fz.t[1][t] == doctest::Approx(0.0 * b[t]).epsilon(1e-12));
        CHECK(fz.t[2][t] == doctest::Approx(1.0 * b[t]).epsilon(1e-12));
    }
}

TEST_CASE("fano round trip on random states, including 2x3") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const DensityOperator rho = random_density(m, n, m * n, seed);
            const ComplexMatrix back = fano_reconstruct(fano_decompose(rho));
            CHECK(frobenius_distance(back, rho.matrix()) <= 1e-9);
        }
    }
}

TEST_CASE("su_generators: Paulis at dim 2, Gell-Mann-type at dim 3, orthogonality") {
    const GeneratorSet g2 = su_generators(2);
    REQUIRE(g2.matrices.size() == 3);
    CHECK(frobenius_distance(g2.matrices[0], pauli(0)) < 1e-14);
    CHECK(frobenius_distance(g2.matrices[1], pauli(1)) < 1e-14);
    CHECK(frobenius_distance(g2.matrices[2], pauli(2)) < 1e-14);

    for (std::size_t dim : {3, 4}) {
        const GeneratorSet g = su_generators(dim);
        CHECK(g.matrices.size() == dim * dim - 1);
        for (std::size_t i = 0; i < g.matrices.size(); ++i) {
            CHECK(std::abs(g.matrices[i].trace()) <= 1e-12);
            CHECK(g.matrices[i].is_hermitian(1e-12));
            for (std::size_t j = 0; j < g.matrices.size(); ++j) {
                const cplx tr = (g.matrices[i] * g.matrices[j]).trace();
                CHECK(std::abs(tr - (i == j ? cplx(2.0) : cplx(0.0))) <= 1e-10);
            }
        }
    }

    ComplexMatrix bad = ComplexMatrix::identity(2);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(su_generators(2, bad), InvalidStateError);
}

TEST_CASE("discord_witness_unitary: DQC1 yields a witness, aligned states do not") {
    const Dqc1State st = dqc1(2, 1.0, haar_unitary(4, 6));
    const auto w = discord_witness_unitary(st.density(), fast_opts());
    REQUIRE(w.has_value());
    CHECK(lnu_shift(st.density(), *w) > 1e-4);

    CHECK_FALSE(discord_witness_unitary(zero_discord_example(0.7, 0.3), fast_opts()).has_value());
    CHECK_FALSE(discord_witness_unitary(classical_classical(), fast_opts()).has_value());
}

TEST_CASE("Eq (2) consistency on random commuting pairs") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const DensityOperator rho = random_density(2, 2, 4, seed);
        const CommutantParam cp = commutant_structure(partial_trace(rho, Side::B));
        Rng rng(seed + 1000);
        std::vector<double> params(cp.parameter_count);
        for (double& v : params) v = (2.0 * rng.uniform() - 1.0) * 3.0;
        const UnitaryMatrix u(commutant_unitary(cp, params));
        // lnu_shift validates the two Eq-(2) routes against each other to
        // 1e-10 (squared form) internally and throws on disagreement
        const double d = lnu_shift(rho, u);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0 + 1e-12);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("Theorem 1 bound holds on assorted states") {
    const OptimOptions o = fast_opts();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityOperator rho = random_density(2, 3, 6, seed);
        CHECK(lnu_distance(rho, Side::A, o).value <= lnu_bound(rho) + 1e-9);
    }
    CHECK(lnu_distance(isotropic(0.8), Side::A, o).value <= lnu_bound(isotropic(0.8)) + 1e-9);
}

TEST_CASE("MeasureReport: diagnostics are populated and argopt is feasible") {
    const MeasureReport r = lnu_distance(isotropic(0.5), Side::A, fast_opts());
    CHECK(r.restarts == 8);
    CHECK(r.residual >= 0.0);
    CHECK(r.dispersion >= 0.0);
    CHECK(r.argopt.rows() == 2);
    // argopt commutes with rho_A and reproduces the reported value
    CHECK(lnu_shift(isotropic(0.5), UnitaryMatrix(r.argopt)) ==
          doctest::Approx(r.value).epsilon(1e-12));

    const MeasureReport dr = discord(bell_density(), Side::A, fast_opts());
    const ComplexMatrix gram = dr.argopt.adjoint() * dr.argopt;
    CHECK(frobenius_distance(gram, ComplexMatrix::identity(2)) < 1e-10);
}
