#include "nonclass/locking.hpp"

#include <cmath>

namespace nonclass {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_prime(std::size_t d) {
    if (d < 2) return false;
    for (std::size_t f = 2; f * f <= d; ++f)
        if (d % f == 0) return false;
    return true;
}

bool power_of_two(std::size_t d) { return d >= 2 && (d & (d - 1)) == 0; }

ComplexMatrix qubit_basis(int which) {
    ComplexMatrix b(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (which) {
        case 0:  // sigma_z eigenbasis
            b(0, 0) = 1.0;
            b(1, 1) = 1.0;
            break;
        case 1:  // sigma_x eigenbasis
            b(0, 0) = r; b(1, 0) = r;
            b(0, 1) = r; b(1, 1) = -r;
            break;
        default:  // sigma_y eigenbasis
            b(0, 0) = r; b(1, 0) = cplx(0.0, r);
            b(0, 1) = r; b(1, 1) = cplx(0.0, -r);
            break;
    }
    return b;
}

// Column k of basis t for odd prime d: <j|b_k^t> = w^(t j^2 + j k)/sqrt(d).
ComplexMatrix prime_basis(std::size_t d, std::size_t t) {
    ComplexMatrix b(d, d);
    const double r = 1.0 / std::sqrt(double(d));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t e = (t * j * j + j * k) % d;
            b(j, k) = r * std::exp(cplx(0.0, 2.0 * kPi * double(e) / double(d)));
        }
    return b;
}

ComplexMatrix hadamard_power(std::size_t n) {
    ComplexMatrix h(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    h(0, 0) = r; h(0, 1) = r;
    h(1, 0) = r; h(1, 1) = -r;
    ComplexMatrix out = h;
    for (std::size_t i = 1; i < n; ++i) out = tensor(out, h);
    return out;
}

void check_unbiased(const MubFamily& f) {
    const double target = 1.0 / std::sqrt(double(f.d));
    for (std::size_t t = 0; t < f.m; ++t)
        for (std::size_t t2 = t + 1; t2 < f.m; ++t2) {
            const ComplexMatrix overlap = f.bases[t].matrix().adjoint() * f.bases[t2].matrix();
            for (std::size_t i = 0; i < f.d; ++i)
                for (std::size_t j = 0; j < f.d; ++j)
                    if (std::abs(std::abs(overlap(i, j)) - target) > 1e-9)
                        throw UnsupportedConstructionError(
                            "mub_family: constructed bases fail the unbiasedness condition");
        }
}

} // namespace

MubFamily mub_family(std::size_t d, std::size_t m) {
    if (d < 2 || m < 1)
        throw UnsupportedConstructionError("mub_family: need d >= 2 and m >= 1");
    MubFamily f;
    f.d = d;
    f.m = m;
    if (d == 2 && m <= 3) {
        for (std::size_t t = 0; t < m; ++t) f.bases.emplace_back(qubit_basis(int(t)));
    } else if (is_prime(d) && d % 2 == 1 && m <= d + 1) {
        f.bases.emplace_back(ComplexMatrix::identity(d));
        for (std::size_t t = 0; t + 1 < m; ++t) f.bases.emplace_back(prime_basis(d, t));
    } else if (power_of_two(d) && m <= 2) {
        std::size_t n = 0;
        for (std::size_t v = d; v > 1; v >>= 1) ++n;
        f.bases.emplace_back(ComplexMatrix::identity(d));
        if (m == 2) f.bases.emplace_back(hadamard_power(n));
    } else {
        throw UnsupportedConstructionError(
            "mub_family: unsupported (d, m); supported are d=2 with m<=3, odd prime d with "
            "m<=d+1, and d=2^n with m<=2");
    }
    check_unbiased(f);
    return f;
}

LockingState locking_state(MubFamily mubs) {
    const std::size_t d = mubs.d;
    const std::size_t m = mubs.m;
    const std::size_t dim_a = d * m;
    const std::size_t dim = dim_a * d;
    ComplexMatrix rho(dim, dim);
    const double wgt = 1.0 / double(m * d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t t = 0; t < m; ++t) {
            const std::size_t a = k * m + t;  // (k, t) with k major
            const ComplexMatrix& b = mubs.bases[t].matrix();
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t j2 = 0; j2 < d; ++j2)
                    rho(a * d + j, a * d + j2) += wgt * b(j, k) * std::conj(b(j2, k));
        }
    DensityOperator op(dim_a, d, std::move(rho));
    return LockingState{d, m, std::move(mubs), std::move(op)};
}

double locking_mid_closed(std::size_t d, std::size_t m) {
    return (1.0 - 1.0 / double(m)) * std::log2(double(d));
}

double locking_mid(const LockingState& state) {
    const double numeric = mid(state.rho);
    const double closed = locking_mid_closed(state.d, state.m);
    if (std::abs(numeric - closed) > 1e-9)
        throw InvalidStateError("locking_mid: general measure and closed form disagree");
    return numeric;
}

double post_communication_mid(const LockingState& state, std::size_t t) {
    if (t >= state.m) throw std::out_of_range("post_communication_mid: basis index out of range");
    const std::size_t d = state.d;
    const ComplexMatrix& b = state.mubs.bases[t].matrix();
    // Condition the A-side label register on t, then rotate Bob to basis t:
    // (1/d) sum_k |k><k| (x) B_t^dag |b_k^t><b_k^t| B_t
    ComplexMatrix rho(d * d, d * d);
    const ComplexMatrix bd = b.adjoint();
    for (std::size_t k = 0; k < d; ++k) {
        const ComplexMatrix v = bd * column(b, k);  // = e_k up to roundoff
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t j2 = 0; j2 < d; ++j2)
                rho(k * d + j, k * d + j2) += (1.0 / double(d)) * v(j, 0) * std::conj(v(j2, 0));
    }
    // hermitize roundoff
    for (std::size_t r = 0; r < rho.rows(); ++r)
        for (std::size_t c = r; c < rho.cols(); ++c) {
            const cplx x = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
            rho(r, c) = x;
            rho(c, r) = std::conj(x);
        }
    return mid(DensityOperator(d, d, std::move(rho)));
}

double locking_lnu_bound(const LockingState& state) {
    const double general = lnu_bound(state.rho);
    if (state.m == 2 && power_of_two(state.d)) {
        std::size_t n = 0;
        for (std::size_t v = state.d; v > 1; v >>= 1) ++n;
        const double printed = std::sqrt(std::pow(2.0, double(n)) - 1.0) / std::pow(2.0, double(n));
        if (std::abs(printed - general) > 1e-12)
            throw InvalidStateError("locking_lnu_bound: closed form and general bound disagree");
        return printed;
    }
    return general;
}

} // namespace nonclass
