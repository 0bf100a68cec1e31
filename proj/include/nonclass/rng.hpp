#pragma once

#include <cstdint>
#include <random>

#include "nonclass/complex_matrix.hpp"

namespace nonclass {

/// Seeded random source. Every stochastic routine in the library takes one of
/// these (or a seed that constructs one); there is no ambient randomness.
/// Gaussians come from a hand-rolled Box-Muller on top of mt19937_64 so that
/// streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() {
        return (engine_() >> 11) * 0x1.0p-53;
    }

    // standard normal
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // standard complex normal, E|z|^2 = 1
    cplx complex_normal() {
        const double re = normal();
        const double im = normal();
        return cplx(re * 0.7071067811865476, im * 0.7071067811865476);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Mix a master seed with a grid-point index (splitmix64 finalizer), so scans
/// can seed each point independently of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace nonclass
