#pragma once

#include "nonclass/measures.hpp"

namespace nonclass {

/// Uniform angle grid used by the brute-force references.
struct GridSpec {
    std::size_t resolution = 64;  // points per angle dimension, >= 8
};

/// Brute-force discord reference: minimum of the conditional-entropy
/// objective over a (theta, phi) Bloch grid for a qubit measurement on A.
/// An upper bound on the true discord, non-increasing as the grid refines.
double discord_grid_oracle(const DensityOperator& rho, const GridSpec& grid);

/// Brute-force LNU reference: maximum shift over a uniform grid of the
/// commutant parameters (phases for non-degenerate clusters, an SU(2) angle
/// triple for one 2-cluster). A lower bound on the true maximum. Throws when
/// the parameter space after clustering needs more than 4 grid dimensions.
double lnu_grid_oracle(const DensityOperator& rho, const GridSpec& grid);

/// MID recomputed by explicit projector sandwiching, no basis-change
/// shortcut; dims up to 8x8.
double mid_exhaustive_check(const DensityOperator& rho);

} // namespace nonclass
