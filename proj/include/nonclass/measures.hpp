#pragma once

#include <optional>
#include <span>

#include "nonclass/density.hpp"
#include "nonclass/generators.hpp"
#include "nonclass/optimize.hpp"
#include "nonclass/states.hpp"

namespace nonclass {

/// Result of an optimized measure: the value plus enough diagnostics to spot
/// a non-converged run (residual above tolerance, large restart dispersion).
struct MeasureReport {
    double value = 0.0;
    std::size_t restarts = 0;
    double residual = 0.0;
    double dispersion = 0.0;
    ComplexMatrix argopt;   // LNU: optimal local unitary; discord: measurement basis
    bool converged = true;
};

/// Commutant of a reduced state: block unitaries over its degenerate
/// eigenvalue clusters, expressed in the canonical eigenbasis.
struct CommutantParam {
    ComplexMatrix eigenbasis;           // canonical eigenvectors (columns)
    std::vector<std::size_t> blocks;    // degenerate-cluster sizes
    std::size_t parameter_count = 0;    // sum of k^2 over clusters
};

CommutantParam commutant_structure(const ComplexMatrix& reduced,
                                   double tol = kDegeneracyTol);

/// Member of the commutant for a given parameter vector (length
/// parameter_count): per cluster a Hermitian generator H (k diagonal entries,
/// then re/im pairs of the upper triangle) exponentiated to exp(iH).
ComplexMatrix commutant_unitary(const CommutantParam& cp, std::span<const double> params);

/// LNU shift d(rho, U_A) = (1/sqrt2)||rho - rho_f||_F for a unitary commuting
/// with rho_A; also evaluates sqrt(Tr rho^2 - Tr rho rho_f) and insists the
/// two routes agree within 1e-10. Throws if [rho_A, U_A] != 0.
double lnu_shift(const DensityOperator& rho, const UnitaryMatrix& u_a);

/// Maximal LNU shift over the commutant of the reduced state on `side`.
/// The reported value is a certified lower bound (it is lnu_shift of the
/// returned unitary).
MeasureReport lnu_distance(const DensityOperator& rho, Side side = Side::A,
                           const OptimOptions& opt = {});

/// Purity upper bound sqrt(2(Tr rho^2 - 1/MN)); side independent.
double lnu_bound(const DensityOperator& rho);

/// I(rho) = S(rho_A) + S(rho_B) - S(rho), in bits.
double mutual_information(const DensityOperator& rho);

/// Quantum discord with rank-one projective measurements on `measured`,
/// minimized over the unitary orbit of the computational projector set
/// (2-angle Bloch parameterization when the measured side is a qubit).
/// The reported value is an upper bound on the true discord.
MeasureReport discord(const DensityOperator& rho, Side measured = Side::A,
                      const OptimOptions& opt = {});

/// Ollivier-Zurek test: does dephasing in some rank-one eigenprojector basis
/// of the reduced state leave rho invariant within tol? Searches over block
/// unitaries when the reduced state is degenerate.
bool is_zero_discord(const DensityOperator& rho, Side side, double tol,
                     const OptimOptions& opt = {});

/// Measurement-induced disturbance: dephasing in the canonical eigenbases of
/// both reduced states. Computed both as I(rho)-I(P(rho)) and as
/// S(P(rho))-S(rho); the two must agree within 1e-9.
double mid(const DensityOperator& rho);

/// P(rho) = sum_ij (Pi_i (x) Pi_j) rho (Pi_i (x) Pi_j) for complete rank-one
/// projector sets; throws on incomplete or non-orthogonal sets.
DensityOperator dephase(const DensityOperator& rho,
                        const std::vector<ComplexMatrix>& proj_a,
                        const std::vector<ComplexMatrix>& proj_b);

/// Theorem-2 style witness: a phase-diagonal unitary in the canonical
/// eigenbasis of rho_A with positive shift, or nullopt when the phase search
/// finds nothing above 1e-8.
std::optional<UnitaryMatrix> discord_witness_unitary(const DensityOperator& rho,
                                                     const OptimOptions& opt = {});

/// Rank-one projectors onto the canonical eigenbasis of a Hermitian matrix.
std::vector<ComplexMatrix> eigenprojectors(const ComplexMatrix& hermitian);

} // namespace nonclass
