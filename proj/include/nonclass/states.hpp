#pragma once

#include <cstdint>

#include "nonclass/density.hpp"
#include "nonclass/rng.hpp"

namespace nonclass {

/// Square matrix validated to be unitary within 1e-10.
class UnitaryMatrix {
public:
    explicit UnitaryMatrix(ComplexMatrix mat);
    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }

private:
    ComplexMatrix mat_;
};

/// The n+1 qubit DQC1 state (1/2^{n+1}) [[I, a U^dag], [a U, I]], with the
/// polarized top qubit as subsystem A and the n maximally mixed qubits as B.
class Dqc1State {
public:
    Dqc1State(std::size_t n, double alpha, UnitaryMatrix u);

    std::size_t n() const { return n_; }
    double alpha() const { return alpha_; }
    const UnitaryMatrix& unitary() const { return u_; }
    cplx tau() const { return tau_; }                         // Tr(U)/2^n
    const std::vector<cplx>& diagonal() const { return diag_; }  // u_jj
    const DensityOperator& density() const { return rho_; }

private:
    std::size_t n_;
    double alpha_;
    UnitaryMatrix u_;
    cplx tau_;
    std::vector<cplx> diag_;
    DensityOperator rho_;
};

/// Two-qubit isotropic state (1-z)/4 I4 + z |Psi><Psi|, Psi = (|00>+|11>)/sqrt2.
DensityOperator isotropic(double z);

Dqc1State dqc1(std::size_t n, double alpha, UnitaryMatrix u);

/// The 2x4 Horodecki bound entangled state, entries exactly the printed
/// matrix normalized by 1/(1+7p); dimA=2 (left factor), dimB=4.
DensityOperator horodecki_2x4(double p);

/// Two-qubit separable state with zero discord but maximal separable LNU
/// shift: (1/2)(P_a+ (x) P_b+ + P_a- (x) P_b-) with a = z-axis and
/// b = (sin g cos d, sin g sin d, cos g).
DensityOperator zero_discord_example(double b_gamma, double b_delta);

/// Haar-distributed unitary: QR of a complex Ginibre matrix via modified
/// Gram-Schmidt (R diagonal real positive by construction).
UnitaryMatrix haar_unitary(std::size_t dim, Rng& rng);
UnitaryMatrix haar_unitary(std::size_t dim, std::uint64_t seed);

/// Induced-measure random state of the given rank: rho = X X^dag / Tr with
/// X Ginibre of shape (dimA*dimB) x rank.
DensityOperator random_density(std::size_t dim_a, std::size_t dim_b,
                               std::size_t rank, std::uint64_t seed);
DensityOperator random_density(std::size_t dim_a, std::size_t dim_b,
                               std::size_t rank, Rng& rng);

/// (1-eps) I/(MN) + eps |psi><psi| for a normalized state vector psi.
DensityOperator pseudo_pure(std::size_t dim_a, std::size_t dim_b, double epsilon,
                            const ComplexMatrix& psi);

/// Explicit separable mixture sum_k p_k |a_k><a_k| (x) |b_k><b_k| with Haar
/// random local pure states and uniform-normalized random weights.
DensityOperator random_separable(std::size_t dim_a, std::size_t dim_b,
                                 std::size_t terms, Rng& rng);

/// Haar-random state vector of the given dimension (as a dim x 1 matrix).
ComplexMatrix random_state_vector(std::size_t dim, Rng& rng);

} // namespace nonclass
