#pragma once

#include "nonclass/measures.hpp"

namespace nonclass {

/// m mutually unbiased orthonormal bases of C^d; basis 0 is always the
/// computational basis. Pairwise overlaps |<b_i^t | b_j^t'>| = 1/sqrt(d)
/// are enforced at construction.
struct MubFamily {
    std::size_t d = 0;
    std::size_t m = 0;
    std::vector<UnitaryMatrix> bases;  // columns are |b_k^t>
};

/// Supported: qubit triple (d=2, m<=3), odd prime d (m<=d+1, quadratic
/// root-of-unity construction), d=2^n (m<=2, computational + Hadamard^n).
/// Anything else throws UnsupportedConstructionError.
MubFamily mub_family(std::size_t d, std::size_t m);

/// rho = (1/md) sum_{k,t} (|k><k| (x) |t><t|)_A (x) (|b_k^t><b_k^t|)_B with
/// A-side index (k,t), k major. Separable by construction; both reductions
/// maximally mixed.
struct LockingState {
    std::size_t d = 0;
    std::size_t m = 0;
    MubFamily mubs;
    DensityOperator rho;
};

LockingState locking_state(MubFamily mubs);

/// MID of the locking state; checks the general measure against the closed
/// form (1 - 1/m) log2 d (they must agree within 1e-9) and returns the
/// measured value.
double locking_mid(const LockingState& state);

/// Closed form (1 - 1/m) log2(d).
double locking_mid_closed(std::size_t d, std::size_t m);

/// MID of the conditional state after Alice announces basis label t and Bob
/// rotates to that basis; drops to zero (the state is then diagonal in a
/// local product basis).
double post_communication_mid(const LockingState& state, std::size_t t);

/// Theorem-1 bound for the locking state; the printed closed form
/// sqrt(2^n - 1)/2^n when d = 2^n and m = 2 (cross-checked against the
/// general bound within 1e-12), the general bound otherwise.
double locking_lnu_bound(const LockingState& state);

} // namespace nonclass
