#pragma once

#include <span>

#include "nonclass/complex_matrix.hpp"
#include "nonclass/eig.hpp"

namespace nonclass {

enum class Side { A, B };

/// Bipartite density operator on H^M (x) H^N with A the left (most
/// significant) tensor factor. Construction validates the three state
/// invariants (hermiticity, unit trace, positivity) and throws
/// InvalidStateError naming the violated one.
class DensityOperator {
public:
    DensityOperator(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::size_t dim() const { return dim_a_ * dim_b_; }
    const ComplexMatrix& matrix() const { return mat_; }

    /// Same state with the roles of A and B exchanged (basis permutation).
    DensityOperator swapped() const;

private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    ComplexMatrix mat_;
};

/// Reduced state of the subsystem that is kept after tracing out `traced`.
ComplexMatrix partial_trace(const DensityOperator& rho, Side traced);

/// Transpose of the `side` indices only. Hermitian and trace preserving,
/// possibly indefinite.
ComplexMatrix partial_transpose(const DensityOperator& rho, Side side);

/// Von Neumann entropy in bits of a PSD unit-trace matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything below -1e-10 (or a trace off by
/// more than 1e-8) is rejected.
double von_neumann_entropy(const ComplexMatrix& rho);

/// H2(p) in bits; p must lie in [0, 1].
double binary_entropy(double p);

/// Tr(rho^2) = ||rho||_F^2.
double purity(const DensityOperator& rho);

/// Shannon entropy in bits of a probability list (clamps like the above).
double shannon_entropy(std::span<const double> p);

} // namespace nonclass
