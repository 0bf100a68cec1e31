#pragma once

#include <vector>

#include "nonclass/complex_matrix.hpp"

namespace nonclass {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; eigenvectors are the matching orthonormal columns.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Absolute tolerance under which two eigenvalues count as degenerate.
inline constexpr double kDegeneracyTol = 1e-10;

/// Cyclic complex Jacobi. Throws InvalidStateError if `a` is not Hermitian
/// within `herm_tol`. Within every degenerate cluster (eigenvalues closer
/// than kDegeneracyTol) the returned basis is canonical: the orthonormalized
/// projections of the computational basis vectors, in index order, onto the
/// eigenspace. For a maximally mixed matrix this yields the computational
/// basis. Non-degenerate eigenvectors get a fixed phase (largest-magnitude
/// entry real positive), so the output is fully deterministic.
Spectrum eig_hermitian(const ComplexMatrix& a, double herm_tol = 1e-10);

/// Eigenvalues only (same solver, no canonicalization work).
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& a, double herm_tol = 1e-10);

/// Sizes of consecutive degenerate clusters of a descending eigenvalue list.
std::vector<std::size_t> degeneracy_clusters(const std::vector<double>& descending,
                                             double tol = kDegeneracyTol);

} // namespace nonclass
