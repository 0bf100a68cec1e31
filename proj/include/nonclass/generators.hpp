#pragma once

#include "nonclass/density.hpp"

namespace nonclass {

/// Traceless orthogonal Hermitian generators of SU(d) built on an orthonormal
/// basis {|k>}: U_pq = |p><q| + |q><p|, V_pq = -i|p><q| + i|q><p|, and the
/// diagonal W_r = sqrt(2/(r(r+1))) (sum_{k<=r} |k><k| - r|r+1><r+1|).
/// Ordering: all U_pq with (p,q) lexicographic, then all V_pq, then W_r with
/// r ascending. Tr(s_i s_j) = 2 delta_ij.
struct GeneratorSet {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> matrices;
    ComplexMatrix basis;
};

GeneratorSet su_generators(std::size_t dim, const ComplexMatrix& basis);
GeneratorSet su_generators(std::size_t dim);  // computational basis

/// Bloch vectors and correlation matrix of a bipartite state:
/// r^A_s = (M/2) Tr(rho_A s^A_s), T_st = (MN/4) Tr((s^A_s (x) s^B_t) rho),
/// generators in the computational basis.
struct FanoForm {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::vector<double> r_a;              // length M^2 - 1
    std::vector<double> r_b;              // length N^2 - 1
    std::vector<std::vector<double>> t;   // (M^2-1) x (N^2-1)
};

FanoForm fano_decompose(const DensityOperator& rho);

/// Rebuild the density matrix from its Fano coefficients (round-trip checks).
ComplexMatrix fano_reconstruct(const FanoForm& f);

} // namespace nonclass
