#pragma once

#include <cstddef>
#include <vector>

namespace pfm {

using LatticeVector = std::vector<long>;

// Exponent data of a family of signed Laurent monomials
//     v_j = sign_j * y^ygrade_j * prod_i x_i^entries[j][i],
// one row per monomial, one column per variable x_i.
struct ExponentMatrix {
    std::size_t variables = 0;
    std::vector<LatticeVector> entries;
    std::vector<int> signs;
    std::vector<long> ygrades;

    std::size_t monomials() const noexcept { return entries.size(); }
    /// Throws Error(invalid_argument) on inconsistent dimensions, signs
    /// outside {+1,-1} or negative y-grades.
    void validate() const;
};

// A product prod_j v_j^exponents[j] free of every x_i.
struct KernelGenerator {
    LatticeVector exponents;
    int sign = 1;
    long ydegree = 0;

    friend bool operator==(const KernelGenerator&, const KernelGenerator&) = default;
};

/// sum_j b_j * row_j, one entry per variable.
LatticeVector x_exponents(const ExponentMatrix& a, const LatticeVector& b);
int sign_of(const ExponentMatrix& a, const LatticeVector& b);
long ydegree_of(const ExponentMatrix& a, const LatticeVector& b);

/// Lattice basis of {b in Z^m : sum_j b_j row_j = 0}, in Hermite normal form
/// (echelon, positive pivots, entries above pivots reduced). Size m - rank.
std::vector<LatticeVector> integer_kernel_basis(const ExponentMatrix& a);

/// Every b in N^m with zero x-exponents and y-degree exactly `ydegree`, in
/// lexicographic order. Monomials of y-grade 0 must have linearly independent
/// exponent rows, which makes the set finite.
std::vector<LatticeVector> enumerate_kernel_points(const ExponentMatrix& a, long ydegree);

/// Hilbert basis of the monoid ker(A) ∩ N^m, restricted to elements of
/// y-degree <= degree_bound, sorted lexicographically by exponent vector.
std::vector<KernelGenerator> nonneg_kernel_generators(const ExponentMatrix& a, long degree_bound);

}  // namespace pfm
