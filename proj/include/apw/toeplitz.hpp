#pragma once

/*
 * toeplitz.hpp — finite sections of Toeplitz operators on the Besicovitch
 * coefficient space. T(F) phi = Pi_S(F phi) compressed to the frequencies
 * lambda in S cap Sigma with |coords(lambda)|_1 <= cutoff; the block at
 * (mu, nu) is the Fourier coefficient F_{mu-nu}. For symbols with spectrum
 * in S the finite section of T(A)T(A)* is an exact compression, so a
 * negative eigenvalue in the Gram test is a rigorous infeasibility
 * certificate; the converse direction carries the usual truncation caveat.
 */

#include "apw/halfspace.hpp"

namespace apw {

// Frequencies of S cap Sigma with l1 coordinate norm <= cutoff, ordered by
// (l1 norm, lexicographic coords): deterministic and reproducible.
std::vector<Coords> toeplitz_index_set(const BasisPtr& basis, const HalfspacePtr& S,
                                       long long cutoff);

struct TruncatedToeplitz {
    std::vector<Coords> index_set;
    int sym_rows = 0, sym_cols = 0;
    long long cutoff = 0;
    Eigen::MatrixXcd matrix; // (|index_set| * sym_rows) x (|index_set| * sym_cols)
};

TruncatedToeplitz toeplitz_truncate(const ApMatrix& F, const HalfspacePtr& S, long long cutoff);

struct GramReport {
    bool passes = false;
    double margin = 0.0; // smallest eigenvalue of T(A)T(A)* - gamma^{-2} T(B)T(B)*
    long long cutoff = 0;
    int dimension = 0;
    // Failure is a rigorous no-solution certificate; a pass only says the
    // finite section found no obstruction.
    std::string caveat;
};

// Necessary-condition test for the corona problem at bound gamma. Requires
// sigma(A), sigma(B) within S and B invertible (sampled |det B| >= 1e-9).
// Passes iff margin >= -1e-9 (zero up to eigenvalue noise is a boundary pass).
GramReport gram_test(const ApMatrix& A, const ApMatrix& B, double gamma, const HalfspacePtr& S,
                     long long cutoff, long long grid = 512, std::uint64_t seed = 0);

// Diagnostic for the kernel-range identity Ker[T(A), -T(B)] = Im[T(D); T(C)]:
// max of the product operator norm ||[T(A), -T(B)] [T(D); T(C)]|| and the
// dimension gap between the two subspaces (rank-revealing SVD).
double kernel_range_check(const ApMatrix& A, const ApMatrix& B, const ApMatrix& C,
                          const ApMatrix& D, const HalfspacePtr& S, long long cutoff);

} // namespace apw
