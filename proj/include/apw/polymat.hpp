#pragma once

/*
 * polymat.hpp — matrices of Laurent polynomials and the elementary-operation
 * calculus over them: Euclidean division, Hermite-style row/column reduction
 * with tracked unimodular transforms, Bezout identities, unimodular row
 * completion, and truncated Wiener inverses.
 *
 * Units depend on the ring: over the Laurent ring C[z,1/z] they are the
 * monomials c z^d; over the plus (disc) algebra they are the functions with
 * no zeros in the closed unit disc. The same reduction serves both; only
 * the final unit test differs.
 */

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "apw/laurent.hpp"

namespace apw {

enum class UnitDomain {
    laurent, // units: c z^d
    disc,    // units: no zeros in |z| <= 1
};

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n) {}

    static LaurentMatrix identity(int n);

    int rows() const noexcept { return m_; }
    int cols() const noexcept { return n_; }
    const LaurentPoly& at(int i, int j) const { return e_[idx(i, j)]; }
    LaurentPoly& at(int i, int j) { return e_[idx(i, j)]; }

    LaurentMatrix operator+(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix scaled(Cplx c) const;
    LaurentMatrix transpose() const;
    LaurentMatrix conj_transpose() const; // conj_reflected entries, transposed
    LaurentMatrix submatrix(int i0, int j0, int rows, int cols) const;
    static LaurentMatrix hcat(const LaurentMatrix& a, const LaurentMatrix& b);
    static LaurentMatrix vcat(const LaurentMatrix& a, const LaurentMatrix& b);

    LaurentPoly det() const; // cofactor expansion; intended for small sizes
    Eigen::MatrixXcd eval_circle(double theta) const;
    double norm1_max() const; // max over entries of the coefficient l1 norm
    double dist1_max(const LaurentMatrix& o) const;
    LaurentMatrix trimmed(double tol) const;
    bool is_zero(double tol) const;

private:
    size_t idx(int i, int j) const;
    int m_ = 0, n_ = 0;
    std::vector<LaurentPoly> e_;
};

// Euclidean division a = q b + r with deg r < deg b, on polynomial parts
// (low >= 0 required). Coefficients of r below `zero_tol` are cleared.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, double zero_tol, LaurentPoly& q,
                 LaurentPoly& r);

// Column reduction of a single row: row * V = [g, 0, ..., 0]. Vinv is
// maintained so that [g,0,...,0] * Vinv = row. Entries must be polynomial
// (low >= 0) unless allow_laurent_units, in which case z^low is stripped
// first by unit column scalings.
struct RowGcdReduction {
    LaurentPoly g;
    LaurentMatrix V;
    LaurentMatrix Vinv;
};
RowGcdReduction reduce_row_gcd(const std::vector<LaurentPoly>& row, bool allow_laurent_units,
                               double zero_tol);

// Bezout certificate: b with sum a_i b_i = 1 over the Laurent ring, or
// nullopt when the entries have a common root in C \ {0} (or are all zero).
std::optional<std::vector<LaurentPoly>> bezout_solve(const std::vector<LaurentPoly>& a,
                                                     double zero_tol = 1e-10);

// Completion of a unimodular row to a square matrix whose determinant is a
// unit of the requested ring. First row of the result equals `row` exactly.
LaurentMatrix complete_unimodular_row(const std::vector<LaurentPoly>& row, UnitDomain domain,
                                      double zero_tol = 1e-10, double tail_tol = 1e-10);

// Completion of an m x n right-invertible matrix (first m rows preserved).
LaurentMatrix complete_rows(const LaurentMatrix& M, UnitDomain domain, double zero_tol = 1e-10,
                            double tail_tol = 1e-10);

// Row Hermite reduction U * A = [T; 0] with T r x n upper staircase and U
// unimodular over C[z]; Uinv is tracked so that A = Uinv * [T; 0].
struct RowHermite {
    LaurentMatrix T;    // r x n
    LaurentMatrix U;    // m x m
    LaurentMatrix Uinv; // m x m
    int rank = 0;
};
RowHermite hermite_rows(const LaurentMatrix& A, double zero_tol = 1e-10);

// Column variant: A * V = [L | 0], L m x r.
struct ColHermite {
    LaurentMatrix L;
    LaurentMatrix V;
    LaurentMatrix Vinv;
    int rank = 0;
};
ColHermite hermite_cols(const LaurentMatrix& A, double zero_tol = 1e-10);

// Unit test for a scalar over the given ring (root location based).
bool is_unit(const LaurentPoly& g, UnitDomain domain);

// Truncated inverse of a scalar that is a unit of the given ring: exact
// monomial inverse over the Laurent ring, truncated plus series over disc.
LaurentPoly unit_inverse(const LaurentPoly& g, UnitDomain domain, double tail_tol);

// Right inverse certificate over the given ring: X with M X = I_m (residual
// reported by the caller), or nullopt when det of the reduced block is not a
// unit. M must have full row rank as a rational matrix.
std::optional<LaurentMatrix> right_inverse_over(const LaurentMatrix& M, UnitDomain domain,
                                                double zero_tol = 1e-10, double tail_tol = 1e-10);
std::optional<LaurentMatrix> left_inverse_over(const LaurentMatrix& M, UnitDomain domain,
                                               double zero_tol = 1e-10, double tail_tol = 1e-10);

// Inverse in the full matrix Wiener algebra via adj / det; requires det to
// have no roots within kCircleRootTol of the unit circle.
LaurentMatrix wiener_matrix_inverse(const LaurentMatrix& M, double tail_tol);

// Power-series inverse of a plus matrix (entries with low >= 0) truncated at
// z^order; M(0) must be invertible.
LaurentMatrix plus_matrix_inverse_series(const LaurentMatrix& M, long long order);

} // namespace apw
