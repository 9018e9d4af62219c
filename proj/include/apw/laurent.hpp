#pragma once

/*
 * laurent.hpp — Laurent polynomials on the unit circle.
 *
 * Rank-1 almost periodic data reduces to this classical setting through the
 * change of variable z = e_beta. Factorization is root-splitting: roots come
 * from the companion matrix, the winding index is low + #{roots inside the
 * open disc}, and the plus/minus factors are rebuilt from the split roots.
 * Symbols with a root within 1e-9 of the circle are rejected as degenerate.
 */

#include <complex>
#include <optional>
#include <vector>

#include "apw/errors.hpp"

namespace apw {

using Cplx = std::complex<double>;

constexpr double kCircleRootTol = 1e-9;

class LaurentPoly {
public:
    LaurentPoly() = default; // zero
    LaurentPoly(long long low, std::vector<Cplx> coeffs);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(Cplx(1, 0)); }
    static LaurentPoly constant(Cplx c);
    static LaurentPoly monomial(Cplx c, long long power);

    bool is_zero() const noexcept { return c_.empty(); }
    long long low() const noexcept { return low_; }
    long long high() const noexcept { return low_ + static_cast<long long>(c_.size()) - 1; }
    int length() const noexcept { return static_cast<int>(c_.size()); }
    const std::vector<Cplx>& coeffs() const noexcept { return c_; }
    Cplx coeff(long long power) const;

    // sum |c_j| and max |c_j|
    double norm1() const;
    double norm_inf() const;

    Cplx eval(Cplx z) const;
    Cplx eval_circle(double theta) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(Cplx c) const;
    LaurentPoly shifted(long long d) const; // multiply by z^d

    // p*(z) = conj(p(1/conj(z))): conjugate coefficients, negated powers.
    // On |z|=1 this is the pointwise complex conjugate.
    LaurentPoly conj_reflected() const;

    LaurentPoly derivative() const;
    LaurentPoly trimmed(double tol) const;

    // One-sided parts: plus keeps powers >= 0, minus keeps powers < 0 (or
    // <= 0 with `with_zero`).
    LaurentPoly plus_part() const;
    LaurentPoly minus_part(bool with_zero = false) const;

    bool equals(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }

private:
    void normalize();

    long long low_ = 0;
    std::vector<Cplx> c_; // c_[j] is the coefficient of z^{low_ + j}
};

// Roots of the polynomial part (z^{-low} p when low < 0), with multiplicity,
// via the balanced companion matrix plus one Newton polish. Constants have
// no roots.
std::vector<Cplx> laurent_roots(const LaurentPoly& p);

// low + #{roots strictly inside the unit disc}. DegenerateError when some
// root has |1 - |root|| < kCircleRootTol, or p == 0.
long long winding_index(const LaurentPoly& p);

struct SpectralSplit {
    LaurentPoly plus;   // polynomial in z, all roots outside the closed disc, plus(0) != 0
    long long w = 0;    // p = plus * z^w * minus
    LaurentPoly minus;  // polynomial in 1/z, roots (in z) inside the open disc, minus(inf) != 0
    double residual = 0; // coefficient inf-norm of plus*z^w*minus - p
};

SpectralSplit spectral_split(const LaurentPoly& p);

enum class Side { plus, minus };

// Truncated inverse of a one-sided invertible factor: for Side::plus the
// input must have no roots in the closed disc and low() == 0; the returned
// series q satisfies ||p q - 1||_1 <= tail_tol. Side::minus mirrors in 1/z.
LaurentPoly laurent_inverse_truncated(const LaurentPoly& p, Side side, double tail_tol,
                                      int max_terms = 200000);

// Inverse in the full Wiener algebra (both-sided series), via the spectral
// split; requires no roots on the circle.
LaurentPoly laurent_inverse_wiener(const LaurentPoly& p, double tail_tol);

} // namespace apw
