#pragma once

/*
 * poly.hpp — almost periodic polynomials over the Wiener algebra.
 *
 * An ApPoly is a finite Bohr-Fourier sum  f = sum_lambda f_lambda e_lambda,
 * e_lambda(x) = exp(i<lambda, x>), stored as a sparse map from exact integer
 * lattice coordinates to complex coefficients. The lattice is exact; the
 * coefficients are doubles. Values are immutable after construction and all
 * operations are pure.
 */

#include <complex>
#include <map>
#include <vector>

#include "apw/frequency.hpp"
#include "apw/sampling.hpp"

namespace apw {

using Cplx = std::complex<double>;

class ApPoly {
public:
    using TermMap = std::map<Coords, Cplx>;

    ApPoly() = default;
    explicit ApPoly(BasisPtr basis) : basis_(std::move(basis)) {}

    // Duplicate coordinates are summed; coefficients below the zero
    // threshold 1e-14 * (1 + sum |c|) are dropped.
    static ApPoly make(BasisPtr basis, const std::vector<std::pair<Coords, Cplx>>& terms);
    static ApPoly zero(BasisPtr basis) { return ApPoly(std::move(basis)); }
    static ApPoly constant(BasisPtr basis, Cplx c);
    // c * e_lambda for lambda given by coords.
    static ApPoly character(BasisPtr basis, const Coords& coords, Cplx c = Cplx(1, 0));

    const BasisPtr& basis() const noexcept { return basis_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    size_t support_size() const noexcept { return terms_.size(); }

    Cplx coeff(const Coords& c) const;
    Cplx bohr_mean() const;
    std::vector<Frequency> spectrum() const;

    double wiener_norm() const;
    // ||f||_W is an upper bound for ||f||_inf.
    double sup_norm_bound() const { return wiener_norm(); }
    // Max of |f| over a deterministic Kronecker grid on the torus of basis
    // phases; a lower bound for ||f||_inf that converges from below.
    double sup_norm_estimate(long long grid_density, std::uint64_t seed = 0) const;

    Cplx eval(const std::vector<double>& x) const;
    // Evaluate at basis phases theta in R^r: sum f_c exp(i<c, theta>).
    Cplx torus_eval(const std::vector<double>& theta) const;

    ApPoly conj() const;
    ApPoly operator-() const;
    friend ApPoly operator+(const ApPoly& f, const ApPoly& g);
    friend ApPoly operator-(const ApPoly& f, const ApPoly& g);
    friend ApPoly operator*(const ApPoly& f, const ApPoly& g);
    ApPoly scaled(Cplx c) const;
    // Multiply by the character e_{delta}.
    ApPoly shifted(const Coords& delta) const;

    // Exact equality of supports and coefficients.
    bool equals(const ApPoly& g) const { return terms_ == g.terms_; }
    double wiener_distance(const ApPoly& g) const;

    // Re-express over another basis; every frequency must have integer
    // coordinates there, otherwise BasisMismatchError.
    ApPoly rebase(const BasisPtr& target) const;

    // Drop coefficients with |c| <= tol (absolute).
    ApPoly trimmed(double tol) const;

private:
    void insert_term(const Coords& c, Cplx v);
    void normalize();

    BasisPtr basis_;
    TermMap terms_;
};

Cplx bohr_inner(const ApPoly& f, const ApPoly& g);

} // namespace apw
