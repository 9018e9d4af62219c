#pragma once

/*
 * rank1.hpp — reduction of commensurable (rank-1) spectra to the circle.
 *
 * When every frequency in play is an integer multiple of one generator, the
 * substitution z = e_beta turns AP data into Laurent polynomials and the
 * factorization theory becomes the classical one on the unit circle. beta is
 * the primitive generator of the group generated by all input frequencies,
 * sign-flipped into the halfspace; the z-exponents of the reduced data then
 * have gcd 1. Spectra of rank >= 2 raise NotCommensurableError.
 */

#include "apw/halfspace.hpp"
#include "apw/polymat.hpp"

namespace apw {

class Rank1Reduction {
public:
    // Builds the joint reduction of all frequencies appearing in `inputs`.
    Rank1Reduction(const std::vector<const ApMatrix*>& inputs, const HalfspacePtr& S);

    static Rank1Reduction of(const ApPoly& f, const HalfspacePtr& S);
    static Rank1Reduction of(const ApMatrix& g, const HalfspacePtr& S);
    static Rank1Reduction joint(const ApMatrix& a, const ApMatrix& b, const HalfspacePtr& S);

    const BasisPtr& basis() const noexcept { return basis_; }
    const HalfspacePtr& halfspace() const noexcept { return S_; }
    // beta in S \ {0}; zero-length coords only for a rank-0 basis.
    const Coords& generator() const noexcept { return generator_; }
    // Frequency of z^n in the AP world.
    Coords frequency_of(long long n) const;

    LaurentPoly to_laurent(const ApPoly& f) const;
    LaurentMatrix to_laurent(const ApMatrix& g) const;
    ApPoly to_ap(const LaurentPoly& p) const;
    ApMatrix to_ap(const LaurentMatrix& m) const;

    // Exponent of a frequency: c = n * generator, throws when off-lattice.
    long long exponent_of(const Coords& c) const;

private:
    BasisPtr basis_;
    HalfspacePtr S_;
    Coords generator_;
};

} // namespace apw
