#pragma once

/*
 * frequency.hpp — the exact frequency lattice.
 *
 * A FrequencyBasis fixes finitely many generators beta_1..beta_r in R^k
 * (rational entries, linearly independent over Q). Frequencies are integer
 * coordinate vectors against that basis, so equality and halfspace sign
 * tests are decidable. An irrational generator such as sqrt(2) has to be
 * approximated by a rational entry when the basis is set up; that is a
 * documented limitation of the representation.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "apw/rational.hpp"

namespace apw {

// Integer coordinates of one frequency with respect to a FrequencyBasis.
using Coords = std::vector<long long>;

class FrequencyBasis {
public:
    // `columns` is k x r; column j holds generator beta_j.
    FrequencyBasis(int dim_k, RationalMatrix columns);

    static std::shared_ptr<const FrequencyBasis> make(int dim_k, RationalMatrix columns) {
        return std::make_shared<const FrequencyBasis>(dim_k, std::move(columns));
    }
    // Convenience: k = r = 1, single generator `beta`.
    static std::shared_ptr<const FrequencyBasis> line(const Rational& beta = Rational(1));

    int dim_k() const noexcept { return dim_k_; }
    int rank_r() const noexcept { return rank_r_; }
    const RationalMatrix& columns() const noexcept { return columns_; }

    // Exact real embedding lambda = basis * coords.
    RationalVector embed(const Coords& coords) const;
    std::vector<double> embed_real(const Coords& coords) const;

    bool same_as(const FrequencyBasis& other) const;

private:
    int dim_k_;
    int rank_r_;
    RationalMatrix columns_; // k x r
};

using BasisPtr = std::shared_ptr<const FrequencyBasis>;

struct Frequency {
    Coords coords;
    BasisPtr basis;

    Frequency() = default;
    Frequency(Coords c, BasisPtr b) : coords(std::move(c)), basis(std::move(b)) {}

    bool is_zero() const {
        for (long long c : coords)
            if (c != 0) return false;
        return true;
    }
    friend bool operator==(const Frequency& a, const Frequency& b) { return a.coords == b.coords; }
    friend bool operator<(const Frequency& a, const Frequency& b) { return a.coords < b.coords; }
};

Coords coords_add(const Coords& a, const Coords& b);
Coords coords_sub(const Coords& a, const Coords& b);
Coords coords_neg(const Coords& a);
long long coords_l1(const Coords& a);
bool coords_is_zero(const Coords& a);
std::string coords_str(const Coords& a);

void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where);

} // namespace apw
