#pragma once

/*
 * halfspace.hpp — halfspaces of R^k and spectral projections.
 *
 * Every halfspace is presented as S = Z * E_k for an invertible rational
 * matrix Z, where E_k is the lexicographic cone (first nonzero coordinate
 * positive, plus the origin). Membership reduces to the exact lexicographic
 * sign of Z^{-1} lambda, so mask evaluation is tolerance-free.
 */

#include <functional>
#include <memory>

#include "apw/matrix.hpp"

namespace apw {

class Halfspace {
public:
    // Throws DegenerateError when Z is singular.
    Halfspace(int dim_k, RationalMatrix Z);

    static std::shared_ptr<const Halfspace> standard(int dim_k) {
        return std::make_shared<const Halfspace>(dim_k, RationalMatrix::identity(dim_k));
    }
    static std::shared_ptr<const Halfspace> make(int dim_k, RationalMatrix Z) {
        return std::make_shared<const Halfspace>(dim_k, std::move(Z));
    }

    int dim_k() const noexcept { return dim_k_; }
    const RationalMatrix& Z() const noexcept { return Z_; }
    const RationalMatrix& Z_inverse() const noexcept { return Zinv_; }

    // lambda in S (the origin belongs to every halfspace).
    bool contains(const RationalVector& lambda) const;
    bool contains(const Frequency& f) const { return contains(f.basis->embed(f.coords)); }
    bool contains(const BasisPtr& basis, const Coords& c) const { return contains(basis->embed(c)); }
    // lambda in V(S) = Z * ({0} x R^{k-1}), the face orthogonal to Y(E_k).
    bool on_boundary_plane(const RationalVector& lambda) const;

    // The unique direction with <lambda, Y(S)> >= 0 for all lambda in S:
    // exact representative (Z^{-1})^T e_1 plus its float unit normalization.
    const RationalVector& y_direction() const noexcept { return y_dir_; }
    const std::vector<double>& y_unit() const noexcept { return y_unit_; }

    // Exact <lambda, y_direction>.
    Rational y_pairing(const RationalVector& lambda) const;
    double y_pairing_real(const BasisPtr& basis, const Coords& c) const;

private:
    int dim_k_;
    RationalMatrix Z_;
    RationalMatrix Zinv_;
    RationalVector y_dir_;
    std::vector<double> y_unit_;
};

using HalfspacePtr = std::shared_ptr<const Halfspace>;

enum class MaskKind {
    S,
    SMinusZero,
    MinusS,
    MinusSMinusZero,
    VCap,     // frequencies on the boundary plane V(S)
    ZeroOnly,
    Predicate,
};

struct SpectralMask {
    MaskKind kind = MaskKind::S;
    HalfspacePtr halfspace;
    std::function<bool(const Frequency&)> predicate;

    SpectralMask(MaskKind k, HalfspacePtr s) : kind(k), halfspace(std::move(s)) {}
    SpectralMask(std::function<bool(const Frequency&)> pred)
        : kind(MaskKind::Predicate), predicate(std::move(pred)) {}

    bool accepts(const Frequency& f) const;
};

ApPoly project(const ApPoly& f, const SpectralMask& mask);
ApMatrix project(const ApMatrix& g, const SpectralMask& mask);

ApPoly project(const ApPoly& f, MaskKind kind, const HalfspacePtr& S);
ApMatrix project(const ApMatrix& g, MaskKind kind, const HalfspacePtr& S);

// Analytic-slice damping: multiplies the coefficient at lambda by
// exp(-<lambda, Y(S)/|Y(S)|> * y). Requires sigma(f) within S and y > 0;
// never increases the Wiener norm.
ApPoly slice_damp(const ApPoly& f, const Halfspace& S, double y);

} // namespace apw
