#include "apw/halfspace.hpp"

#include <cmath>

namespace apw {

Halfspace::Halfspace(int dim_k, RationalMatrix Z) : dim_k_(dim_k), Z_(std::move(Z)) {
    if (dim_k_ <= 0) throw DimensionError("halfspace needs dim_k >= 1");
    if (Z_.rows() != dim_k_ || Z_.cols() != dim_k_)
        throw DimensionError("halfspace matrix Z must be k x k");
    Zinv_ = Z_.inverse(); // throws when singular
    // y_direction = (Z^{-1})^T e_1: row 0 of Z^{-1}.
    y_dir_.resize(dim_k_);
    for (int j = 0; j < dim_k_; ++j) y_dir_[j] = Zinv_(0, j);
    double norm = 0.0;
    y_unit_.resize(dim_k_);
    for (int j = 0; j < dim_k_; ++j) {
        y_unit_[j] = y_dir_[j].to_double();
        norm += y_unit_[j] * y_unit_[j];
    }
    norm = std::sqrt(norm);
    for (double& v : y_unit_) v /= norm;
}

bool Halfspace::contains(const RationalVector& lambda) const {
    if (static_cast<int>(lambda.size()) != dim_k_)
        throw DimensionError("halfspace membership: vector length != dim_k");
    RationalVector w = Zinv_.mul(lambda);
    for (const Rational& c : w) {
        if (c.sign() > 0) return true;
        if (c.sign() < 0) return false;
    }
    return true; // the origin
}

bool Halfspace::on_boundary_plane(const RationalVector& lambda) const {
    if (static_cast<int>(lambda.size()) != dim_k_)
        throw DimensionError("halfspace membership: vector length != dim_k");
    RationalVector w = Zinv_.mul(lambda);
    return w[0].is_zero();
}

Rational Halfspace::y_pairing(const RationalVector& lambda) const {
    if (static_cast<int>(lambda.size()) != dim_k_)
        throw DimensionError("y_pairing: vector length != dim_k");
    Rational acc;
    for (int j = 0; j < dim_k_; ++j) acc += lambda[j] * y_dir_[j];
    return acc;
}

double Halfspace::y_pairing_real(const BasisPtr& basis, const Coords& c) const {
    std::vector<double> lam = basis->embed_real(c);
    double acc = 0.0;
    for (int j = 0; j < dim_k_; ++j) acc += lam[j] * y_unit_[j];
    return acc;
}

bool SpectralMask::accepts(const Frequency& f) const {
    if (kind == MaskKind::Predicate) {
        if (!predicate) throw DomainError("predicate mask without predicate");
        return predicate(f);
    }
    if (!halfspace) throw DomainError("mask without halfspace");
    if (kind == MaskKind::ZeroOnly) return f.is_zero();
    if (kind == MaskKind::VCap)
        return halfspace->on_boundary_plane(f.basis->embed(f.coords));
    bool zero = f.is_zero();
    bool in_s = halfspace->contains(f);
    switch (kind) {
        case MaskKind::S: return in_s;
        case MaskKind::SMinusZero: return in_s && !zero;
        case MaskKind::MinusS: return !in_s || zero;
        case MaskKind::MinusSMinusZero: return !in_s;
        default: break;
    }
    throw DomainError("unknown mask kind");
}

ApPoly project(const ApPoly& f, const SpectralMask& mask) {
    if (mask.kind != MaskKind::Predicate && mask.halfspace &&
        mask.halfspace->dim_k() != f.basis()->dim_k())
        throw DimensionError("project: halfspace and basis dimensions differ");
    std::vector<std::pair<Coords, Cplx>> kept;
    for (const auto& [c, v] : f.terms())
        if (mask.accepts(Frequency(c, f.basis()))) kept.emplace_back(c, v);
    return ApPoly::make(f.basis(), kept);
}

ApMatrix project(const ApMatrix& g, const SpectralMask& mask) {
    return g.apply([&](const ApPoly& f) { return project(f, mask); });
}

ApPoly project(const ApPoly& f, MaskKind kind, const HalfspacePtr& S) {
    return project(f, SpectralMask(kind, S));
}

ApMatrix project(const ApMatrix& g, MaskKind kind, const HalfspacePtr& S) {
    return project(g, SpectralMask(kind, S));
}

ApPoly slice_damp(const ApPoly& f, const Halfspace& S, double y) {
    if (!(y > 0)) throw DomainError("slice_damp: y must be positive");
    if (S.dim_k() != f.basis()->dim_k())
        throw DimensionError("slice_damp: halfspace and basis dimensions differ");
    std::vector<std::pair<Coords, Cplx>> damped;
    for (const auto& [c, v] : f.terms()) {
        if (!S.contains(f.basis(), c))
            throw DomainError("slice_damp: spectrum not contained in the halfspace");
        double t = S.y_pairing_real(f.basis(), c);
        damped.emplace_back(c, v * std::exp(-t * y));
    }
    return ApPoly::make(f.basis(), damped);
}

} // namespace apw
