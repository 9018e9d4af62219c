#include "apw/poly.hpp"

#include <cmath>

namespace apw {

namespace {
constexpr double kZeroThresholdScale = 1e-14;
} // namespace

ApPoly ApPoly::make(BasisPtr basis, const std::vector<std::pair<Coords, Cplx>>& terms) {
    if (!basis) throw BasisMismatchError("ApPoly::make: null basis");
    ApPoly f(std::move(basis));
    for (const auto& [c, v] : terms) {
        if (static_cast<int>(c.size()) != f.basis_->rank_r())
            throw DimensionError("term coords length != basis rank");
        f.insert_term(c, v);
    }
    f.normalize();
    return f;
}

ApPoly ApPoly::constant(BasisPtr basis, Cplx c) {
    ApPoly f(std::move(basis));
    f.insert_term(Coords(f.basis_->rank_r(), 0), c);
    f.normalize();
    return f;
}

ApPoly ApPoly::character(BasisPtr basis, const Coords& coords, Cplx c) {
    ApPoly f(std::move(basis));
    if (static_cast<int>(coords.size()) != f.basis_->rank_r())
        throw DimensionError("character coords length != basis rank");
    f.insert_term(coords, c);
    f.normalize();
    return f;
}

void ApPoly::insert_term(const Coords& c, Cplx v) {
    auto [it, inserted] = terms_.emplace(c, v);
    if (!inserted) it->second += v;
}

void ApPoly::normalize() {
    double norm = 0.0;
    for (const auto& [c, v] : terms_) norm += std::abs(v);
    double tol = kZeroThresholdScale * (1.0 + norm);
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < tol)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Cplx ApPoly::coeff(const Coords& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Cplx(0, 0) : it->second;
}

Cplx ApPoly::bohr_mean() const {
    if (!basis_) return Cplx(0, 0);
    return coeff(Coords(basis_->rank_r(), 0));
}

std::vector<Frequency> ApPoly::spectrum() const {
    std::vector<Frequency> s;
    s.reserve(terms_.size());
    for (const auto& [c, v] : terms_) s.emplace_back(c, basis_);
    return s;
}

double ApPoly::wiener_norm() const {
    double n = 0.0;
    for (const auto& [c, v] : terms_) n += std::abs(v);
    return n;
}

double ApPoly::sup_norm_estimate(long long grid_density, std::uint64_t seed) const {
    if (grid_density < 1) throw DomainError("sup_norm_estimate: grid_density >= 1 required");
    if (terms_.empty()) return 0.0;
    TorusGrid grid(basis_->rank_r(), grid_density, seed);
    double best = 0.0;
    for (long long i = 0; i < grid.size(); ++i)
        best = std::max(best, std::abs(torus_eval(grid.point(i))));
    return best;
}

Cplx ApPoly::eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != basis_->dim_k())
        throw DimensionError("eval: point length != dim_k");
    // Phase of e_lambda at x only depends on theta_j = <beta_j, x>.
    std::vector<double> theta(basis_->rank_r(), 0.0);
    for (int j = 0; j < basis_->rank_r(); ++j) {
        double t = 0.0;
        for (int i = 0; i < basis_->dim_k(); ++i)
            t += basis_->columns()(i, j).to_double() * x[i];
        theta[j] = t;
    }
    return torus_eval(theta);
}

Cplx ApPoly::torus_eval(const std::vector<double>& theta) const {
    if (static_cast<int>(theta.size()) != basis_->rank_r())
        throw DimensionError("torus_eval: phase length != rank_r");
    Cplx acc(0, 0);
    for (const auto& [c, v] : terms_) {
        double phase = 0.0;
        for (size_t j = 0; j < c.size(); ++j) phase += static_cast<double>(c[j]) * theta[j];
        acc += v * Cplx(std::cos(phase), std::sin(phase));
    }
    return acc;
}

ApPoly ApPoly::conj() const {
    ApPoly r(basis_);
    for (const auto& [c, v] : terms_) r.terms_.emplace(coords_neg(c), std::conj(v));
    return r;
}

ApPoly ApPoly::operator-() const { return scaled(Cplx(-1, 0)); }

ApPoly operator+(const ApPoly& f, const ApPoly& g) {
    require_same_basis(f.basis_, g.basis_, "ApPoly add");
    ApPoly r(f.basis_);
    r.terms_ = f.terms_;
    for (const auto& [c, v] : g.terms_) r.insert_term(c, v);
    r.normalize();
    return r;
}

ApPoly operator-(const ApPoly& f, const ApPoly& g) { return f + (-g); }

ApPoly operator*(const ApPoly& f, const ApPoly& g) {
    require_same_basis(f.basis_, g.basis_, "ApPoly mul");
    ApPoly r(f.basis_);
    for (const auto& [cf, vf] : f.terms_)
        for (const auto& [cg, vg] : g.terms_) r.insert_term(coords_add(cf, cg), vf * vg);
    r.normalize();
    return r;
}

ApPoly ApPoly::scaled(Cplx c) const {
    ApPoly r(basis_);
    if (c == Cplx(0, 0)) return r;
    for (const auto& [co, v] : terms_) r.terms_.emplace(co, v * c);
    r.normalize();
    return r;
}

ApPoly ApPoly::shifted(const Coords& delta) const {
    if (delta.size() != static_cast<size_t>(basis_->rank_r()))
        throw DimensionError("shift coords length != basis rank");
    ApPoly r(basis_);
    for (const auto& [c, v] : terms_) r.terms_.emplace(coords_add(c, delta), v);
    return r;
}

double ApPoly::wiener_distance(const ApPoly& g) const {
    require_same_basis(basis_, g.basis_, "wiener_distance");
    double d = 0.0;
    auto it = terms_.begin();
    auto jt = g.terms_.begin();
    while (it != terms_.end() || jt != g.terms_.end()) {
        if (jt == g.terms_.end() || (it != terms_.end() && it->first < jt->first)) {
            d += std::abs(it->second);
            ++it;
        } else if (it == terms_.end() || jt->first < it->first) {
            d += std::abs(jt->second);
            ++jt;
        } else {
            d += std::abs(it->second - jt->second);
            ++it;
            ++jt;
        }
    }
    return d;
}

ApPoly ApPoly::rebase(const BasisPtr& target) const {
    if (!target) throw BasisMismatchError("rebase: null target basis");
    if (target->dim_k() != basis_->dim_k())
        throw DimensionError("rebase: ambient dimensions differ");
    ApPoly r(target);
    for (const auto& [c, v] : terms_) {
        RationalVector lam = basis_->embed(c);
        RationalVector x;
        if (!target->columns().solve(lam, x))
            throw BasisMismatchError("rebase: frequency " + coords_str(c) +
                                     " is not in the span of the target basis");
        Coords nc(x.size());
        for (size_t j = 0; j < x.size(); ++j) {
            if (!x[j].is_integer())
                throw BasisMismatchError("rebase: frequency " + coords_str(c) +
                                         " has non-integer coordinates over the target basis");
            nc[j] = x[j].to_integer();
        }
        r.insert_term(nc, v);
    }
    r.normalize();
    return r;
}

ApPoly ApPoly::trimmed(double tol) const {
    ApPoly r(basis_);
    for (const auto& [c, v] : terms_)
        if (std::abs(v) > tol) r.terms_.emplace(c, v);
    return r;
}

Cplx bohr_inner(const ApPoly& f, const ApPoly& g) {
    require_same_basis(f.basis(), g.basis(), "bohr_inner");
    // M{f g*} = sum_lambda f_lambda conj(g_lambda)
    Cplx acc(0, 0);
    const auto& a = f.terms();
    const auto& b = g.terms();
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (it->first < jt->first)
            ++it;
        else if (jt->first < it->first)
            ++jt;
        else {
            acc += it->second * std::conj(jt->second);
            ++it;
            ++jt;
        }
    }
    return acc;
}

} // namespace apw
