#include "apw/rank1.hpp"

#include <numeric>

namespace apw {

namespace {

// All 2x2 minors of (a, b) vanish <=> parallel over Q.
bool parallel(const Coords& a, const Coords& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            __int128 m = static_cast<__int128>(a[i]) * b[j] - static_cast<__int128>(a[j]) * b[i];
            if (m != 0) return false;
        }
    return true;
}

long long content(const Coords& a) {
    long long g = 0;
    for (long long c : a) g = std::gcd(g, c < 0 ? -c : c);
    return g;
}

// a = n * w for primitive w; returns n.
long long multiplier(const Coords& a, const Coords& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) {
            long long n = a[i] / w[i];
            if (a[i] % w[i] != 0) throw NotCommensurableError("frequency off the rank-1 lattice");
            return n;
        }
    return 0;
}

} // namespace

Rank1Reduction::Rank1Reduction(const std::vector<const ApMatrix*>& inputs, const HalfspacePtr& S)
    : S_(S) {
    if (inputs.empty()) throw DimensionError("rank1 reduction of nothing");
    basis_ = inputs.front()->basis();
    for (const ApMatrix* g : inputs) require_same_basis(basis_, g->basis(), "rank1 reduction");
    if (!S_ || S_->dim_k() != basis_->dim_k())
        throw DimensionError("rank1 reduction: halfspace dimension mismatch");

    std::vector<Coords> nonzero;
    for (const ApMatrix* g : inputs)
        for (int i = 0; i < g->rows(); ++i)
            for (int j = 0; j < g->cols(); ++j)
                for (const auto& [c, v] : g->at(i, j).terms())
                    if (!coords_is_zero(c)) nonzero.push_back(c);

    if (nonzero.empty()) {
        // Constants only. Use the first basis generator (flipped into S) so
        // the generator invariant still holds; the map sends everything to z^0.
        if (basis_->rank_r() == 0) {
            generator_ = Coords{};
            return;
        }
        Coords g(basis_->rank_r(), 0);
        g[0] = 1;
        if (!S_->contains(basis_, g)) g[0] = -1;
        generator_ = g;
        return;
    }

    const Coords& c0 = nonzero.front();
    for (const Coords& c : nonzero)
        if (!parallel(c0, c))
            throw NotCommensurableError(
                "spectrum generates a subgroup of rank >= 2 (not commensurable)");

    Coords w = c0;
    long long ct = content(w);
    for (long long& v : w) v /= ct;
    long long g = 0;
    for (const Coords& c : nonzero) g = std::gcd(g, std::abs(multiplier(c, w)));
    Coords beta(w.size());
    for (size_t i = 0; i < w.size(); ++i) beta[i] = g * w[i];
    if (!S_->contains(basis_, beta)) beta = coords_neg(beta);
    generator_ = beta;
}

Rank1Reduction Rank1Reduction::of(const ApPoly& f, const HalfspacePtr& S) {
    ApMatrix m = ApMatrix::scalar(f);
    std::vector<const ApMatrix*> v{&m};
    return Rank1Reduction(v, S);
}

Rank1Reduction Rank1Reduction::of(const ApMatrix& g, const HalfspacePtr& S) {
    std::vector<const ApMatrix*> v{&g};
    return Rank1Reduction(v, S);
}

Rank1Reduction Rank1Reduction::joint(const ApMatrix& a, const ApMatrix& b, const HalfspacePtr& S) {
    std::vector<const ApMatrix*> v{&a, &b};
    return Rank1Reduction(v, S);
}

Coords Rank1Reduction::frequency_of(long long n) const {
    Coords c(generator_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = n * generator_[i];
    return c;
}

long long Rank1Reduction::exponent_of(const Coords& c) const {
    if (coords_is_zero(c)) return 0;
    if (generator_.empty() || coords_is_zero(generator_))
        throw NotCommensurableError("nonzero frequency over a rank-0 reduction");
    return multiplier(c, generator_);
}

LaurentPoly Rank1Reduction::to_laurent(const ApPoly& f) const {
    require_same_basis(basis_, f.basis(), "rank1 to_laurent");
    if (f.is_zero()) return LaurentPoly();
    long long lo = 0, hi = 0;
    bool first = true;
    std::vector<std::pair<long long, Cplx>> terms;
    for (const auto& [c, v] : f.terms()) {
        long long n = exponent_of(c);
        terms.emplace_back(n, v);
        if (first || n < lo) lo = n;
        if (first || n > hi) hi = n;
        first = false;
    }
    std::vector<Cplx> coeffs(static_cast<size_t>(hi - lo + 1), Cplx(0, 0));
    for (const auto& [n, v] : terms) coeffs[n - lo] += v;
    return LaurentPoly(lo, std::move(coeffs));
}

LaurentMatrix Rank1Reduction::to_laurent(const ApMatrix& g) const {
    require_same_basis(basis_, g.basis(), "rank1 to_laurent");
    LaurentMatrix r(g.rows(), g.cols());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) r.at(i, j) = to_laurent(g.at(i, j));
    return r;
}

ApPoly Rank1Reduction::to_ap(const LaurentPoly& p) const {
    std::vector<std::pair<Coords, Cplx>> terms;
    if (!p.is_zero())
        for (long long n = p.low(); n <= p.high(); ++n) {
            Cplx v = p.coeff(n);
            if (v != Cplx(0, 0)) terms.emplace_back(frequency_of(n), v);
        }
    return ApPoly::make(basis_, terms);
}

ApMatrix Rank1Reduction::to_ap(const LaurentMatrix& m) const {
    ApMatrix r(m.rows(), m.cols(), basis_);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(i, j, to_ap(m.at(i, j)));
    return r;
}

} // namespace apw
