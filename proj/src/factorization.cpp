#include "apw/factorization.hpp"

#include <cmath>

#include "apw/toeplitz.hpp"

namespace apw {

namespace {

// z -> 1/z on coefficients: maps the minus Wiener algebra onto the plus one.
LaurentPoly flip(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Cplx> c(p.coeffs().rbegin(), p.coeffs().rend());
    return LaurentPoly(-p.high(), std::move(c));
}

LaurentMatrix flip(const LaurentMatrix& m) {
    LaurentMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = flip(m.at(i, j));
    return r;
}

} // namespace

const char* to_string(FactorStatus s) {
    switch (s) {
        case FactorStatus::factored: return "factored";
        case FactorStatus::canonical: return "canonical";
        case FactorStatus::not_invertible: return "not_invertible";
        case FactorStatus::unsupported_rank: return "unsupported_rank";
        case FactorStatus::completion_failed: return "completion_failed";
    }
    return "?";
}

const char* to_string(CanonicalVerdict v) {
    switch (v) {
        case CanonicalVerdict::likely_canonical: return "likely_canonical";
        case CanonicalVerdict::not_canonical_evidence: return "not_canonical_evidence";
        case CanonicalVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

ApMatrix ApFactorization::middle() const {
    ApMatrix d(p, p, g_plus.basis());
    for (int i = 0; i < p; ++i)
        d.set(i, i, ApPoly::character(g_plus.basis(), indices[i], Cplx(1, 0)));
    return d;
}

std::pair<ApMatrix, ApMatrix> trivial_representation(const ApMatrix& G, const HalfspacePtr& S) {
    ApMatrix plus_part = project(G, MaskKind::S, S);
    ApMatrix minus_part = project(G, MaskKind::MinusSMinusZero, S);
    ApMatrix g_plus = ApMatrix::hcat(plus_part, ApMatrix::identity(G.rows(), G.basis()));
    ApMatrix g_minus = ApMatrix::vcat(ApMatrix::identity(G.cols(), G.basis()), minus_part);
    return {g_plus, g_minus};
}

FactorizationReport scalar_factorize(const ApPoly& g, const HalfspacePtr& S,
                                     const FactorizationOptions& opts) {
    FactorizationReport rep;
    if (g.is_zero()) {
        rep.status = FactorStatus::not_invertible;
        rep.diagnostics = "zero symbol";
        return rep;
    }
    ApMatrix G = ApMatrix::scalar(g);
    try {
        Rank1Reduction red = Rank1Reduction::of(G, S);
        LaurentPoly p = red.to_laurent(g);
        SpectralSplit split = spectral_split(p);
        // One-sided invertibility certificates; throws when the split is bad.
        (void)laurent_inverse_truncated(split.plus, Side::plus, opts.tail_tol);
        (void)laurent_inverse_truncated(split.minus, Side::minus, opts.tail_tol);

        ApFactorization f;
        f.halfspace = S;
        f.p = 1;
        f.indices = {red.frequency_of(split.w)};
        f.g_plus = ApMatrix::scalar(red.to_ap(split.plus));
        f.g_minus = ApMatrix::scalar(red.to_ap(split.minus));
        f.residual = f.reconstruct().max_entry_wiener_distance(G);
        rep.status = split.w == 0 ? FactorStatus::canonical : FactorStatus::factored;
        rep.factorization = std::move(f);
    } catch (const NotCommensurableError& e) {
        rep.status = FactorStatus::unsupported_rank;
        rep.diagnostics = e.what();
    } catch (const DegenerateError& e) {
        rep.status = FactorStatus::not_invertible;
        rep.diagnostics = e.what();
    }
    return rep;
}

FactorizationReport row_factorize(const ApMatrix& G, std::optional<int> pivot,
                                  const HalfspacePtr& S, const FactorizationOptions& opts) {
    FactorizationReport rep;
    if (G.rows() != 1) throw DimensionError("row_factorize expects a 1 x n matrix");
    const int n = G.cols();

    Rank1Reduction red = [&]() {
        try {
            return Rank1Reduction::of(G, S);
        } catch (const NotCommensurableError&) {
            throw;
        }
    }();

    // Pivot choice: caller-supplied, else the first entry that factorizes.
    int piv = -1;
    if (pivot) {
        if (*pivot < 0 || *pivot >= n) throw DimensionError("row_factorize: pivot out of range");
        piv = *pivot;
        if (!scalar_factorize(G.at(0, piv), S, opts).ok()) {
            rep.status = FactorStatus::not_invertible;
            rep.diagnostics = "pivot entry is not invertible";
            return rep;
        }
    } else {
        for (int j = 0; j < n && piv < 0; ++j)
            if (scalar_factorize(G.at(0, j), S, opts).ok()) piv = j;
        if (piv < 0) {
            rep.status = FactorStatus::not_invertible;
            rep.diagnostics = "no invertible entry to pivot on";
            return rep;
        }
    }

    try {
        LaurentPoly p1 = red.to_laurent(G.at(0, piv));
        SpectralSplit split = spectral_split(p1);
        LaurentPoly plus_inv = laurent_inverse_truncated(split.plus, Side::plus, opts.tail_tol);
        LaurentPoly minus_inv = laurent_inverse_truncated(split.minus, Side::minus, opts.tail_tol);
        LaurentPoly g1_inv = (plus_inv * minus_inv).shifted(-split.w);

        // Source column order: pivot first, then the rest in place.
        std::vector<int> order;
        order.push_back(piv);
        for (int j = 0; j < n; ++j)
            if (j != piv) order.push_back(j);

        ApMatrix g_plus(1, n, G.basis());
        ApMatrix g_minus(n, n, G.basis());
        g_plus.set(0, 0, red.to_ap(split.plus));
        for (int t = 0; t < n; ++t) g_minus.set(t, t, red.to_ap(split.minus));
        for (int t = 1; t < n; ++t) {
            LaurentPoly gj = red.to_laurent(G.at(0, order[t]));
            LaurentPoly w = g1_inv * gj;
            // h_j^+ = g1^+ Pi_S(g1^{-1} g_j), h_j^- = g1^- Pi_{(-S)\0}(g1^{-1} g_j)
            g_plus.set(0, t, red.to_ap(split.plus * w.plus_part()));
            g_minus.set(0, t, red.to_ap(split.minus * w.minus_part(false)));
        }

        // Undo the pivot permutation on the minus factor's columns so the
        // product reproduces G in its original column order.
        ApMatrix g_minus_final(n, n, G.basis());
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < n; ++s) g_minus_final.set(t, order[s], g_minus.at(t, s));

        ApFactorization f;
        f.halfspace = S;
        f.p = n;
        f.indices.assign(n, red.frequency_of(split.w));
        f.g_plus = g_plus;
        f.g_minus = g_minus_final;
        f.residual = f.reconstruct().max_entry_wiener_distance(G);
        rep.status = split.w == 0 ? FactorStatus::canonical : FactorStatus::factored;
        rep.factorization = std::move(f);
    } catch (const DegenerateError& e) {
        rep.status = FactorStatus::not_invertible;
        rep.diagnostics = e.what();
    }
    return rep;
}

Augmentation augment_to_square(const ApMatrix& G, const ApFactorization& fact,
                               const HalfspacePtr& S, const FactorizationOptions& opts) {
    const int m = G.rows(), n = G.cols();
    if (m == n) throw DimensionError("augment_to_square: G is already square");
    if (fact.p != std::max(m, n))
        throw DomainError("augment_to_square: factorization must satisfy p = max{m,n}");

    Augmentation out;
    if (m < n) {
        // Complete the right-invertible plus factor by rows over the plus ring.
        Rank1Reduction red = Rank1Reduction::of(fact.g_plus, S);
        LaurentMatrix gp = red.to_laurent(fact.g_plus);
        LaurentMatrix Fp;
        try {
            Fp = complete_rows(gp, UnitDomain::disc, 1e-10, opts.tail_tol);
        } catch (const CompletionError&) {
            throw;
        }
        ApMatrix Fplus = red.to_ap(Fp);
        ApFactorization ff;
        ff.halfspace = fact.halfspace;
        ff.p = fact.p;
        ff.indices = fact.indices;
        ff.g_plus = Fplus;
        ff.g_minus = fact.g_minus;
        ApMatrix F = ff.reconstruct();
        // First m rows are G by construction; pin them exactly.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) F.set(i, j, G.at(i, j));
        ff.residual = ff.reconstruct().max_entry_wiener_distance(F);
        out.F = F;
        out.fact = ff;
        return out;
    }

    // m > n: complete the left-invertible minus factor by columns. Flip
    // z -> 1/z to reuse the plus-ring row completion.
    Rank1Reduction red = Rank1Reduction::of(fact.g_minus, S);
    LaurentMatrix gm = red.to_laurent(fact.g_minus);
    LaurentMatrix flipped = flip(gm).transpose(); // n x p over the plus ring
    LaurentMatrix comp = complete_rows(flipped, UnitDomain::disc, 1e-10, opts.tail_tol);
    LaurentMatrix Fm = flip(comp.transpose());
    ApMatrix Fminus = red.to_ap(Fm);
    ApFactorization ff;
    ff.halfspace = fact.halfspace;
    ff.p = fact.p;
    ff.indices = fact.indices;
    ff.g_plus = fact.g_plus;
    ff.g_minus = Fminus;
    ApMatrix F = ff.reconstruct();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) F.set(i, j, G.at(i, j));
    ff.residual = ff.reconstruct().max_entry_wiener_distance(F);
    out.F = F;
    out.fact = ff;
    return out;
}

VerifyReport verify_factorization(const ApMatrix& G, const ApFactorization& fact,
                                  const FactorizationOptions& opts) {
    VerifyReport r;
    r.shapes_ok = fact.g_plus.rows() == G.rows() && fact.g_minus.cols() == G.cols() &&
                  fact.g_plus.cols() == fact.p && fact.g_minus.rows() == fact.p &&
                  static_cast<int>(fact.indices.size()) == fact.p;
    if (!r.shapes_ok) {
        r.diagnostics = "shape mismatch";
        return r;
    }
    r.residual = fact.reconstruct().max_entry_wiener_distance(G);

    const HalfspacePtr& S = fact.halfspace;
    SpectralMask in_s(MaskKind::S, S);
    SpectralMask in_minus(MaskKind::MinusS, S);
    r.plus_mask_ok = r.minus_mask_ok = true;
    for (int i = 0; i < fact.g_plus.rows(); ++i)
        for (int j = 0; j < fact.g_plus.cols(); ++j)
            for (const auto& [c, v] : fact.g_plus.at(i, j).terms())
                if (!in_s.accepts(Frequency(c, G.basis()))) r.plus_mask_ok = false;
    for (int i = 0; i < fact.g_minus.rows(); ++i)
        for (int j = 0; j < fact.g_minus.cols(); ++j)
            for (const auto& [c, v] : fact.g_minus.at(i, j).terms())
                if (!in_minus.accepts(Frequency(c, G.basis()))) r.minus_mask_ok = false;

    r.index_order_ok = true;
    for (size_t j = 1; j < fact.indices.size(); ++j) {
        Coords d = coords_sub(fact.indices[j], fact.indices[j - 1]);
        if (!S->contains(G.basis(), d)) r.index_order_ok = false;
    }

    try {
        Rank1Reduction red_p = Rank1Reduction::of(fact.g_plus, S);
        LaurentMatrix gp = red_p.to_laurent(fact.g_plus);
        auto rx = right_inverse_over(gp, UnitDomain::disc, 1e-10, opts.tail_tol);
        if (rx)
            r.plus_inverse_residual =
                (gp * (*rx) - LaurentMatrix::identity(gp.rows())).norm1_max();
        Rank1Reduction red_m = Rank1Reduction::of(fact.g_minus, S);
        LaurentMatrix gm_flipped = flip(red_m.to_laurent(fact.g_minus));
        auto lx = left_inverse_over(gm_flipped, UnitDomain::disc, 1e-10, opts.tail_tol);
        if (lx)
            r.minus_inverse_residual =
                ((*lx) * gm_flipped - LaurentMatrix::identity(gm_flipped.cols())).norm1_max();
        r.invertibility_checked = true;
        if (!rx) r.diagnostics += "plus factor: no right inverse over the plus algebra; ";
        if (!lx) r.diagnostics += "minus factor: no left inverse over the minus algebra; ";
    } catch (const NotCommensurableError&) {
        r.invertibility_checked = false;
        r.diagnostics += "one-sided invertibility not checked (spectrum rank >= 2); ";
    }
    return r;
}

CanonicalTestResult canonical_test(const ApMatrix& G, const HalfspacePtr& S,
                                   const CutoffSpec& cutoffs) {
    if (G.rows() != G.cols()) throw DimensionError("canonical_test expects a square matrix");
    CanonicalTestResult res;
    // Guard the scope restriction before building sections.
    (void)Rank1Reduction::of(G, S);

    ApMatrix GT = G.transpose();
    long long c = std::max<long long>(1, cutoffs.first);
    std::vector<double> sig;
    for (; c <= cutoffs.last; c *= 2) {
        TruncatedToeplitz t = toeplitz_truncate(GT, S, c);
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(t.matrix);
        double smin = svd.singularValues().size()
                          ? svd.singularValues()(svd.singularValues().size() - 1)
                          : 0.0;
        res.sigma_trend.emplace_back(c, smin);
        sig.push_back(smin);
        if (c == cutoffs.last) break;
        if (c * 2 > cutoffs.last) c = cutoffs.last / 2; // land exactly on `last`
    }
    if (sig.size() < 2) {
        res.verdict = CanonicalVerdict::inconclusive;
        res.diagnostics = "need at least two cutoffs";
        return res;
    }
    double s1 = sig[sig.size() - 2], s2 = sig.back();
    if (s2 < 1e-6) {
        res.verdict = CanonicalVerdict::not_canonical_evidence;
        res.diagnostics = "smallest singular value below tolerance (finite section rank-deficient)";
    } else if (s2 <= 0.4 * s1) {
        res.verdict = CanonicalVerdict::not_canonical_evidence;
        res.diagnostics = "smallest singular value decays geometrically across cutoffs";
    } else if (std::abs(s2 - s1) <= 0.25 * std::max(s1, s2)) {
        res.verdict = CanonicalVerdict::likely_canonical;
        res.diagnostics = "smallest singular value stabilized above tolerance";
    } else {
        res.verdict = CanonicalVerdict::inconclusive;
        res.diagnostics = "trend neither stabilized nor collapsing";
    }
    return res;
}

} // namespace apw
