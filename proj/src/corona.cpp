#include "apw/corona.hpp"

#include <cmath>

namespace apw {

namespace {

void require_spectrum_in_S(const ApMatrix& M, const HalfspacePtr& S, const char* who) {
    SpectralMask in_s(MaskKind::S, S);
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            for (const auto& [c, v] : M.at(i, j).terms())
                if (!in_s.accepts(Frequency(c, M.basis())))
                    throw DomainError(std::string(who) + ": spectrum not contained in S");
}

LaurentMatrix adjugate(const LaurentMatrix& M) {
    const int n = M.rows();
    LaurentMatrix adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = LaurentPoly::one();
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = M.at(r, c);
                }
                ++rr;
            }
            LaurentPoly cof = minor.det();
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(i, j) = cof;
        }
    return adj;
}

LaurentMatrix constant_to_laurent(const Eigen::MatrixXcd& W) {
    LaurentMatrix r(static_cast<int>(W.rows()), static_cast<int>(W.cols()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            if (W(i, j) != Cplx(0, 0)) r.at(i, j) = LaurentPoly::constant(W(i, j));
    return r;
}

// Coefficient mass at strictly positive powers; certifies minus-sidedness.
double strict_plus_mass(const LaurentMatrix& M) {
    double s = 0.0;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) {
            const LaurentPoly& p = M.at(i, j);
            if (p.is_zero()) continue;
            for (long long t = std::max<long long>(1, p.low()); t <= p.high(); ++t)
                s += std::abs(p.coeff(t));
        }
    return s;
}

ApMatrix signature_matrix(const std::vector<int>& diag, const BasisPtr& basis) {
    ApMatrix J(static_cast<int>(diag.size()), static_cast<int>(diag.size()), basis);
    for (size_t i = 0; i < diag.size(); ++i)
        J.set(static_cast<int>(i), static_cast<int>(i),
              ApPoly::constant(basis, Cplx(diag[i], 0)));
    return J;
}

} // namespace

RightCoprimeResult right_coprime_from_left(const ApMatrix& A, const ApMatrix& B,
                                           const HalfspacePtr& S, const CoronaOptions& opts) {
    const int p = A.rows(), m = A.cols();
    if (B.rows() != p || B.cols() != p)
        throw DimensionError("right_coprime_from_left: B must be p x p");
    require_spectrum_in_S(A, S, "right_coprime_from_left(A)");
    require_spectrum_in_S(B, S, "right_coprime_from_left(B)");

    Rank1Reduction red = Rank1Reduction::joint(A, B, S);
    LaurentMatrix la = red.to_laurent(A);
    LaurentMatrix lb = red.to_laurent(B);

    if (B.min_abs_det_estimate(opts.grid, opts.seed) < 1e-9)
        throw DomainError("right_coprime_from_left: B is not invertible (sampled |det B| < 1e-9)");

    // Left coprimeness certificate: [A B] V = [L 0] with L invertible over
    // the plus algebra (no common zero in the closed disc).
    {
        ColHermite ch = hermite_cols(LaurentMatrix::hcat(la, lb));
        bool ok = ch.rank == p;
        if (ok)
            for (int i = 0; i < p; ++i)
                if (!is_unit(ch.L.at(i, i), UnitDomain::disc)) ok = false;
        if (!ok)
            throw CoprimenessError(
                "(A, B) is not left coprime over the plus algebra (common zero in the disc)");
    }

    // Fraction clearing B^{-1}A = C0 D0^{-1} with D0 = det(B) I, then GCRD
    // cancellation by a row Hermite reduction of the stacked matrix; the
    // Bezout certificate falls out of the recorded transform.
    LaurentPoly d = lb.det();
    LaurentMatrix C0 = adjugate(lb) * la;
    LaurentMatrix D0(m, m);
    for (int i = 0; i < m; ++i) D0.at(i, i) = d;

    RowHermite rh = hermite_rows(LaurentMatrix::vcat(D0, C0));
    if (rh.rank != m) throw Error(ErrorClass::internal, "right coprime reduction lost rank");
    LaurentMatrix DC = rh.Uinv.submatrix(0, 0, m + p, m);
    LaurentMatrix lD = DC.submatrix(0, 0, m, m);
    LaurentMatrix lC = DC.submatrix(m, 0, p, m);
    LaurentMatrix lX = rh.U.submatrix(0, 0, m, m);
    LaurentMatrix lY = rh.U.submatrix(0, m, m, p);

    RightCoprimeResult out;
    out.C = red.to_ap(lC);
    out.D = red.to_ap(lD);
    out.X = red.to_ap(lX);
    out.Y = red.to_ap(lY);
    out.resid_ad_bc = (la * lD - lb * lC).norm1_max();
    out.resid_bezout = (lX * lD + lY * lC - LaurentMatrix::identity(m)).norm1_max();
    out.det_d_floor = out.D.min_abs_det_estimate(opts.grid, opts.seed);
    if (out.det_d_floor < 1e-9)
        throw DegenerateError("right coprime factorization: D is not invertible on the torus");
    if (out.resid_bezout > 1e-8)
        throw CoprimenessError("right coprime Bezout certificate residual too large");
    return out;
}

SymmetricFactorization symmetric_factorize(const ApMatrix& H, const HalfspacePtr& S,
                                           const CoronaOptions& opts) {
    if (H.rows() != H.cols()) throw DimensionError("symmetric_factorize: square input required");
    if (!H.is_hermitian())
        throw DomainError("symmetric_factorize: input is not Hermitian-valued");
    const int m = H.rows();

    // T(H) invertibility probe (canonical factorability of H^T, which for
    // Hermitian H is the right-sided factorability of H itself).
    CanonicalTestResult ct = canonical_test(
        H.transpose(), S, CutoffSpec{std::max<long long>(8, opts.cutoff / 2), opts.cutoff});
    if (ct.verdict != CanonicalVerdict::likely_canonical)
        throw DomainError("symmetric_factorize: no canonical factorization at this truncation (" +
                          std::string(to_string(ct.verdict)) + ")");

    Rank1Reduction red = Rank1Reduction::of(H, S);
    LaurentMatrix lh = red.to_laurent(H);
    const long long N = opts.cutoff;

    // Phi = T_N(H)^{-1} E0 approximates (M+)^{-1} K0 for the right canonical
    // factorization H = M- M+.
    const Eigen::Index dim = static_cast<Eigen::Index>(N + 1) * m;
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(dim, dim);
    for (long long a = 0; a <= N; ++a)
        for (long long b = 0; b <= N; ++b)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) T(a * m + i, b * m + j) = lh.at(i, j).coeff(a - b);
    Eigen::MatrixXcd E0 = Eigen::MatrixXcd::Zero(dim, m);
    for (int i = 0; i < m; ++i) E0(i, i) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(T);
    if (!lu.isInvertible())
        throw DomainError("symmetric_factorize: truncated Toeplitz matrix is singular");
    Eigen::MatrixXcd Phi_flat = lu.solve(E0);

    LaurentMatrix Phi(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<Cplx> c(static_cast<size_t>(N + 1));
            for (long long t = 0; t <= N; ++t) c[t] = Phi_flat(t * m + i, j);
            Phi.at(i, j) = LaurentPoly(0, std::move(c)).trimmed(1e-16);
        }

    SymmetricFactorization out;
    // H Phi is a minus function in the limit; its strictly-plus mass
    // measures the truncation.
    LaurentMatrix HPhi = lh * Phi;
    out.residuals["minus_side_deviation"] = strict_plus_mass(HPhi);

    // K = Phi* H Phi is constant and Hermitian in the limit.
    LaurentMatrix Kfull = Phi.conj_transpose() * HPhi;
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(m, m);
    double nonconst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const LaurentPoly& q = Kfull.at(i, j);
            K(i, j) = q.coeff(0);
            if (q.is_zero()) continue;
            for (long long t = q.low(); t <= q.high(); ++t)
                if (t != 0) nonconst += std::abs(q.coeff(t));
        }
    out.residuals["middle_constant_deviation"] = nonconst;
    Eigen::MatrixXcd Kh = 0.5 * (K + K.adjoint());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Kh);
    if (es.info() != Eigen::Success)
        throw Error(ErrorClass::internal, "eigensolve of the middle constant failed");
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return es.eigenvalues()(a) > es.eigenvalues()(b); });
    Eigen::VectorXd ev(m);
    Eigen::MatrixXcd Q(m, m);
    for (int i = 0; i < m; ++i) {
        ev(i) = es.eigenvalues()(order[i]);
        Q.col(i) = es.eigenvectors().col(order[i]);
    }
    for (int i = 0; i < m; ++i)
        if (std::abs(ev(i)) < 1e-10)
            throw InconsistencyError("symmetric_factorize: middle constant is singular");
    out.J0.resize(m);
    for (int i = 0; i < m; ++i) out.J0[i] = ev(i) > 0 ? 1 : -1;
    Eigen::MatrixXcd W = Eigen::VectorXd(ev.array().abs().sqrt()).asDiagonal() * Q.adjoint();
    Eigen::MatrixXcd Winv = Q * Eigen::MatrixXcd(
        Eigen::VectorXd(ev.array().abs().sqrt().inverse()).asDiagonal());

    // Sampled inertia of H(theta) must equal the signature everywhere.
    {
        TorusGrid grid(H.basis()->rank_r(), std::min<long long>(opts.grid, 64), opts.seed);
        int pos = 0, neg = 0;
        for (int s : out.J0) (s > 0 ? pos : neg)++;
        for (long long g = 0; g < grid.size(); ++g) {
            Eigen::MatrixXcd Hv = H.torus_eval(grid.point(g));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(0.5 * (Hv + Hv.adjoint()),
                                                               Eigen::EigenvaluesOnly);
            int gp = 0, gn = 0;
            for (int i = 0; i < m; ++i) (hs.eigenvalues()(i) > 0 ? gp : gn)++;
            if (gp != pos || gn != neg)
                throw InconsistencyError(
                    "symmetric_factorize: sampled inertia disagrees with the signature");
        }
    }

    // R = W Phi^{-1} (plus), R^{-1} = Phi W^{-1} (plus, exact polynomial).
    LaurentMatrix PhiInv = plus_matrix_inverse_series(Phi, N);
    LaurentMatrix lR = constant_to_laurent(W) * PhiInv;
    LaurentMatrix lRinv = Phi * constant_to_laurent(Winv);

    LaurentMatrix J0m(m, m);
    for (int i = 0; i < m; ++i) J0m.at(i, i) = LaurentPoly::constant(Cplx(out.J0[i], 0));
    out.residuals["symmetric_reconstruction"] =
        (lR.conj_transpose() * J0m * lR - lh).norm1_max();
    out.residuals["inverse_certificate"] =
        (lR * lRinv - LaurentMatrix::identity(m)).norm1_max();

    out.R = red.to_ap(lR.trimmed(1e-16));
    out.R_inv = red.to_ap(lRinv.trimmed(1e-16));
    return out;
}

namespace {

// F = gamma * num * den^{-1}, minus-side leak projected off and certified.
ParametrizeResult finish_parametrize(const CoronaSolution& sol, const ApMatrix& num,
                                     const ApMatrix& den, const CoronaOptions& opts) {
    Rank1Reduction red = Rank1Reduction::joint(num, den, sol.S);
    LaurentMatrix lden = red.to_laurent(den);
    lden = lden.trimmed(1e-14 * std::max(1.0, lden.norm1_max()));
    LaurentMatrix ldeninv = wiener_matrix_inverse(lden, opts.tail_tol);
    LaurentMatrix lF = red.to_laurent(num) * ldeninv;
    ApMatrix Ffull = red.to_ap(lF).scaled(Cplx(sol.gamma, 0));
    ApMatrix Fproj = project(Ffull, MaskKind::S, sol.S);
    ParametrizeResult out;
    out.residuals["minus_mass"] = Ffull.max_entry_wiener_distance(Fproj);
    out.F = Fproj.trimmed(1e-14);
    return out;
}

} // namespace

CoronaSolution corona_solve(const ApMatrix& A, const ApMatrix& B, double gamma,
                            const HalfspacePtr& S, const CoronaOptions& opts) {
    const int p = A.rows(), m = A.cols();
    if (B.rows() != p || B.cols() != p) throw DimensionError("corona_solve: B must be p x p");
    if (m < p) throw DimensionError("corona_solve: requires m >= p");
    if (!(gamma > 0)) throw DomainError("corona_solve: gamma must be positive");
    require_spectrum_in_S(A, S, "corona_solve(A)");
    require_spectrum_in_S(B, S, "corona_solve(B)");

    CoronaSolution sol;
    sol.m = m;
    sol.p = p;
    sol.gamma = gamma;
    sol.S = S;

    // Stage 1: Gram necessity test at this cutoff.
    GramReport gram = gram_test(A, B, gamma, S, opts.cutoff, opts.grid, opts.seed);
    sol.residuals["gram_margin"] = gram.margin;
    if (!(gram.margin >= opts.min_gram_margin))
        throw InfeasibleError("corona_solve[gram]: Gram margin " + std::to_string(gram.margin) +
                              " below the positivity threshold (no solution at this gamma, up to "
                              "truncation)");

    // Stage 2: rescale and factor right coprime.
    ApMatrix B1 = B.scaled(Cplx(1.0 / gamma, 0));
    RightCoprimeResult rc = [&] {
        try {
            return right_coprime_from_left(A, B1, S, opts);
        } catch (const Error& e) {
            throw Error(e.error_class(), std::string("corona_solve[coprime]: ") + e.what());
        }
    }();
    sol.C = rc.C;
    sol.D = rc.D;
    sol.residuals["coprime_ad_bc"] = rc.resid_ad_bc;
    sol.residuals["coprime_bezout"] = rc.resid_bezout;

    // Stage 3: H = D*D - C*C (exactly Hermitized), then H = R* J0 R.
    ApMatrix H = rc.D.conj_transpose() * rc.D - rc.C.conj_transpose() * rc.C;
    H = (H + H.conj_transpose()).scaled(Cplx(0.5, 0));
    SymmetricFactorization sf = [&] {
        try {
            return symmetric_factorize(H, S, opts);
        } catch (const Error& e) {
            throw Error(e.error_class(), std::string("corona_solve[symmetric]: ") + e.what());
        }
    }();
    sol.R = sf.R;
    sol.J0 = sf.J0;
    for (const auto& [k, v] : sf.residuals) sol.residuals["symmetric_" + k] = v;

    // The proof pins the signature to diag(I_{m-p}, -I_p); anything else
    // signals a truncation or coprimeness problem.
    int pos = 0, neg = 0;
    for (int s : sf.J0) (s > 0 ? pos : neg)++;
    if (pos != m - p || neg != p)
        throw InconsistencyError(
            "corona_solve[signature]: J0 is not diag(I_{m-p}, -I_p); truncation too coarse or "
            "inputs not coprime");

    // Stage 4: Theta = [D; C] R^{-1}, (J0, J1)-isometric.
    ApMatrix Theta = ApMatrix::vcat(rc.D, rc.C) * sf.R_inv;
    std::vector<int> j1(m + p, 1);
    for (int i = m; i < m + p; ++i) j1[i] = -1;
    ApMatrix J1 = signature_matrix(j1, A.basis());
    ApMatrix J0m = signature_matrix(sf.J0, A.basis());
    sol.residuals["theta_isometry"] =
        (Theta.conj_transpose() * J1 * Theta - J0m).max_entry_wiener_norm();
    if (m > p) {
        sol.Theta11 = Theta.submatrix(0, 0, m, m - p);
        sol.Theta21 = Theta.submatrix(m, 0, p, m - p);
    }
    sol.Theta12 = Theta.submatrix(0, m - p, m, p);
    sol.Theta22 = Theta.submatrix(m, m - p, p, p);

    // Stage 5: central solution F0 = gamma * Theta12 Theta22^{-1}.
    ParametrizeResult central = [&] {
        try {
            return corona_parametrize(sol, std::nullopt, opts);
        } catch (const Error& e) {
            throw Error(e.error_class(), std::string("corona_solve[central]: ") + e.what());
        }
    }();
    sol.F0 = central.F;
    for (const auto& [k, v] : central.residuals) sol.residuals[k] = v;

    sol.residuals["solution_residual"] = (A * sol.F0 - B).max_entry_wiener_norm();
    sol.residuals["sup_norm_estimate"] = sol.F0.sup_opnorm_estimate(opts.grid, opts.seed);
    return sol;
}

ParametrizeResult corona_parametrize(const CoronaSolution& sol, const std::optional<ApMatrix>& G,
                                     const CoronaOptions& opts) {
    const int m = sol.m, p = sol.p;
    ApMatrix num = sol.Theta12;
    ApMatrix den = sol.Theta22;
    if (m == p) {
        if (G) throw DomainError("corona_parametrize: m == p admits only the empty parameter");
    } else if (G) {
        if (G->rows() != m - p || G->cols() != p)
            throw DimensionError("corona_parametrize: G must be (m-p) x p");
        require_spectrum_in_S(*G, sol.S, "corona_parametrize(G)");
        double gnorm = G->sup_opnorm_estimate(opts.grid, opts.seed);
        if (gnorm > 1.0 + 1e-9)
            throw DomainError("corona_parametrize: parameter is not contractive (sampled norm " +
                              std::to_string(gnorm) + ")");
        num = *sol.Theta11 * *G + sol.Theta12;
        den = *sol.Theta21 * *G + sol.Theta22;
    }
    if (den.min_abs_det_estimate(opts.grid, opts.seed) < 1e-8)
        throw DomainError("corona_parametrize: denominator nearly singular on the torus");
    ParametrizeResult out = finish_parametrize(sol, num, den, opts);
    if (G && m > p) {
        ApMatrix Grec = corona_recover_parameter(sol, out.F, opts);
        out.residuals["parameter_round_trip"] = Grec.max_entry_wiener_distance(*G);
    }
    return out;
}

ApMatrix corona_recover_parameter(const CoronaSolution& sol, const ApMatrix& F,
                                  const CoronaOptions& opts) {
    if (sol.m == sol.p)
        throw DomainError("corona_recover_parameter: no free parameter when m == p");
    ApMatrix Fs = F.scaled(Cplx(1.0 / sol.gamma, 0));
    // G = -(Theta11* F - Theta21*)(Theta12* F - Theta22*)^{-1}; the sign
    // makes the round trip the identity for a (J0, J1)-isometric Theta.
    ApMatrix num = sol.Theta11->conj_transpose() * Fs - sol.Theta21->conj_transpose();
    ApMatrix den = sol.Theta12.conj_transpose() * Fs - sol.Theta22.conj_transpose();
    Rank1Reduction red = Rank1Reduction::joint(num, den, sol.S);
    LaurentMatrix lden = red.to_laurent(den);
    lden = lden.trimmed(1e-14 * std::max(1.0, lden.norm1_max()));
    LaurentMatrix ldeninv = wiener_matrix_inverse(lden, opts.tail_tol);
    LaurentMatrix lG = red.to_laurent(num) * ldeninv;
    ApMatrix G = red.to_ap(lG).scaled(Cplx(-1.0, 0));
    return project(G, MaskKind::S, sol.S).trimmed(1e-12);
}

} // namespace apw
