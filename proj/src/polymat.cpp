#include "apw/polymat.hpp"

#include <algorithm>
#include <cmath>

namespace apw {

size_t LaurentMatrix::idx(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= n_)
        throw DimensionError("LaurentMatrix index out of range");
    return static_cast<size_t>(i) * n_ + j;
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = LaurentPoly::one();
    return r;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionError("LaurentMatrix add: shape mismatch");
    LaurentMatrix r(m_, n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionError("LaurentMatrix sub: shape mismatch");
    LaurentMatrix r(m_, n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (n_ != o.m_) throw DimensionError("LaurentMatrix mul: inner dimensions differ");
    LaurentMatrix r(m_, o.n_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < o.n_; ++j) {
            LaurentPoly acc;
            for (int t = 0; t < n_; ++t) acc = acc + at(i, t) * o.at(t, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

LaurentMatrix LaurentMatrix::scaled(Cplx c) const {
    LaurentMatrix r(m_, n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(c);
    return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(n_, m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

LaurentMatrix LaurentMatrix::conj_transpose() const {
    LaurentMatrix r(n_, m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j).conj_reflected();
    return r;
}

LaurentMatrix LaurentMatrix::submatrix(int i0, int j0, int rows, int cols) const {
    if (i0 < 0 || j0 < 0 || rows < 0 || cols < 0 || i0 + rows > m_ || j0 + cols > n_)
        throw DimensionError("LaurentMatrix::submatrix out of range");
    LaurentMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

LaurentMatrix LaurentMatrix::hcat(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.m_ != b.m_) throw DimensionError("hcat: row counts differ");
    LaurentMatrix r(a.m_, a.n_ + b.n_);
    for (int i = 0; i < a.m_; ++i) {
        for (int j = 0; j < a.n_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.n_; ++j) r.at(i, a.n_ + j) = b.at(i, j);
    }
    return r;
}

LaurentMatrix LaurentMatrix::vcat(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("vcat: column counts differ");
    LaurentMatrix r(a.m_ + b.m_, a.n_);
    for (int j = 0; j < a.n_; ++j) {
        for (int i = 0; i < a.m_; ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.m_; ++i) r.at(a.m_ + i, j) = b.at(i, j);
    }
    return r;
}

LaurentPoly LaurentMatrix::det() const {
    if (m_ != n_) throw DimensionError("det of non-square LaurentMatrix");
    if (m_ == 1) return at(0, 0);
    LaurentPoly acc;
    for (int j = 0; j < n_; ++j) {
        if (at(0, j).is_zero()) continue;
        LaurentMatrix minor(m_ - 1, n_ - 1);
        for (int i = 1; i < m_; ++i) {
            int cc = 0;
            for (int c = 0; c < n_; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = at(i, c);
            }
        }
        LaurentPoly term = at(0, j) * minor.det();
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Eigen::MatrixXcd LaurentMatrix::eval_circle(double theta) const {
    Eigen::MatrixXcd v(m_, n_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) v(i, j) = at(i, j).eval_circle(theta);
    return v;
}

double LaurentMatrix::norm1_max() const {
    double s = 0.0;
    for (const auto& p : e_) s = std::max(s, p.norm1());
    return s;
}

double LaurentMatrix::dist1_max(const LaurentMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionError("dist1_max: shape mismatch");
    double s = 0.0;
    for (size_t i = 0; i < e_.size(); ++i) s = std::max(s, (e_[i] - o.e_[i]).norm1());
    return s;
}

LaurentMatrix LaurentMatrix::trimmed(double tol) const {
    LaurentMatrix r(m_, n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].trimmed(tol);
    return r;
}

bool LaurentMatrix::is_zero(double tol) const {
    for (const auto& p : e_)
        if (p.norm_inf() > tol) return false;
    return true;
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, double zero_tol, LaurentPoly& q,
                 LaurentPoly& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.low() < 0 || b.low() < 0)
        throw DomainError("poly_divmod expects polynomial (low >= 0) operands");
    if (a.is_zero() || a.high() < b.high()) {
        q = LaurentPoly();
        r = a;
        return;
    }
    std::vector<Cplx> rem(static_cast<size_t>(a.high()) + 1, Cplx(0, 0));
    for (long long p = a.low(); p <= a.high(); ++p) rem[p] = a.coeff(p);
    long long db = b.high();
    Cplx lead = b.coeff(db);
    std::vector<Cplx> quo(static_cast<size_t>(a.high() - db) + 1, Cplx(0, 0));
    for (long long t = a.high(); t >= db; --t) {
        Cplx f = rem[t] / lead;
        if (f == Cplx(0, 0)) continue;
        quo[t - db] = f;
        for (long long j = b.low(); j <= db; ++j) rem[t - db + j] -= f * b.coeff(j);
        rem[t] = Cplx(0, 0);
    }
    q = LaurentPoly(0, std::move(quo));
    LaurentPoly rr(0, std::move(rem));
    r = rr.trimmed(zero_tol);
}

namespace {

// Tracked elementary column operations on a working row plus transform pair
// (V, Vinv) with row_in * V = row_work and [..] * Vinv recovering row_in.
struct RowWork {
    std::vector<LaurentPoly> row;
    LaurentMatrix V, Vinv;

    explicit RowWork(std::vector<LaurentPoly> r)
        : row(std::move(r)),
          V(LaurentMatrix::identity(static_cast<int>(row.size()))),
          Vinv(LaurentMatrix::identity(static_cast<int>(row.size()))) {}

    int n() const { return static_cast<int>(row.size()); }

    void swap_cols(int i, int j) {
        if (i == j) return;
        std::swap(row[i], row[j]);
        for (int t = 0; t < n(); ++t) std::swap(V.at(t, i), V.at(t, j));
        for (int t = 0; t < n(); ++t) std::swap(Vinv.at(i, t), Vinv.at(j, t));
    }

    // col_i += q * col_j  (V tracks it; Vinv gets the inverse row op)
    void add_col(int i, int j, const LaurentPoly& q) {
        if (q.is_zero()) return;
        row[i] = row[i] + q * row[j];
        for (int t = 0; t < n(); ++t) V.at(t, i) = V.at(t, i) + q * V.at(t, j);
        for (int t = 0; t < n(); ++t) Vinv.at(j, t) = Vinv.at(j, t) - q * Vinv.at(i, t);
    }

    // col_i *= u where u is c z^d (unit scaling)
    void scale_col(int i, Cplx c, long long d) {
        row[i] = row[i].scaled(c).shifted(d);
        for (int t = 0; t < n(); ++t) V.at(t, i) = V.at(t, i).scaled(c).shifted(d);
        Cplx cinv = Cplx(1, 0) / c;
        for (int t = 0; t < n(); ++t) Vinv.at(i, t) = Vinv.at(i, t).scaled(cinv).shifted(-d);
    }
};

double row_scale(const std::vector<LaurentPoly>& row) {
    double s = 0.0;
    for (const auto& p : row) s = std::max(s, p.norm_inf());
    return std::max(s, 1.0);
}

} // namespace

RowGcdReduction reduce_row_gcd(const std::vector<LaurentPoly>& row_in, bool allow_laurent_units,
                               double zero_tol) {
    if (row_in.empty()) throw DimensionError("empty row");
    RowWork w(row_in);
    double tol = zero_tol * row_scale(row_in);
    if (allow_laurent_units) {
        for (int i = 0; i < w.n(); ++i)
            if (!w.row[i].is_zero() && w.row[i].low() != 0)
                w.scale_col(i, Cplx(1, 0), -w.row[i].low());
    }
    for (int i = 0; i < w.n(); ++i)
        if (!w.row[i].is_zero() && w.row[i].low() < 0)
            throw DomainError("row reduction expects polynomial entries over this ring");

    auto degree_of = [](const LaurentPoly& p) { return p.is_zero() ? -1 : p.high(); };

    // Euclidean sweep: reduce against the minimal-degree entry until a
    // single nonzero entry remains.
    for (;;) {
        int piv = -1;
        long long best = -1;
        int nonzero = 0;
        for (int i = 0; i < w.n(); ++i) {
            w.row[i] = w.row[i].trimmed(tol);
            if (w.row[i].is_zero()) continue;
            ++nonzero;
            long long d = degree_of(w.row[i]);
            if (piv < 0 || d < best) {
                piv = i;
                best = d;
            }
        }
        if (nonzero <= 1) {
            if (piv > 0) w.swap_cols(0, piv);
            break;
        }
        for (int i = 0; i < w.n(); ++i) {
            if (i == piv || w.row[i].is_zero()) continue;
            LaurentPoly q, r;
            poly_divmod(w.row[i], w.row[piv], tol, q, r);
            w.add_col(i, piv, -q);
            w.row[i] = r;
        }
    }
    // Monic normalization of the pivot keeps downstream unit checks simple.
    if (!w.row[0].is_zero()) {
        Cplx lead = w.row[0].coeffs().back();
        if (std::abs(lead - Cplx(1, 0)) > 0) w.scale_col(0, Cplx(1, 0) / lead, 0);
    }
    RowGcdReduction out;
    out.g = w.row[0];
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    return out;
}

bool is_unit(const LaurentPoly& g, UnitDomain domain) {
    if (g.is_zero()) return false;
    if (domain == UnitDomain::laurent) return g.length() == 1;
    if (g.low() != 0) return false; // z divides g
    for (const Cplx& r : laurent_roots(g))
        if (std::abs(r) <= 1.0 + kCircleRootTol) return false;
    return true;
}

LaurentPoly unit_inverse(const LaurentPoly& g, UnitDomain domain, double tail_tol) {
    if (!is_unit(g, domain)) throw DegenerateError("not a unit of the requested ring");
    if (domain == UnitDomain::laurent)
        return LaurentPoly::monomial(Cplx(1, 0) / g.coeffs()[0], -g.low());
    return laurent_inverse_truncated(g, Side::plus, tail_tol);
}

std::optional<std::vector<LaurentPoly>> bezout_solve(const std::vector<LaurentPoly>& a,
                                                     double zero_tol) {
    if (a.empty()) throw DimensionError("bezout_solve: empty input");
    bool all_zero = true;
    for (const auto& p : a)
        if (!p.is_zero()) all_zero = false;
    if (all_zero) return std::nullopt;
    RowGcdReduction red = reduce_row_gcd(a, /*allow_laurent_units=*/true, zero_tol);
    if (!is_unit(red.g, UnitDomain::laurent)) return std::nullopt;
    Cplx ginv = Cplx(1, 0) / red.g.coeffs()[0];
    long long shift = -red.g.low();
    std::vector<LaurentPoly> b(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        b[i] = red.V.at(static_cast<int>(i), 0).scaled(ginv).shifted(shift);
    return b;
}

LaurentMatrix complete_unimodular_row(const std::vector<LaurentPoly>& row, UnitDomain domain,
                                      double zero_tol, double tail_tol) {
    const int n = static_cast<int>(row.size());
    if (n == 0) throw DimensionError("complete_unimodular_row: empty row");
    RowGcdReduction red =
        reduce_row_gcd(row, /*allow_laurent_units=*/domain == UnitDomain::laurent, zero_tol);
    if (!is_unit(red.g, domain))
        throw CompletionError("row is not unimodular over the requested ring");
    // row = [g, 0, ..., 0] * Vinv, so F := diag(g,1,..,1) * Vinv completes it;
    // the first row is overwritten with the exact input.
    LaurentMatrix F(n, n);
    for (int j = 0; j < n; ++j) F.at(0, j) = row[j];
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) F.at(i, j) = red.Vinv.at(i, j);
    (void)tail_tol;
    return F;
}

LaurentMatrix complete_rows(const LaurentMatrix& M, UnitDomain domain, double zero_tol,
                            double tail_tol) {
    const int m = M.rows(), n = M.cols();
    if (m > n) throw DimensionError("complete_rows: more rows than columns");
    if (m == n) return M;
    std::vector<LaurentPoly> first(n);
    for (int j = 0; j < n; ++j) first[j] = M.at(0, j);
    RowGcdReduction red =
        reduce_row_gcd(first, /*allow_laurent_units=*/domain == UnitDomain::laurent, zero_tol);
    if (!is_unit(red.g, domain))
        throw CompletionError("leading row is not unimodular over the requested ring");
    LaurentMatrix F1(n, n);
    for (int j = 0; j < n; ++j) F1.at(0, j) = first[j];
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) F1.at(i, j) = red.Vinv.at(i, j);
    if (m == 1) return F1;

    // M * F1^{-1} = [[1, 0], [c, M']] with M' = (M V)[1:,1:] polynomial and
    // c_i = (M V)[i,0] / g.
    LaurentMatrix MV = M * red.V;
    LaurentPoly ginv = unit_inverse(red.g, domain, tail_tol);
    LaurentMatrix Mp = MV.submatrix(1, 1, m - 1, n - 1);
    LaurentMatrix Fp = complete_rows(Mp, domain, zero_tol, tail_tol);

    // F = E * [[1,0],[0,Fp]] * F1 with E[i,0] = c_i.
    LaurentMatrix G(n, n);
    G.at(0, 0) = LaurentPoly::one();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) G.at(i, j) = Fp.at(i - 1, j - 1);
    LaurentMatrix EG = G;
    for (int i = 1; i < m; ++i) {
        LaurentPoly ci = MV.at(i, 0) * ginv;
        EG.at(i, 0) = ci; // E row i adds c_i * (row 0 of G) = [c_i, 0..0]
    }
    LaurentMatrix F = EG * F1;
    // First m rows are M up to the truncation in ginv; pin them exactly.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) F.at(i, j) = M.at(i, j);
    return F;
}

namespace {

// Shared row-staircase engine; column variant works on the transpose.
struct MatWork {
    LaurentMatrix A, U, Uinv;

    explicit MatWork(const LaurentMatrix& a)
        : A(a), U(LaurentMatrix::identity(a.rows())), Uinv(LaurentMatrix::identity(a.rows())) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int t = 0; t < A.cols(); ++t) std::swap(A.at(i, t), A.at(j, t));
        for (int t = 0; t < U.cols(); ++t) std::swap(U.at(i, t), U.at(j, t));
        for (int t = 0; t < Uinv.rows(); ++t) std::swap(Uinv.at(t, i), Uinv.at(t, j));
    }

    // row_i += q * row_j
    void add_row(int i, int j, const LaurentPoly& q) {
        if (q.is_zero()) return;
        for (int t = 0; t < A.cols(); ++t) A.at(i, t) = A.at(i, t) + q * A.at(j, t);
        for (int t = 0; t < U.cols(); ++t) U.at(i, t) = U.at(i, t) + q * U.at(j, t);
        for (int t = 0; t < Uinv.rows(); ++t) Uinv.at(t, j) = Uinv.at(t, j) - q * Uinv.at(t, i);
    }
};

} // namespace

RowHermite hermite_rows(const LaurentMatrix& A_in, double zero_tol) {
    const int m = A_in.rows(), n = A_in.cols();
    double scale = 1.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (A_in.at(i, j).low() < 0)
                throw DomainError("hermite_rows expects polynomial entries");
            scale = std::max(scale, A_in.at(i, j).norm_inf());
        }
    double tol = zero_tol * scale;
    MatWork w(A_in);
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        // Euclidean sweep inside this column, rows rank..m-1.
        for (;;) {
            int piv = -1;
            long long best = -1;
            int nonzero = 0;
            for (int i = rank; i < m; ++i) {
                w.A.at(i, col) = w.A.at(i, col).trimmed(tol);
                if (w.A.at(i, col).is_zero()) continue;
                ++nonzero;
                long long d = w.A.at(i, col).high();
                if (piv < 0 || d < best) {
                    piv = i;
                    best = d;
                }
            }
            if (nonzero == 0) { piv = -1; break; }
            if (nonzero == 1) {
                w.swap_rows(rank, piv);
                ++rank;
                break;
            }
            for (int i = rank; i < m; ++i) {
                if (i == piv || w.A.at(i, col).is_zero()) continue;
                LaurentPoly q, r;
                poly_divmod(w.A.at(i, col), w.A.at(piv, col), tol, q, r);
                w.add_row(i, piv, -q);
                w.A.at(i, col) = r;
            }
        }
    }
    RowHermite out;
    out.rank = rank;
    out.T = w.A.submatrix(0, 0, rank, n);
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    return out;
}

ColHermite hermite_cols(const LaurentMatrix& A, double zero_tol) {
    RowHermite rh = hermite_rows(A.transpose(), zero_tol);
    ColHermite out;
    out.rank = rh.rank;
    out.L = rh.T.transpose();
    out.V = rh.U.transpose();
    out.Vinv = rh.Uinv.transpose();
    return out;
}

namespace {

// Inverse of a staircase block L (r x r, lower triangular) over the given
// unit domain: solves L X = I by forward substitution with truncated unit
// inverses on the diagonal.
std::optional<LaurentMatrix> staircase_inverse(const LaurentMatrix& L, UnitDomain domain,
                                               double tail_tol) {
    const int r = L.rows();
    std::vector<LaurentPoly> dinv(r);
    for (int i = 0; i < r; ++i) {
        if (!is_unit(L.at(i, i), domain)) return std::nullopt;
        dinv[i] = unit_inverse(L.at(i, i), domain, tail_tol);
    }
    LaurentMatrix X(r, r);
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i) {
            LaurentPoly rhs = (i == j) ? LaurentPoly::one() : LaurentPoly();
            for (int t = 0; t < i; ++t) rhs = rhs - L.at(i, t) * X.at(t, j);
            X.at(i, j) = dinv[i] * rhs;
        }
    }
    return X;
}

} // namespace

std::optional<LaurentMatrix> right_inverse_over(const LaurentMatrix& M, UnitDomain domain,
                                                double zero_tol, double tail_tol) {
    ColHermite ch = hermite_cols(M, zero_tol);
    if (ch.rank != M.rows()) return std::nullopt;
    auto Linv = staircase_inverse(ch.L, domain, tail_tol);
    if (!Linv) return std::nullopt;
    // M * V[:, :r] = L  =>  X = V[:, :r] * L^{-1}
    LaurentMatrix Vl = ch.V.submatrix(0, 0, M.cols(), ch.rank);
    return Vl * (*Linv);
}

std::optional<LaurentMatrix> left_inverse_over(const LaurentMatrix& M, UnitDomain domain,
                                               double zero_tol, double tail_tol) {
    auto r = right_inverse_over(M.transpose(), domain, zero_tol, tail_tol);
    if (!r) return std::nullopt;
    return r->transpose();
}

LaurentMatrix wiener_matrix_inverse(const LaurentMatrix& M, double tail_tol) {
    const int n = M.rows();
    if (n != M.cols()) throw DimensionError("wiener_matrix_inverse: square matrix required");
    LaurentPoly d = M.det();
    LaurentPoly dinv = laurent_inverse_wiener(d, tail_tol);
    LaurentMatrix inv(n, n);
    if (n == 1) {
        inv.at(0, 0) = dinv;
        return inv;
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
            inv.at(i, j) = cof * dinv;
        }
    return inv;
}

LaurentMatrix plus_matrix_inverse_series(const LaurentMatrix& M, long long order) {
    const int n = M.rows();
    if (n != M.cols()) throw DimensionError("plus inverse: square matrix required");
    long long maxdeg = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!M.at(i, j).is_zero() && M.at(i, j).low() < 0)
                throw DomainError("plus inverse: entries must have low >= 0");
            if (!M.at(i, j).is_zero()) maxdeg = std::max(maxdeg, M.at(i, j).high());
        }
    auto coeff_mat = [&](long long t) {
        Eigen::MatrixXcd c(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c(i, j) = M.at(i, j).coeff(t);
        return c;
    };
    Eigen::MatrixXcd M0 = coeff_mat(0);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M0);
    if (!lu.isInvertible())
        throw DegenerateError("plus inverse: constant term is singular");
    Eigen::MatrixXcd M0inv = lu.inverse();
    std::vector<Eigen::MatrixXcd> psi;
    psi.push_back(M0inv);
    for (long long t = 1; t <= order; ++t) {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
        for (long long j = 1; j <= std::min(t, maxdeg); ++j) acc += coeff_mat(j) * psi[t - j];
        psi.push_back(-M0inv * acc);
    }
    LaurentMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Cplx> c(psi.size());
            for (size_t t = 0; t < psi.size(); ++t) c[t] = psi[t](i, j);
            out.at(i, j) = LaurentPoly(0, std::move(c));
        }
    return out;
}

} // namespace apw
