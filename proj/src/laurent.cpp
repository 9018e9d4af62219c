#include "apw/laurent.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace apw {

namespace {
// Coefficients below this are treated as structural zeros when normalizing.
constexpr double kStructuralZero = 1e-300;
} // namespace

LaurentPoly::LaurentPoly(long long low, std::vector<Cplx> coeffs)
    : low_(low), c_(std::move(coeffs)) {
    normalize();
}

void LaurentPoly::normalize() {
    size_t head = 0;
    while (head < c_.size() && std::abs(c_[head]) < kStructuralZero) ++head;
    size_t tail = c_.size();
    while (tail > head && std::abs(c_[tail - 1]) < kStructuralZero) --tail;
    if (head == tail) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (head > 0 || tail < c_.size()) {
        c_ = std::vector<Cplx>(c_.begin() + head, c_.begin() + tail);
        low_ += static_cast<long long>(head);
    }
}

LaurentPoly LaurentPoly::constant(Cplx c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(Cplx c, long long power) { return LaurentPoly(power, {c}); }

Cplx LaurentPoly::coeff(long long power) const {
    if (is_zero() || power < low_ || power > high()) return Cplx(0, 0);
    return c_[static_cast<size_t>(power - low_)];
}

double LaurentPoly::norm1() const {
    double s = 0.0;
    for (const Cplx& v : c_) s += std::abs(v);
    return s;
}

double LaurentPoly::norm_inf() const {
    double s = 0.0;
    for (const Cplx& v : c_) s = std::max(s, std::abs(v));
    return s;
}

Cplx LaurentPoly::eval(Cplx z) const {
    if (is_zero()) return Cplx(0, 0);
    // Horner on the polynomial part, then the z^low factor.
    Cplx acc(0, 0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, static_cast<double>(low_));
}

Cplx LaurentPoly::eval_circle(double theta) const {
    return eval(Cplx(std::cos(theta), std::sin(theta)));
}

LaurentPoly LaurentPoly::operator-() const { return scaled(Cplx(-1, 0)); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long low = std::min(a.low_, b.low_);
    long long high = std::max(a.high(), b.high());
    std::vector<Cplx> c(static_cast<size_t>(high - low + 1), Cplx(0, 0));
    for (long long p = a.low_; p <= a.high(); ++p) c[p - low] += a.coeff(p);
    for (long long p = b.low_; p <= b.high(); ++p) c[p - low] += b.coeff(p);
    return LaurentPoly(low, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::vector<Cplx> c(a.c_.size() + b.c_.size() - 1, Cplx(0, 0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly LaurentPoly::scaled(Cplx s) const {
    if (s == Cplx(0, 0)) return LaurentPoly();
    std::vector<Cplx> c = c_;
    for (Cplx& v : c) v *= s;
    return LaurentPoly(low_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(long long d) const {
    if (is_zero()) return LaurentPoly();
    return LaurentPoly(low_ + d, c_);
}

LaurentPoly LaurentPoly::conj_reflected() const {
    if (is_zero()) return LaurentPoly();
    std::vector<Cplx> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = std::conj(c_[c_.size() - 1 - i]);
    return LaurentPoly(-high(), std::move(c));
}

LaurentPoly LaurentPoly::derivative() const {
    if (is_zero()) return LaurentPoly();
    std::vector<Cplx> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        c[i] = c_[i] * static_cast<double>(low_ + static_cast<long long>(i));
    return LaurentPoly(low_ - 1, std::move(c));
}

LaurentPoly LaurentPoly::trimmed(double tol) const {
    std::vector<Cplx> c = c_;
    for (Cplx& v : c)
        if (std::abs(v) <= tol) v = Cplx(0, 0);
    return LaurentPoly(low_, std::move(c));
}

LaurentPoly LaurentPoly::plus_part() const {
    if (is_zero() || low_ >= 0) return *this;
    if (high() < 0) return LaurentPoly();
    std::vector<Cplx> c(c_.begin() + static_cast<size_t>(-low_), c_.end());
    return LaurentPoly(0, std::move(c));
}

LaurentPoly LaurentPoly::minus_part(bool with_zero) const {
    long long cap = with_zero ? 0 : -1;
    if (is_zero() || high() <= cap) return *this;
    if (low_ > cap) return LaurentPoly();
    std::vector<Cplx> c(c_.begin(), c_.begin() + static_cast<size_t>(cap - low_ + 1));
    return LaurentPoly(low_, std::move(c));
}

namespace {

// Relative trim applied before any root-based computation: stray coefficients
// at the 1e-15 level would otherwise corrupt the companion matrix.
LaurentPoly structurally_trimmed(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.trimmed(1e-13 * std::max(1.0, p.norm_inf()));
}

} // namespace

std::vector<Cplx> laurent_roots(const LaurentPoly& p_in) {
    LaurentPoly p = structurally_trimmed(p_in);
    if (p.is_zero()) throw DegenerateError("roots of the zero polynomial");
    const auto& c = p.coeffs();
    size_t deg = c.size() - 1;
    std::vector<Cplx> roots;
    if (deg == 0) return roots;
    if (deg == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (size_t i = 1; i < deg; ++i) comp(i, i - 1) = Cplx(1, 0);
    for (size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw Error(ErrorClass::internal, "companion eigensolve failed");
    roots.reserve(deg);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        Cplx r = es.eigenvalues()(i);
        // One Newton step against the polynomial part tightens the residual.
        LaurentPoly poly(0, c);
        LaurentPoly dpoly = poly.derivative();
        Cplx pv = poly.eval(r), dv = dpoly.eval(r);
        if (std::abs(dv) > 1e-12 * std::max(1.0, std::abs(pv))) {
            Cplx r2 = r - pv / dv;
            if (std::abs(poly.eval(r2)) < std::abs(pv)) r = r2;
        }
        roots.push_back(r);
    }
    return roots;
}

long long winding_index(const LaurentPoly& p_in) {
    LaurentPoly p = structurally_trimmed(p_in);
    if (p.is_zero()) throw DegenerateError("winding index of the zero symbol");
    std::vector<Cplx> roots = laurent_roots(p);
    long long inside = 0;
    for (const Cplx& r : roots) {
        double m = std::abs(r);
        if (std::abs(m - 1.0) < kCircleRootTol)
            throw DegenerateError("symbol has a root on the unit circle (not invertible)");
        if (m < 1.0) ++inside;
    }
    return p.low() + inside;
}

SpectralSplit spectral_split(const LaurentPoly& p_in) {
    LaurentPoly p = structurally_trimmed(p_in);
    if (p.is_zero()) throw DegenerateError("spectral split of the zero symbol");
    std::vector<Cplx> roots = laurent_roots(p);
    std::vector<Cplx> inside, outside;
    for (const Cplx& r : roots) {
        double m = std::abs(r);
        if (std::abs(m - 1.0) < kCircleRootTol)
            throw DegenerateError("symbol has a root on the unit circle (not invertible)");
        (m < 1.0 ? inside : outside).push_back(r);
    }
    Cplx lead = p.coeffs().back();
    LaurentPoly plus = LaurentPoly::constant(lead);
    for (const Cplx& q : outside) plus = plus * LaurentPoly(0, {-q, Cplx(1, 0)});
    LaurentPoly minus = LaurentPoly::one();
    for (const Cplx& r : inside) minus = minus * LaurentPoly(-1, {-r, Cplx(1, 0)});

    SpectralSplit out;
    out.w = p.low() + static_cast<long long>(inside.size());
    out.plus = plus;
    out.minus = minus;
    LaurentPoly recon = plus.shifted(out.w) * minus;
    out.residual = (recon - p).norm_inf();
    return out;
}

LaurentPoly laurent_inverse_truncated(const LaurentPoly& p, Side side, double tail_tol,
                                      int max_terms) {
    if (p.is_zero()) throw DegenerateError("inverse of the zero symbol");
    if (!(tail_tol > 0)) throw DomainError("tail_tol must be positive");
    if (side == Side::minus) {
        // Mirror z -> 1/z and reuse the plus-side series.
        std::vector<Cplx> rc(p.coeffs().rbegin(), p.coeffs().rend());
        LaurentPoly mirrored(-p.high(), std::move(rc));
        LaurentPoly q = laurent_inverse_truncated(mirrored, Side::plus, tail_tol, max_terms);
        std::vector<Cplx> qc(q.coeffs().rbegin(), q.coeffs().rend());
        return LaurentPoly(-q.high(), std::move(qc));
    }
    if (p.low() != 0)
        throw DegenerateError("plus-side inverse requires an invertible constant term");
    for (const Cplx& r : laurent_roots(p)) {
        if (std::abs(std::abs(r) - 1.0) < kCircleRootTol)
            throw DegenerateError("symbol has a root on the unit circle (not invertible)");
        if (std::abs(r) < 1.0)
            throw DegenerateError("plus-side inverse: symbol has a root inside the disc");
    }
    const auto& c = p.coeffs();
    size_t deg = c.size() - 1;
    Cplx c0inv = Cplx(1, 0) / c[0];
    std::vector<Cplx> q;
    q.push_back(c0inv);
    // Residual of the degree-N truncation has only terms above N; track its
    // l1 mass directly and stop when it is within tolerance.
    auto residual_tail = [&]() {
        // (p * q - 1) coefficients beyond the current truncation length.
        double s = 0.0;
        size_t n = q.size();
        for (size_t t = n; t <= n - 1 + deg; ++t) {
            Cplx acc(0, 0);
            for (size_t j = 1; j <= deg; ++j) {
                if (t < j) break;
                size_t idx = t - j;
                if (idx < n) acc += c[j] * q[idx];
            }
            s += std::abs(acc);
        }
        return s;
    };
    while (static_cast<int>(q.size()) < max_terms) {
        if (residual_tail() <= tail_tol) break;
        size_t n = q.size();
        Cplx acc(0, 0);
        for (size_t j = 1; j <= deg && j <= n; ++j) acc += c[j] * q[n - j];
        q.push_back(-c0inv * acc);
    }
    if (residual_tail() > tail_tol)
        throw DegenerateError("inverse series does not reach the requested tail tolerance");
    return LaurentPoly(0, std::move(q));
}

LaurentPoly laurent_inverse_wiener(const LaurentPoly& p, double tail_tol) {
    SpectralSplit sp = spectral_split(p);
    LaurentPoly ip = laurent_inverse_truncated(sp.plus, Side::plus, tail_tol);
    LaurentPoly im = laurent_inverse_truncated(sp.minus, Side::minus, tail_tol);
    return (ip * im).shifted(-sp.w);
}

} // namespace apw
