#include "apw/rational.hpp"

namespace apw {

long long Rational::narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw Error(ErrorClass::internal, "rational overflow (lattice data too large)");
    return static_cast<long long>(v);
}

void Rational::normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(text, &used);
            if (used != text.size()) throw ParseError("bad rational: \"" + text + "\"");
            return Rational(n);
        }
        long long n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw ParseError("bad rational: \"" + text + "\"");
        std::string dpart = text.substr(slash + 1);
        long long d = std::stoll(dpart, &used);
        if (used != dpart.size()) throw ParseError("bad rational: \"" + text + "\"");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: \"" + text + "\"");
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range: \"" + text + "\"");
    }
}

long long Rational::to_integer() const {
    if (den_ != 1) throw DomainError("rational " + str() + " is not an integer");
    return num_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational(Rational::narrow(n), Rational::narrow(d));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational(Rational::narrow(n), Rational::narrow(d));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return Rational(Rational::narrow(n), Rational::narrow(d));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalVector RationalMatrix::mul(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionError("rational matrix-vector size mismatch");
    RationalVector r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational acc;
        for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

namespace {

// Forward elimination; returns pivot count. `work` is modified in place,
// `rhs` (if non-null) follows the same row operations.
int eliminate(RationalMatrix& work, RationalMatrix* rhs, std::vector<int>* pivot_cols) {
    int rows = work.rows(), cols = work.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!work(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int j = 0; j < cols; ++j) std::swap(work(piv, j), work(rank, j));
            if (rhs)
                for (int j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(piv, j), (*rhs)(rank, j));
        }
        Rational inv = Rational(1) / work(rank, col);
        for (int j = 0; j < cols; ++j) work(rank, j) *= inv;
        if (rhs)
            for (int j = 0; j < rhs->cols(); ++j) (*rhs)(rank, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || work(i, col).is_zero()) continue;
            Rational f = work(i, col);
            for (int j = 0; j < cols; ++j) work(i, j) -= f * work(rank, j);
            if (rhs)
                for (int j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

} // namespace

int RationalMatrix::rank() const {
    RationalMatrix work = *this;
    return eliminate(work, nullptr, nullptr);
}

Rational RationalMatrix::det() const {
    if (rows_ != cols_) throw DimensionError("det of non-square rational matrix");
    RationalMatrix work = *this;
    Rational d(1);
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!work(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(work(piv, j), work(col, j));
            d = -d;
        }
        d *= work(col, col);
        Rational inv = Rational(1) / work(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (work(i, col).is_zero()) continue;
            Rational f = work(i, col) * inv;
            for (int j = col; j < n; ++j) work(i, j) -= f * work(col, j);
        }
    }
    return d;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse of non-square rational matrix");
    RationalMatrix work = *this;
    RationalMatrix inv = identity(rows_);
    int rank = eliminate(work, &inv, nullptr);
    if (rank != rows_) throw DegenerateError("rational matrix is singular");
    return inv;
}

bool RationalMatrix::solve(const RationalVector& b, RationalVector& x) const {
    if (static_cast<int>(b.size()) != rows_)
        throw DimensionError("rational solve: rhs size mismatch");
    RationalMatrix work = *this;
    RationalMatrix rhs(rows_, 1);
    for (int i = 0; i < rows_; ++i) rhs(i, 0) = b[i];
    std::vector<int> pivots;
    int rank = eliminate(work, &rhs, &pivots);
    for (int i = rank; i < rows_; ++i)
        if (!rhs(i, 0).is_zero()) return false; // inconsistent
    if (rank != cols_) return false;            // not uniquely determined
    x.assign(cols_, Rational(0));
    for (int i = 0; i < rank; ++i) x[pivots[i]] = rhs(i, 0);
    return true;
}

} // namespace apw
