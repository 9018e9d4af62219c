#pragma once

/*
 * rational.hpp — exact rational scalars and small dense rational matrices.
 *
 * Frequencies and halfspaces are exact objects: group membership, equality
 * and lexicographic sign tests must never go through floating point. All
 * arithmetic here is int64-based with 128-bit intermediates and throws on
 * overflow instead of wrapping; desk-scale lattices stay far below that.
 */

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "apw/errors.hpp"

namespace apw {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational parse(const std::string& text);

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    // Numerator of p/q when q == 1; throws otherwise.
    long long to_integer() const;
    bool is_integer() const noexcept { return den_ == 1; }

    std::string str() const;

    Rational operator-() const { return Rational(raw(), -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return (a - b).sign() >= 0; }

private:
    struct raw {}; // already-normalized constructor tag
    Rational(raw, long long n, long long d) : num_(n), den_(d) {}

    void normalize();
    static long long narrow(__int128 v);

    long long num_ = 0;
    long long den_ = 1; // > 0, gcd(|num|, den) == 1
};

using RationalVector = std::vector<Rational>;

// Dense row-major rational matrix, sized for k <= ~8.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RationalMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    RationalMatrix transposed() const;
    RationalVector mul(const RationalVector& v) const;

    // Rank over the rationals (exact Gaussian elimination).
    int rank() const;
    Rational det() const;
    // Exact inverse; throws DegenerateError when singular.
    RationalMatrix inverse() const;

    // Solves A x = b exactly. Returns false when the system is inconsistent
    // or underdetermined without a unique solution on the pivot columns.
    bool solve(const RationalVector& b, RationalVector& x) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

} // namespace apw
