#pragma once

// Matrices with ApPoly entries sharing one frequency basis.

#include <Eigen/Dense>
#include <functional>

#include "apw/poly.hpp"

namespace apw {

class ApMatrix {
public:
    ApMatrix() = default;
    ApMatrix(int m, int n, BasisPtr basis);

    static ApMatrix identity(int n, BasisPtr basis);
    static ApMatrix zero(int m, int n, BasisPtr basis) { return ApMatrix(m, n, std::move(basis)); }
    static ApMatrix from_entries(int m, int n, std::vector<ApPoly> row_major);
    // 1x1 wrapper.
    static ApMatrix scalar(ApPoly f);

    int rows() const noexcept { return m_; }
    int cols() const noexcept { return n_; }
    const BasisPtr& basis() const noexcept { return basis_; }

    const ApPoly& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, ApPoly f);

    ApMatrix operator+(const ApMatrix& o) const;
    ApMatrix operator-(const ApMatrix& o) const;
    ApMatrix operator*(const ApMatrix& o) const;
    ApMatrix scaled(Cplx c) const;
    ApMatrix conj_transpose() const;
    ApMatrix transpose() const;
    ApMatrix apply(const std::function<ApPoly(const ApPoly&)>& op) const;

    ApMatrix submatrix(int i0, int j0, int rows, int cols) const;
    static ApMatrix hcat(const ApMatrix& a, const ApMatrix& b);
    static ApMatrix vcat(const ApMatrix& a, const ApMatrix& b);

    bool is_hermitian() const; // exact: equals own conj-transpose
    double max_entry_wiener_norm() const;
    double max_entry_wiener_distance(const ApMatrix& o) const;

    Eigen::MatrixXcd torus_eval(const std::vector<double>& theta) const;
    // Largest operator 2-norm over a deterministic torus grid (lower bound
    // for the sup norm ||F||_inf).
    double sup_opnorm_estimate(long long grid_density, std::uint64_t seed = 0) const;
    // Smallest |det F(theta)| over the grid (square matrices).
    double min_abs_det_estimate(long long grid_density, std::uint64_t seed = 0) const;

    ApMatrix trimmed(double tol) const;

private:
    size_t idx(int i, int j) const;

    int m_ = 0, n_ = 0;
    BasisPtr basis_;
    std::vector<ApPoly> e_; // row-major
};

} // namespace apw
