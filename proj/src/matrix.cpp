#include "apw/matrix.hpp"

namespace apw {

ApMatrix::ApMatrix(int m, int n, BasisPtr basis) : m_(m), n_(n), basis_(std::move(basis)) {
    if (m_ <= 0 || n_ <= 0) throw DimensionError("ApMatrix needs positive dimensions");
    if (!basis_) throw BasisMismatchError("ApMatrix: null basis");
    e_.assign(static_cast<size_t>(m_) * n_, ApPoly::zero(basis_));
}

size_t ApMatrix::idx(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= n_) throw DimensionError("ApMatrix index out of range");
    return static_cast<size_t>(i) * n_ + j;
}

ApMatrix ApMatrix::identity(int n, BasisPtr basis) {
    ApMatrix r(n, n, basis);
    for (int i = 0; i < n; ++i) r.set(i, i, ApPoly::constant(basis, Cplx(1, 0)));
    return r;
}

ApMatrix ApMatrix::from_entries(int m, int n, std::vector<ApPoly> row_major) {
    if (row_major.empty() || static_cast<size_t>(m) * n != row_major.size())
        throw DimensionError("ApMatrix::from_entries: shape/entry count mismatch");
    ApMatrix r(m, n, row_major.front().basis());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) r.set(i, j, row_major[static_cast<size_t>(i) * n + j]);
    return r;
}

ApMatrix ApMatrix::scalar(ApPoly f) {
    ApMatrix r(1, 1, f.basis());
    r.set(0, 0, std::move(f));
    return r;
}

void ApMatrix::set(int i, int j, ApPoly f) {
    require_same_basis(basis_, f.basis(), "ApMatrix::set");
    e_[idx(i, j)] = std::move(f);
}

ApMatrix ApMatrix::operator+(const ApMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionError("ApMatrix add: shape mismatch");
    require_same_basis(basis_, o.basis_, "ApMatrix add");
    ApMatrix r(m_, n_, basis_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ApMatrix ApMatrix::operator-(const ApMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionError("ApMatrix sub: shape mismatch");
    require_same_basis(basis_, o.basis_, "ApMatrix sub");
    ApMatrix r(m_, n_, basis_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

ApMatrix ApMatrix::operator*(const ApMatrix& o) const {
    if (n_ != o.m_) throw DimensionError("ApMatrix mul: inner dimensions differ");
    require_same_basis(basis_, o.basis_, "ApMatrix mul");
    ApMatrix r(m_, o.n_, basis_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < o.n_; ++j) {
            ApPoly acc = ApPoly::zero(basis_);
            for (int t = 0; t < n_; ++t) acc = acc + at(i, t) * o.at(t, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

ApMatrix ApMatrix::scaled(Cplx c) const {
    ApMatrix r(m_, n_, basis_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(c);
    return r;
}

ApMatrix ApMatrix::conj_transpose() const {
    ApMatrix r(n_, m_, basis_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) r.set(j, i, at(i, j).conj());
    return r;
}

ApMatrix ApMatrix::transpose() const {
    ApMatrix r(n_, m_, basis_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

ApMatrix ApMatrix::apply(const std::function<ApPoly(const ApPoly&)>& op) const {
    ApMatrix r(m_, n_, basis_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) r.set(i, j, op(at(i, j)));
    return r;
}

ApMatrix ApMatrix::submatrix(int i0, int j0, int rows, int cols) const {
    if (i0 < 0 || j0 < 0 || rows <= 0 || cols <= 0 || i0 + rows > m_ || j0 + cols > n_)
        throw DimensionError("ApMatrix::submatrix out of range");
    ApMatrix r(rows, cols, basis_);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.set(i, j, at(i0 + i, j0 + j));
    return r;
}

ApMatrix ApMatrix::hcat(const ApMatrix& a, const ApMatrix& b) {
    if (a.m_ != b.m_) throw DimensionError("hcat: row counts differ");
    require_same_basis(a.basis_, b.basis_, "hcat");
    ApMatrix r(a.m_, a.n_ + b.n_, a.basis_);
    for (int i = 0; i < a.m_; ++i) {
        for (int j = 0; j < a.n_; ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.n_; ++j) r.set(i, a.n_ + j, b.at(i, j));
    }
    return r;
}

ApMatrix ApMatrix::vcat(const ApMatrix& a, const ApMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("vcat: column counts differ");
    require_same_basis(a.basis_, b.basis_, "vcat");
    ApMatrix r(a.m_ + b.m_, a.n_, a.basis_);
    for (int j = 0; j < a.n_; ++j) {
        for (int i = 0; i < a.m_; ++i) r.set(i, j, a.at(i, j));
        for (int i = 0; i < b.m_; ++i) r.set(a.m_ + i, j, b.at(i, j));
    }
    return r;
}

bool ApMatrix::is_hermitian() const {
    if (m_ != n_) return false;
    ApMatrix h = conj_transpose();
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!at(i, j).equals(h.at(i, j))) return false;
    return true;
}

double ApMatrix::max_entry_wiener_norm() const {
    double w = 0.0;
    for (const auto& f : e_) w = std::max(w, f.wiener_norm());
    return w;
}

double ApMatrix::max_entry_wiener_distance(const ApMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionError("wiener distance: shape mismatch");
    double w = 0.0;
    for (size_t i = 0; i < e_.size(); ++i) w = std::max(w, e_[i].wiener_distance(o.e_[i]));
    return w;
}

Eigen::MatrixXcd ApMatrix::torus_eval(const std::vector<double>& theta) const {
    Eigen::MatrixXcd v(m_, n_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) v(i, j) = at(i, j).torus_eval(theta);
    return v;
}

double ApMatrix::sup_opnorm_estimate(long long grid_density, std::uint64_t seed) const {
    TorusGrid grid(basis_->rank_r(), grid_density, seed);
    double best = 0.0;
    for (long long i = 0; i < grid.size(); ++i) {
        Eigen::MatrixXcd v = torus_eval(grid.point(i));
        best = std::max(best, v.jacobiSvd().singularValues()(0));
    }
    return best;
}

double ApMatrix::min_abs_det_estimate(long long grid_density, std::uint64_t seed) const {
    if (m_ != n_) throw DimensionError("min_abs_det_estimate: square matrix required");
    TorusGrid grid(basis_->rank_r(), grid_density, seed);
    double worst = std::numeric_limits<double>::infinity();
    for (long long i = 0; i < grid.size(); ++i) {
        Eigen::MatrixXcd v = torus_eval(grid.point(i));
        worst = std::min(worst, std::abs(v.determinant()));
    }
    return worst;
}

ApMatrix ApMatrix::trimmed(double tol) const {
    ApMatrix r(m_, n_, basis_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) r.set(i, j, at(i, j).trimmed(tol));
    return r;
}

} // namespace apw
