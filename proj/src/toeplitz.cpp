#include "apw/toeplitz.hpp"

#include <algorithm>

namespace apw {

namespace {

void enumerate_ball(int dims, long long budget, Coords& current,
                    std::vector<Coords>& out) {
    if (dims == 0) {
        out.push_back(current);
        return;
    }
    for (long long v = -budget; v <= budget; ++v) {
        current.push_back(v);
        enumerate_ball(dims - 1, budget - std::llabs(v), current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Coords> toeplitz_index_set(const BasisPtr& basis, const HalfspacePtr& S,
                                       long long cutoff) {
    if (cutoff < 0) throw DomainError("toeplitz cutoff must be nonnegative");
    if (!S || S->dim_k() != basis->dim_k())
        throw DimensionError("toeplitz index set: halfspace dimension mismatch");
    std::vector<Coords> lattice;
    Coords scratch;
    enumerate_ball(basis->rank_r(), cutoff, scratch, lattice);
    std::vector<Coords> kept;
    for (const Coords& c : lattice)
        if (S->contains(basis, c)) kept.push_back(c);
    std::sort(kept.begin(), kept.end(), [](const Coords& a, const Coords& b) {
        long long la = coords_l1(a), lb = coords_l1(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    return kept;
}

TruncatedToeplitz toeplitz_truncate(const ApMatrix& F, const HalfspacePtr& S, long long cutoff) {
    TruncatedToeplitz t;
    t.index_set = toeplitz_index_set(F.basis(), S, cutoff);
    t.sym_rows = F.rows();
    t.sym_cols = F.cols();
    t.cutoff = cutoff;
    const int N = static_cast<int>(t.index_set.size());
    t.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N) * F.rows(),
                                      static_cast<Eigen::Index>(N) * F.cols());
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Coords diff = coords_sub(t.index_set[a], t.index_set[b]);
            for (int i = 0; i < F.rows(); ++i)
                for (int j = 0; j < F.cols(); ++j) {
                    Cplx v = F.at(i, j).coeff(diff);
                    if (v != Cplx(0, 0))
                        t.matrix(static_cast<Eigen::Index>(a) * F.rows() + i,
                                 static_cast<Eigen::Index>(b) * F.cols() + j) = v;
                }
        }
    return t;
}

GramReport gram_test(const ApMatrix& A, const ApMatrix& B, double gamma, const HalfspacePtr& S,
                     long long cutoff, long long grid, std::uint64_t seed) {
    if (!(gamma > 0)) throw DomainError("gram_test: gamma must be positive");
    if (B.rows() != B.cols() || A.rows() != B.rows())
        throw DimensionError("gram_test: A is p x m and B is p x p");
    SpectralMask in_s(MaskKind::S, S);
    for (const ApMatrix* M : {&A, &B})
        for (int i = 0; i < M->rows(); ++i)
            for (int j = 0; j < M->cols(); ++j)
                for (const auto& [c, v] : M->at(i, j).terms())
                    if (!in_s.accepts(Frequency(c, M->basis())))
                        throw DomainError("gram_test: symbol spectrum not contained in S");
    double det_floor = B.min_abs_det_estimate(grid, seed);
    if (det_floor < 1e-9)
        throw DomainError("gram_test: B is not invertible (sampled |det B| < 1e-9)");

    TruncatedToeplitz Ta = toeplitz_truncate(A, S, cutoff);
    TruncatedToeplitz Tb = toeplitz_truncate(B, S, cutoff);
    Eigen::MatrixXcd M = Ta.matrix * Ta.matrix.adjoint() -
                         (1.0 / (gamma * gamma)) * Tb.matrix * Tb.matrix.adjoint();
    Eigen::MatrixXcd H = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    GramReport r;
    r.cutoff = cutoff;
    r.dimension = static_cast<int>(H.rows());
    r.margin = es.eigenvalues().minCoeff();
    r.passes = r.margin >= -1e-9;
    r.caveat = r.passes ? "finite-section pass: no obstruction found at this cutoff"
                        : "finite-section failure certifies infeasibility at this gamma";
    return r;
}

double kernel_range_check(const ApMatrix& A, const ApMatrix& B, const ApMatrix& C,
                          const ApMatrix& D, const HalfspacePtr& S, long long cutoff) {
    TruncatedToeplitz Ta = toeplitz_truncate(A, S, cutoff);
    TruncatedToeplitz Tb = toeplitz_truncate(B, S, cutoff);
    TruncatedToeplitz Tc = toeplitz_truncate(C, S, cutoff);
    TruncatedToeplitz Td = toeplitz_truncate(D, S, cutoff);

    Eigen::MatrixXcd lhs(Ta.matrix.rows(), Ta.matrix.cols() + Tb.matrix.cols());
    lhs << Ta.matrix, -Tb.matrix;
    Eigen::MatrixXcd rhs(Td.matrix.rows() + Tc.matrix.rows(), Td.matrix.cols());
    rhs << Td.matrix, Tc.matrix;

    Eigen::MatrixXcd prod = lhs * rhs;
    double prod_norm = prod.jacobiSvd().singularValues().size()
                           ? prod.jacobiSvd().singularValues()(0)
                           : 0.0;

    auto numeric_rank = [](const Eigen::MatrixXcd& m) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        const auto& s = svd.singularValues();
        if (s.size() == 0) return 0;
        double tol = 1e-8 * std::max(1.0, s(0));
        int r = 0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > tol) ++r;
        return r;
    };
    int ker_dim = static_cast<int>(lhs.cols()) - numeric_rank(lhs);
    int im_dim = numeric_rank(rhs);
    double gap = std::abs(ker_dim - im_dim);
    return std::max(prod_norm, gap);
}

} // namespace apw
