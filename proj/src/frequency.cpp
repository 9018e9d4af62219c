#include "apw/frequency.hpp"

namespace apw {

FrequencyBasis::FrequencyBasis(int dim_k, RationalMatrix columns)
    : dim_k_(dim_k), rank_r_(columns.cols()), columns_(std::move(columns)) {
    if (dim_k_ <= 0) throw DimensionError("frequency basis needs dim_k >= 1");
    if (columns_.rows() != dim_k_)
        throw DimensionError("frequency basis: column length != dim_k");
    if (rank_r_ > 0 && columns_.rank() != rank_r_)
        throw DomainError("frequency basis generators are linearly dependent over Q");
}

std::shared_ptr<const FrequencyBasis> FrequencyBasis::line(const Rational& beta) {
    RationalMatrix m(1, 1);
    m(0, 0) = beta;
    return make(1, std::move(m));
}

RationalVector FrequencyBasis::embed(const Coords& coords) const {
    if (static_cast<int>(coords.size()) != rank_r_)
        throw DimensionError("frequency coords length != basis rank");
    RationalVector v(dim_k_);
    for (int i = 0; i < dim_k_; ++i) {
        Rational acc;
        for (int j = 0; j < rank_r_; ++j) acc += columns_(i, j) * Rational(coords[j]);
        v[i] = acc;
    }
    return v;
}

std::vector<double> FrequencyBasis::embed_real(const Coords& coords) const {
    RationalVector v = embed(coords);
    std::vector<double> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].to_double();
    return r;
}

bool FrequencyBasis::same_as(const FrequencyBasis& other) const {
    return dim_k_ == other.dim_k_ && rank_r_ == other.rank_r_ && columns_ == other.columns_;
}

Coords coords_add(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) throw DimensionError("coords length mismatch");
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Coords coords_sub(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) throw DimensionError("coords length mismatch");
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Coords coords_neg(const Coords& a) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

long long coords_l1(const Coords& a) {
    long long s = 0;
    for (long long c : a) s += c < 0 ? -c : c;
    return s;
}

bool coords_is_zero(const Coords& a) {
    for (long long c : a)
        if (c != 0) return false;
    return true;
}

std::string coords_str(const Coords& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where) {
    if (!a || !b) throw BasisMismatchError(std::string(where) + ": missing frequency basis");
    if (a.get() == b.get()) return;
    if (!a->same_as(*b))
        throw BasisMismatchError(std::string(where) +
                                 ": operands use different frequency bases (rebase explicitly)");
}

} // namespace apw
