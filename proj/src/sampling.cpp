#include "apw/sampling.hpp"

#include <cmath>

#include "apw/errors.hpp"

namespace apw {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
} // namespace

TorusGrid::TorusGrid(int dims, long long points, std::uint64_t seed)
    : dims_(dims), points_(points), seed_(seed) {
    if (dims < 0) throw DimensionError("torus grid with negative dimension");
    if (points < 1) throw DomainError("torus grid needs at least one point");
    alpha_.resize(dims);
    for (int d = 0; d < dims; ++d) {
        double root = std::sqrt(static_cast<double>(kPrimes[d % 12]) + 12.0 * (d / 12));
        alpha_[d] = root - std::floor(root);
    }
}

std::vector<double> TorusGrid::point(long long i) const {
    std::vector<double> theta(dims_, 0.0);
    if (i == 0) return theta; // keep the origin in every grid
    double t = static_cast<double>(i) + 1.0 + static_cast<double>(seed_);
    for (int d = 0; d < dims_; ++d) {
        double x = t * alpha_[d];
        theta[d] = kTwoPi * (x - std::floor(x));
    }
    return theta;
}

} // namespace apw
