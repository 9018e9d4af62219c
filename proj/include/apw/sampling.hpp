#pragma once

/*
 * sampling.hpp — deterministic low-discrepancy grids.
 *
 * Sup-norm estimates and pointwise invertibility checks sample the torus of
 * basis phases with a Kronecker (Weyl) sequence: point i has phase
 * 2*pi*frac((i + 1 + seed) * alpha_d) in dimension d, where alpha_d is the
 * fractional part of sqrt of the d-th prime. Fixed seed => bit-for-bit
 * reproducible certificates; phase 0 is always included as point 0.
 */

#include <cstdint>
#include <vector>

namespace apw {

class TorusGrid {
public:
    TorusGrid(int dims, long long points, std::uint64_t seed = 0);

    int dims() const noexcept { return dims_; }
    long long size() const noexcept { return points_; }

    // Phases of grid point i, each in [0, 2*pi).
    std::vector<double> point(long long i) const;

private:
    int dims_;
    long long points_;
    std::uint64_t seed_;
    std::vector<double> alpha_;
};

} // namespace apw
