#pragma once

/*
 * factorization.hpp — Wiener-Hopf type factorization G = G+ diag(e_lambda) G-
 * of almost periodic matrix functions with one-sided invertible factors,
 * restricted to commensurable (rank-1) spectra where the circle machinery
 * applies. Includes the always-available trivial representation (which
 * deliberately violates the p = max{m,n} size condition and is quarantined
 * under its own name), scalar and pivot-row factorization, augmentation to
 * square size with the same indices, verification, and a finite-section
 * canonical-factorization test.
 */

#include <optional>

#include "apw/rank1.hpp"

namespace apw {

struct ApFactorization {
    ApMatrix g_plus;              // m x p, spectrum in S
    std::vector<Coords> indices;  // p factorization indices (as coords)
    ApMatrix g_minus;             // p x n, spectrum in -S
    HalfspacePtr halfspace;
    double residual = 0.0;        // Wiener-norm reconstruction error (max entry)
    int p = 0;

    bool canonical() const {
        for (const auto& c : indices)
            if (!coords_is_zero(c)) return false;
        return true;
    }
    // diag(e_{lambda_1}, ..., e_{lambda_p})
    ApMatrix middle() const;
    ApMatrix reconstruct() const { return g_plus * middle() * g_minus; }
};

enum class FactorStatus {
    factored,
    canonical,
    not_invertible,
    unsupported_rank,
    completion_failed,
};

const char* to_string(FactorStatus s);

struct FactorizationReport {
    FactorStatus status = FactorStatus::not_invertible;
    std::optional<ApFactorization> factorization;
    std::string diagnostics;

    bool ok() const {
        return status == FactorStatus::factored || status == FactorStatus::canonical;
    }
};

struct FactorizationOptions {
    double tail_tol = 1e-10;
    long long grid = 512;
    std::uint64_t seed = 0;
};

// The representation G = [Pi_S G | I] * [I ; Pi_{(-S)\{0}} G]: exact, always
// available, but with p = n + m inner size. Returned as the cautionary
// example it is, never as an ApFactorization.
std::pair<ApMatrix, ApMatrix> trivial_representation(const ApMatrix& G, const HalfspacePtr& S);

FactorizationReport scalar_factorize(const ApPoly& g, const HalfspacePtr& S,
                                     const FactorizationOptions& opts = {});

// Factorization of a 1 x n row with an invertible pivot entry. When `pivot`
// is not given, the first entry passing scalar_factorize is used.
FactorizationReport row_factorize(const ApMatrix& G, std::optional<int> pivot,
                                  const HalfspacePtr& S, const FactorizationOptions& opts = {});

struct Augmentation {
    ApMatrix F;              // square max{m,n} matrix containing G
    ApFactorization fact;    // factorization of F with the same indices
};

// Row-augments (m < n) or column-augments (m > n) G to square size using a
// unimodular completion of the one-sided factor; throws CompletionError when
// the completion fails.
Augmentation augment_to_square(const ApMatrix& G, const ApFactorization& fact,
                               const HalfspacePtr& S, const FactorizationOptions& opts = {});

struct VerifyReport {
    double residual = 0.0;
    bool plus_mask_ok = false;
    bool minus_mask_ok = false;
    bool index_order_ok = false;
    bool shapes_ok = false;
    bool invertibility_checked = false;
    double plus_inverse_residual = -1.0;  // -1 when not computed
    double minus_inverse_residual = -1.0;
    std::string diagnostics;
};

VerifyReport verify_factorization(const ApMatrix& G, const ApFactorization& fact,
                                  const FactorizationOptions& opts = {});

enum class CanonicalVerdict { likely_canonical, not_canonical_evidence, inconclusive };

const char* to_string(CanonicalVerdict v);

struct CutoffSpec {
    long long first = 16;
    long long last = 64; // doubled from `first` up to this value
};

struct CanonicalTestResult {
    CanonicalVerdict verdict = CanonicalVerdict::inconclusive;
    std::vector<std::pair<long long, double>> sigma_trend; // (cutoff, sigma_min)
    std::string diagnostics;
};

// Finite-section probe of the operator criterion for canonical
// factorability: smallest singular value of the truncated Toeplitz matrix
// of G^T at increasing cutoffs. A numerical heuristic for an exact operator
// criterion, reported as such.
CanonicalTestResult canonical_test(const ApMatrix& G, const HalfspacePtr& S,
                                   const CutoffSpec& cutoffs = {});

} // namespace apw
