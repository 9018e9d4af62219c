#pragma once

/*
 * corona.hpp — the Toeplitz corona solver.
 *
 * Given A (p x m) and B (p x p) with spectra in the halfspace S, left
 * coprime over the plus algebra and B invertible, and a bound gamma, the
 * solver produces F with A F = B and sampled ||F||_inf <= gamma, together
 * with the linear-fractional parametrization of all solutions:
 *
 *   rescale B by 1/gamma, take a right coprime factorization B^{-1}A =
 *   C D^{-1}, factor H = D*D - C*C = R* J0 R with R and R^{-1} in the plus
 *   algebra, set Theta = [D; C] R^{-1} (a (J0, J1)-isometry), and map the
 *   contractive parameter G to F = (Theta11 G + Theta12)(Theta21 G +
 *   Theta22)^{-1}.
 *
 * Everything is finite-section and truncated-series numerics, so every
 * returned object carries residual certificates instead of exact claims.
 */

#include <map>

#include "apw/factorization.hpp"
#include "apw/toeplitz.hpp"

namespace apw {

struct CoronaOptions {
    long long cutoff = 32;
    double tail_tol = 1e-10;
    long long grid = 4096;
    std::uint64_t seed = 0;
    double min_gram_margin = 1e-6;
};

struct RightCoprimeResult {
    ApMatrix C; // p x m, plus algebra
    ApMatrix D; // m x m, plus algebra, invertible in the full algebra
    // Bezout certificate X D + Y C = I_m over the plus algebra.
    ApMatrix X; // m x m
    ApMatrix Y; // m x p
    double resid_ad_bc = 0.0;   // ||A D - B C||
    double resid_bezout = 0.0;  // ||X D + Y C - I||
    double det_d_floor = 0.0;   // sampled min |det D|
};

// Right coprime factorization B^{-1} A = C D^{-1} from a left coprime pair,
// via fraction clearing and Hermite (GCRD) cancellation over the Laurent
// ring. Throws CoprimenessError when (A, B) is not left coprime over the
// plus algebra, DomainError when B is not invertible.
RightCoprimeResult right_coprime_from_left(const ApMatrix& A, const ApMatrix& B,
                                           const HalfspacePtr& S, const CoronaOptions& opts = {});

struct SymmetricFactorization {
    ApMatrix R;      // m x m, plus algebra
    ApMatrix R_inv;  // truncated plus inverse of R
    std::vector<int> J0; // +-1 diagonal, +1 entries first
    std::map<std::string, double> residuals;
};

// H = R* J0 R for Hermitian-valued H admitting a canonical factorization;
// the signature equals the sampled inertia of H. Inconclusive canonical
// test or non-Hermitian input raise errors.
SymmetricFactorization symmetric_factorize(const ApMatrix& H, const HalfspacePtr& S,
                                           const CoronaOptions& opts = {});

struct CoronaSolution {
    int m = 0, p = 0;
    double gamma = 0.0;
    HalfspacePtr S;
    ApMatrix C, D, R;
    std::vector<int> J0;
    // Theta blocks; Theta11/Theta21 are absent when m == p.
    std::optional<ApMatrix> Theta11, Theta21;
    ApMatrix Theta12, Theta22;
    ApMatrix F0; // solution at parameter G = 0
    std::map<std::string, double> residuals;
};

CoronaSolution corona_solve(const ApMatrix& A, const ApMatrix& B, double gamma,
                            const HalfspacePtr& S, const CoronaOptions& opts = {});

struct ParametrizeResult {
    ApMatrix F;
    std::map<std::string, double> residuals; // includes the G round-trip gap
};

// F = gamma * (Theta11 G + Theta12)(Theta21 G + Theta22)^{-1} for a
// contractive parameter G ((m-p) x p, sampled ||G||_inf <= 1). For m == p
// pass std::nullopt; the solution is then unique.
ParametrizeResult corona_parametrize(const CoronaSolution& sol, const std::optional<ApMatrix>& G,
                                     const CoronaOptions& opts = {});

// Inverse of the linear-fractional map: recovers the parameter G from a
// solution F.
ApMatrix corona_recover_parameter(const CoronaSolution& sol, const ApMatrix& F,
                                  const CoronaOptions& opts = {});

} // namespace apw
