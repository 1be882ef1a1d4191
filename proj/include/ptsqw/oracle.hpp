#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ptsqw/well.hpp"

namespace ptsqw {

// Eigenvalues of a complex symmetric tridiagonal matrix (diagonal `diag`,
// off-diagonal `off`, off.size() == diag.size() - 1) by QL iterations with
// implicit shifts using complex-orthogonal rotations.  O(N^2), eigenvalues
// only, unordered.  Throws on non-convergence.  For the nearly-real
// matrices produced by the discretized Hamiltonian the hyperbolic rotations
// stay tame; tests cross-check against a dense Schur solve.
std::vector<complexd> complex_symmetric_tridiagonal_eigenvalues(
    std::vector<complexd> diag, std::vector<complexd> off);

// Independent finite-difference verification data.
struct OracleSpectrum {
    int grid_size;  // N interior points of the base grid
    // all N eigenvalues of the base grid, sorted by real part
    std::vector<complexd> eigenvalues;
    // per-level Richardson extrapolation from the refined grid; present
    // only when two grids were combined
    std::vector<complexd> richardson_eigenvalues;
    double imag_threshold;

    // n lowest-real-part eigenvalues; the Richardson list when present
    std::vector<complexd> lowest(int n) const;
};

struct FdOptions {
    bool richardson = true;
    int refined_N = 0;           // 0 selects 2 N
    double pairing_gap_factor = 0.1;  // tolerance = factor * local level gap
    double imag_threshold = 1e-8;
};

// Standard three-point discretization of -d^2/dx^2 + V on N interior points
// of (-L_eff, L_eff) with Dirichlet ends.  All eigenvalues of the complex
// tridiagonal matrix are computed; when opts.richardson is set, the n_levels
// lowest are matched against a refined grid (nearest real part within
// pairing_gap_factor times the local gap; a failed match throws) and
// extrapolated with the exact step ratio r:  E ~ (r^2 E_fine - E_coarse)
// / (r^2 - 1), the grid-doubling form (4 E_2N - E_N)/3.
OracleSpectrum fd_spectrum(const std::function<complexd(double)>& potential,
                           double L_eff, int N, int n_levels,
                           const FdOptions& opts = {});

// Same, sampling the well's potential on (-L, L).
OracleSpectrum fd_spectrum(const WellConfig& cfg, int N, int n_levels,
                           const FdOptions& opts = {});

struct RealityCensus {
    int near_real_count;
    std::vector<std::pair<complexd, complexd>> complex_pairs;
    // eigenvalues whose |Im| falls within a factor 10 of the threshold;
    // their classification is unstable
    std::vector<complexd> unstable;
};

// Classifies the n_levels lowest oracle eigenvalues by |Im E| against the
// threshold; complex ones are reported in conjugate pairs.
RealityCensus oracle_reality_census(const WellConfig& cfg, int N,
                                    double imag_threshold, int n_levels);

}  // namespace ptsqw
