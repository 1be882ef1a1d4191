#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptsqw/secular.hpp"
#include "ptsqw/well.hpp"

namespace ptsqw {

// Lowest n_levels real bound-state energies E_n = t_n^2 - s_n^2, ascending.
// The scan window is widened automatically until enough roots are found;
// above the critical coupling the merged pair is simply absent and the list
// starts at the lowest surviving level.  May return fewer than n_levels if
// the widening cap is hit.
std::vector<double> energies(const WellConfig& cfg, int n_levels,
                             const RootScanOptions& opts = {});

// Full roots behind energies(), same widening policy.
std::vector<SpectralRoot> spectral_roots(const WellConfig& cfg, int n_levels,
                                         const RootScanOptions& opts = {});

// High-n asymptotics, n >= 1:
//   k_n ~ n pi/(2L) + (-1)^{n+1} 2 g^2 l L^2 / (pi^3 n^3)
//   E_n ~ (n pi/(2L))^2 + (-1)^{n+1} 2 g^2 l L / (pi^2 n^2)
double asymptotic_wavenumber(const WellConfig& cfg, int n);
double asymptotic_energy(const WellConfig& cfg, int n);

// Boundary of exact PT symmetry for one geometry: the coupling at which the
// two lowest levels coalesce and leave the real axis.
struct CriticalCoupling {
    double l;
    double L;
    double g_c;
    double merge_energy;   // common E of the merging pair at the bracket edge
    double bracket_width;  // final bisection bracket on g (absolute)
};

struct CriticalSearchOptions {
    double g_upper = 2e7;  // abort the bracket expansion above this coupling
    RootScanOptions scan;
};

// Bisection on g between "the two lowest roots exist" and "they are gone
// from the real-root list".  Root absence, not near-degeneracy, is the
// merge signal: at coalescence the residual has a double root and the pair
// silently drops out of any bracketing scan.
CriticalCoupling critical_coupling(double l, double L, double tol_rel = 1e-5,
                                   const CriticalSearchOptions& opts = {});

struct GcSweepEntry {
    double l;
    std::optional<CriticalCoupling> result;
    std::string error;  // empty on success
};

// critical_coupling per l; failures are recorded per entry and the sweep
// continues.  Output ordered as the input.
std::vector<GcSweepEntry> gc_sweep(double L, const std::vector<double>& l_values,
                                   double tol_rel = 1e-5,
                                   const CriticalSearchOptions& opts = {});

}  // namespace ptsqw
