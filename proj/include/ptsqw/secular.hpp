#pragma once

#include <vector>

#include "ptsqw/well.hpp"

namespace ptsqw {

// Trigonometric secular residual whose zeros, together with the hyperbola
// 2 s t = g, select the bound states:
//
//   k sin[2k(L-l)] (s^2 cosh 2sl + t^2 cos 2tl)
//     - cos[2k(L-l)] (s^3 sinh 2sl - t^3 sin 2tl)
//     + s t^2 sinh 2sl - s^2 t sin 2tl ,      k = sqrt(t^2 - s^2).
//
// Only the geometry (L, l) enters; the coupling g is imposed separately
// through the hyperbola constraint.  Requires t >= s > 0.
double secular_residual(const WellConfig& cfg, double s, double t);
double secular_residual(double L, double l, double s, double t);

// Residual divided by k^2 = t^2 - s^2.  The full residual vanishes
// identically on the diagonal s = t (the spurious k = 0 family with
// vanishing wavefunction); dividing by k^2 removes that factor, so the
// zero set of this function consists of the physical semi-ovals only.
// Defined for t > s.
double secular_residual_reduced(double L, double l, double s, double t);

// Hyperbola parametrization by k: given 2 s t = g and t^2 - s^2 = k^2,
//   t(k) = sqrt((k^2 + hypot(k^2, g)) / 2),   s(k) = g / (2 t).
double hyperbola_t_of_k(double k, double g);

struct RootScanOptions {
    // Scan step along the hyperbola, uniform in k; 0 selects the default
    // min(0.05, pi/(8L)).  Roots separate by ~pi/(2L) asymptotically, so
    // the default oversamples by a factor >= 4; sampling additionally
    // happens at half steps.
    double k_step = 0.0;
    // Absolute bisection tolerance in k (|dt/dk| <= 1, so this bounds the
    // error in t as well).
    double tol_k = 1e-13;
    // Relative offset of the scan start above the spurious point s = t,
    // expressed in t: scan starts at t = sqrt(g/2) (1 + exclusion_eps).
    double exclusion_eps = 1e-8;
};

// All sign-change roots of k -> residual(s(k), t(k)) for k in (k_lo, k_hi),
// refined by bisection.  Cells without a sign change but with a local dip
// of |residual| are searched for an interior extremum so that root pairs
// about to coalesce are still resolved.  Returns ascending k values.
std::vector<double> scan_hyperbola_roots(const WellConfig& cfg, double k_lo,
                                         double k_hi,
                                         const RootScanOptions& opts = {});

// Bound-state roots with t <= t_max, ascending in E.  Requires g > 0 and
// t_max > sqrt(g/2).  An empty result means no real root below t_max
// (fully broken PT symmetry in the scanned window).
std::vector<SpectralRoot> find_roots_on_hyperbola(
    const WellConfig& cfg, double t_max, const RootScanOptions& opts = {});

// A vertex of a traced solution curve, carrying both (s, t) and the
// hyperbolic coordinates (u, k) = (t s, sqrt(t^2 - s^2)).
struct OvalPoint {
    double s;
    double t;
    double u;
    double k;
};

struct ContourOptions {
    int cells_s = 600;
    int cells_t = 600;
};

// Zero-level curves of the reduced secular residual over
// (0, s_max] x (0, t_max], t > s, as ordered polylines.  Marching squares
// on a regular grid; every vertex is refined along its grid edge by
// bisection.  Intersections of these curves with the hyperbola t s = g/2
// are the spectral roots.
std::vector<std::vector<OvalPoint>> trace_semi_ovals(
    double L, double l, double s_max, double t_max,
    const ContourOptions& opts = {});

}  // namespace ptsqw
