#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ptsqw {

using complexd = std::complex<double>;

// Units: hbar = 2m = 1 throughout; energies are k^2.

// The four open intervals between the hard walls and the barrier edges:
// L2 = (-L,-l), L1 = (-l,0), R1 = (0,l), R2 = (l,L).
enum class Region { L2, L1, R1, R2 };

const char* region_name(Region r);

// Infinite square well of half-width L with a purely imaginary piecewise
// barrier of strength g on (-l,0) u (0,l):  V = 0 outside, -ig on (-l,0),
// +ig on (0,l).
struct WellConfig {
    double L;
    double l;
    double g;

    WellConfig(double L_, double l_, double g_) : L(L_), l(l_), g(g_) {
        if (!(L > 0.0))
            throw std::invalid_argument("WellConfig: L must be positive");
        if (!(l > 0.0 && l < L))
            throw std::invalid_argument("WellConfig: need 0 < l < L");
        if (!(g >= 0.0))
            throw std::invalid_argument("WellConfig: g must be non-negative");
    }
};

// One bound state: kappa = s + i t, E = k^2 = t^2 - s^2, with 2 s t = g.
// `index` counts levels from 0 in order of increasing E.
struct SpectralRoot {
    double s;
    double t;
    double k;
    double E;
    int index;

    complexd kappa() const { return complexd(s, t); }
};

// Region containing x.  Throws std::domain_error at the matching points
// {-l, 0, l} and outside (-L, L).
Region classify_region(const WellConfig& cfg, double x);

// Complex potential V(x).  At the three matching points returns the average
// of the one-sided limits (0 at x=0, -ig/2 at x=-l, +ig/2 at x=l); solvers
// never consume these, only samplers do.
complexd potential_value(const WellConfig& cfg, double x);

}  // namespace ptsqw
