#pragma once

#include "ptsqw/well.hpp"

namespace ptsqw {

// Matching constants of the piecewise eigenfunction
//   psi_L2 = A* sin k(L+x)
//   psi_L1 = B cosh(kappa* x) + i C/(kappa* l) sinh(kappa* x)
//   psi_R1 = B cosh(kappa x)  + i C/(kappa l)  sinh(kappa x)
//   psi_R2 = A sin k(L-x)
// with B and C real.  The overall scale is a convention; B = 1 by default
// (the pseudo-norm is out of scope).  c_imag_residual records |Im| of the
// right-hand side of the C formula, which must vanish at a true root and
// grows as the pair approaches coalescence -- a useful quality metric.
struct WaveCoefficients {
    complexd A;
    double B;
    double C;
    double c_imag_residual;
    SpectralRoot root;
};

WaveCoefficients coefficients(const WellConfig& cfg, const SpectralRoot& root,
                              double B = 1.0);

// Pointwise evaluation on [-L, L].  At a matching point the right-hand
// branch is used (both sides agree by construction; tests assert it).
complexd eigenfunction_value(const WellConfig& cfg, const WaveCoefficients& c,
                             double x);
complexd eigenfunction_derivative(const WellConfig& cfg,
                                  const WaveCoefficients& c, double x);
// Analytic branch curvature: psi'' = -k^2 psi outside the barrier,
// kappa^2 psi (kappa*^2 psi) inside.
complexd eigenfunction_second_derivative(const WellConfig& cfg,
                                         const WaveCoefficients& c, double x);

// The per-branch constant mu with psi'' = mu psi (and psi''' = mu psi').
complexd branch_curvature(const WellConfig& cfg, const SpectralRoot& root,
                          double x);

}  // namespace ptsqw
