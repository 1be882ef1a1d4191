#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ptsqw/wavefunction.hpp"
#include "ptsqw/well.hpp"

namespace ptsqw {

// Everything needed to write down the superpotential W and the partner
// potential in closed form: the ground-state wavenumbers and the four
// integration constants.  x_L2 and x_R2 are fixed so that the partner
// blows up at the hard walls; x_R1 is the complex constant solving
//   tanh(kappa0 x_R1) = (k0 cot[k0(L-l)] coth(kappa0 l) + kappa0)
//                       / (k0 cot[k0(L-l)] + kappa0 coth(kappa0 l))
// and x_L1 = conj(x_R1).
struct SusyParameters {
    double k0;
    complexd kappa0;  // s0 + i t0, Re > 0
    double E0;        // factorization energy k0^2
    double x_L2;      // L + pi/(2 k0)
    double x_R2;      // L - pi/(2 k0)
    complexd x_R1;
    complexd x_L1;
    // residuals of the real/imaginary split system for x_R1
    double split_residual_r;
    double split_residual_i;
};

// Solves for x_R1 with the principal complex artanh, then picks the branch
// (shifts by i pi / kappa0) minimizing |Im(kappa0 x_R1)| and verifies the
// split system to 1e-9.  Throws if the shared denominator of the split
// system vanishes or no branch verifies.
SusyParameters susy_parameters(const WellConfig& cfg, const SpectralRoot& ground);

// Region-wise superpotential
//   W_L2 = -k0 cot[k0(x+L)]            W_L1 = -kappa0* tanh[kappa0*(x + x_L1)]
//   W_R1 = -kappa0 tanh[kappa0(x - x_R1)]   W_R2 = -k0 cot[k0(x-L)]
// and its first two derivatives.  Throws a pole error within
// 1e-8 L of the hard walls, where W and the partner potential blow up.
complexd superpotential_value(const SusyParameters& p, const WellConfig& cfg,
                              double x);
complexd superpotential_derivative(const SusyParameters& p,
                                   const WellConfig& cfg, double x);
complexd superpotential_second_derivative(const SusyParameters& p,
                                          const WellConfig& cfg, double x);

// Partner potential
//   V-_L2 = 2 k0^2 csc^2[k0(x+L)]
//   V-_L1 = -2 kappa0*^2 sech^2[kappa0*(x + x_L1)] - i g
//   V-_R1 = -2 kappa0^2  sech^2[kappa0(x - x_R1)]  + i g
//   V-_R2 = 2 k0^2 csc^2[k0(x-L)]
complexd partner_potential_value(const SusyParameters& p, const WellConfig& cfg,
                                 double x);

// Eigenfunction of the partner Hamiltonian obtained from the (n+1)-th state
// of the primary problem, with the single matching constant chosen purely
// imaginary (C- = i) so that the result is PT-symmetric.  `excited` and
// `coeffs` describe the primary state being mapped down.
complexd partner_eigenfunction_value(const WellConfig& cfg,
                                     const SusyParameters& p,
                                     const SpectralRoot& excited,
                                     const WaveCoefficients& coeffs, double x);
complexd partner_eigenfunction_derivative(const WellConfig& cfg,
                                          const SusyParameters& p,
                                          const SpectralRoot& excited,
                                          const WaveCoefficients& coeffs,
                                          double x);

struct SusyVerificationReport {
    // max |psi0' + W psi0| over the sample set (A psi0 = 0), absolute;
    // compare against ground_derivative_scale
    double annihilation_residual;
    // max |(-psi'' + (V+ - E0) psi) - Abar A psi| / local scale,
    // analytic derivatives
    double factorization_residual;
    // max |A(H+ psi) - H-(A psi)| / local scale over excited states
    double intertwining_residual;
    // per matching point, max over n of |jump psi-| and |jump psi-'|,
    // relative to max |psi-_n|
    std::map<double, double> partner_matching_residuals;
    // one-sided jumps of V- at the matching points (right minus left)
    std::map<double, complexd> discontinuity_jumps;
    // scales the residuals were measured against
    double ground_derivative_scale;  // max |psi0'|
    std::vector<double> partner_scales;
};

// Numeric verification of the factorization, intertwining, annihilation and
// partner-matching structure.  `roots` is the validated spectrum, ground
// state first; at least two roots are required for the intertwining and
// matching checks.
SusyVerificationReport verify_susy(const WellConfig& cfg,
                                   const SusyParameters& p,
                                   const std::vector<SpectralRoot>& roots);

// The two contradiction witnesses showing the partner keeps all three
// discontinuities:
//   first:  (-kappa0^2 + ig/2) - k0^2      (continuity at x = l would need 0;
//            equals -ig/2 once kappa0^2 = ig - k0^2 is imposed)
//   second: (-kappa0^2 + ig/2) - (-kappa0*^2 - ig/2)   (continuity at x = 0;
//            equals -ig)
// Both are nonzero for every g > 0.
std::pair<complexd, complexd> discontinuity_certificates(
    const SusyParameters& p, const WellConfig& cfg);

}  // namespace ptsqw
