#include "ptsqw/wavefunction.hpp"

#include <cmath>

namespace ptsqw {

namespace {

// Branch picker on the closed interval [-L, L]; matching points go to the
// branch on their right, the endpoints to the adjacent outer branch.
Region branch_at(const WellConfig& cfg, double x) {
    if (!(x >= -cfg.L && x <= cfg.L))
        throw std::domain_error("eigenfunction: x outside [-L, L]");
    if (x < -cfg.l) return Region::L2;
    if (x < 0.0) return Region::L1;
    if (x < cfg.l) return Region::R1;
    return Region::R2;
}

}  // namespace

WaveCoefficients coefficients(const WellConfig& cfg, const SpectralRoot& root,
                              double B) {
    const double k = root.k;
    const complexd kappa = root.kappa();
    const double theta = k * (cfg.L - cfg.l);
    const complexd cth = 1.0 / std::tanh(kappa * cfg.l);

    // A   = B kappa csc(theta) csch(kappa l) / (k cot(theta) + kappa coth(kappa l))
    // C   = i kappa l B (k cot(theta) coth(kappa l) + kappa) / (same denominator),
    // both multiplied through by sin(theta) for pole-free evaluation.
    const complexd denom = k * std::cos(theta) + kappa * cth * std::sin(theta);
    const double denom_scale = std::max({1.0, k, std::abs(kappa * cth)});
    if (std::abs(denom) < 1e-12 * denom_scale)
        throw std::runtime_error(
            "coefficients: degenerate matching denominator; root is suspect");

    WaveCoefficients out;
    out.root = root;
    out.B = B;
    out.A = B * kappa / (std::sinh(kappa * cfg.l) * denom);
    const complexd c_rhs = complexd(0.0, 1.0) * kappa * cfg.l * B *
                           (k * std::cos(theta) * cth + kappa * std::sin(theta)) /
                           denom;
    out.C = c_rhs.real();
    out.c_imag_residual = std::abs(c_rhs.imag());
    return out;
}

complexd eigenfunction_value(const WellConfig& cfg, const WaveCoefficients& c,
                             double x) {
    const double k = c.root.k;
    const complexd kappa = c.root.kappa();
    const complexd i_unit(0.0, 1.0);
    switch (branch_at(cfg, x)) {
        case Region::L2:
            return std::conj(c.A) * std::sin(k * (cfg.L + x));
        case Region::L1: {
            const complexd ks = std::conj(kappa);
            return c.B * std::cosh(ks * x) +
                   i_unit * c.C / (ks * cfg.l) * std::sinh(ks * x);
        }
        case Region::R1:
            return c.B * std::cosh(kappa * x) +
                   i_unit * c.C / (kappa * cfg.l) * std::sinh(kappa * x);
        case Region::R2:
        default:
            return c.A * std::sin(k * (cfg.L - x));
    }
}

complexd eigenfunction_derivative(const WellConfig& cfg,
                                  const WaveCoefficients& c, double x) {
    const double k = c.root.k;
    const complexd kappa = c.root.kappa();
    const complexd i_unit(0.0, 1.0);
    switch (branch_at(cfg, x)) {
        case Region::L2:
            return k * std::conj(c.A) * std::cos(k * (cfg.L + x));
        case Region::L1: {
            const complexd ks = std::conj(kappa);
            return ks * c.B * std::sinh(ks * x) +
                   i_unit * c.C / cfg.l * std::cosh(ks * x);
        }
        case Region::R1:
            return kappa * c.B * std::sinh(kappa * x) +
                   i_unit * c.C / cfg.l * std::cosh(kappa * x);
        case Region::R2:
        default:
            return -k * c.A * std::cos(k * (cfg.L - x));
    }
}

complexd branch_curvature(const WellConfig& cfg, const SpectralRoot& root,
                          double x) {
    const complexd kappa = root.kappa();
    switch (branch_at(cfg, x)) {
        case Region::L2:
        case Region::R2: return -root.k * root.k;
        case Region::L1: return std::conj(kappa) * std::conj(kappa);
        case Region::R1:
        default: return kappa * kappa;
    }
}

complexd eigenfunction_second_derivative(const WellConfig& cfg,
                                         const WaveCoefficients& c, double x) {
    return branch_curvature(cfg, c.root, x) * eigenfunction_value(cfg, c, x);
}

}  // namespace ptsqw
