#include "ptsqw/susy.hpp"

#include <algorithm>
#include <cmath>

namespace ptsqw {

namespace {

constexpr double kPi = 3.14159265358979323846;
const complexd kI(0.0, 1.0);

Region branch_at(const WellConfig& cfg, double x) {
    if (!(x >= -cfg.L && x <= cfg.L))
        throw std::domain_error("susy: x outside [-L, L]");
    if (x < -cfg.l) return Region::L2;
    if (x < 0.0) return Region::L1;
    if (x < cfg.l) return Region::R1;
    return Region::R2;
}

void check_pole(const WellConfig& cfg, double x) {
    const double eps = 1e-8 * cfg.L;
    if (std::abs(x - cfg.L) < eps || std::abs(x + cfg.L) < eps)
        throw std::domain_error(
            "susy: evaluation at a hard-wall pole of W / partner potential");
}

complexd sech2(const complexd& z) {
    const complexd c = std::cosh(z);
    return 1.0 / (c * c);
}

double csc2(double u) {
    const double s = std::sin(u);
    return 1.0 / (s * s);
}

}  // namespace

SusyParameters susy_parameters(const WellConfig& cfg, const SpectralRoot& ground) {
    SusyParameters p;
    p.k0 = ground.k;
    p.kappa0 = ground.kappa();
    p.E0 = ground.k * ground.k;
    p.x_L2 = cfg.L + kPi / (2.0 * p.k0);
    p.x_R2 = cfg.L - kPi / (2.0 * p.k0);

    const double s0 = ground.s, t0 = ground.t, k0 = ground.k;
    const double theta = k0 * (cfg.L - cfg.l);
    const complexd th_kl = std::tanh(p.kappa0 * cfg.l);

    // tanh(kappa0 x_R1) = (k0 cot(theta) coth(kappa0 l) + kappa0)
    //                     / (k0 cot(theta) + kappa0 coth(kappa0 l)),
    // written pole-free by multiplying through with sin(theta) tanh(kappa0 l).
    const complexd w = (k0 * std::cos(theta) + p.kappa0 * th_kl * std::sin(theta)) /
                       (k0 * std::cos(theta) * th_kl + p.kappa0 * std::sin(theta));

    // Split-system data (real and imaginary part of the same relation).
    const double c2t = std::cos(2.0 * theta);
    const double s2t = std::sin(2.0 * theta);
    const double Nr = (-s0 * s0 * c2t + t0 * t0) * std::sinh(2.0 * s0 * cfg.l) +
                      k0 * s0 * s2t * std::cosh(2.0 * s0 * cfg.l);
    const double Ni = (s0 * s0 - t0 * t0 * c2t) * std::sin(2.0 * t0 * cfg.l) -
                      k0 * t0 * s2t * std::cos(2.0 * t0 * cfg.l);
    const double D =
        (-s0 * s0 * c2t + t0 * t0) * std::cosh(2.0 * s0 * cfg.l) +
        (s0 * s0 - t0 * t0 * c2t) * std::cos(2.0 * t0 * cfg.l) +
        k0 * s2t * (s0 * std::sinh(2.0 * s0 * cfg.l) + t0 * std::sin(2.0 * t0 * cfg.l));
    const double d_scale = std::abs((-s0 * s0 * c2t + t0 * t0)) *
                               std::cosh(2.0 * s0 * cfg.l) +
                           std::abs(s0 * s0 - t0 * t0 * c2t) +
                           std::abs(k0 * s2t) * (s0 * std::sinh(2.0 * s0 * cfg.l) +
                                                 t0 * std::abs(std::sin(2.0 * t0 * cfg.l)));
    if (std::abs(D) < 1e-12 * std::max(1.0, d_scale))
        throw std::runtime_error("susy_parameters: split-system denominator vanishes");

    auto split_residuals = [&](const complexd& z, double& rr, double& ri) {
        const double X = z.real(), Y = z.imag();
        const double den = std::pow(std::cosh(X) * std::cos(Y), 2) +
                           std::pow(std::sinh(X) * std::sin(Y), 2);
        rr = std::abs(std::sinh(X) * std::cosh(X) / den - Nr / D);
        ri = std::abs(std::sin(Y) * std::cos(Y) / den - Ni / D);
    };

    // Principal artanh, then search the i pi period for the branch with the
    // smallest |Im(kappa0 x_R1)| that still verifies the split system.
    const complexd z0 = std::atanh(w);
    bool found = false;
    complexd best_z;
    double best_im = 0.0, best_rr = 0.0, best_ri = 0.0;
    for (int m = -2; m <= 2; ++m) {
        const complexd z = z0 + complexd(0.0, kPi * m);
        double rr, ri;
        split_residuals(z, rr, ri);
        if (rr > 1e-9 || ri > 1e-9) continue;
        if (!found || std::abs(z.imag()) < best_im) {
            found = true;
            best_z = z;
            best_im = std::abs(z.imag());
            best_rr = rr;
            best_ri = ri;
        }
    }
    if (!found)
        throw std::runtime_error(
            "susy_parameters: no artanh branch satisfies the split system to 1e-9");

    p.x_R1 = best_z / p.kappa0;
    p.x_L1 = std::conj(p.x_R1);
    p.split_residual_r = best_rr;
    p.split_residual_i = best_ri;
    return p;
}

complexd superpotential_value(const SusyParameters& p, const WellConfig& cfg,
                              double x) {
    check_pole(cfg, x);
    switch (branch_at(cfg, x)) {
        case Region::L2:
            return -p.k0 / std::tan(p.k0 * (x + cfg.L));
        case Region::L1: {
            const complexd ks = std::conj(p.kappa0);
            return -ks * std::tanh(ks * (x + p.x_L1));
        }
        case Region::R1:
            return -p.kappa0 * std::tanh(p.kappa0 * (x - p.x_R1));
        case Region::R2:
        default:
            return -p.k0 / std::tan(p.k0 * (x - cfg.L));
    }
}

complexd superpotential_derivative(const SusyParameters& p, const WellConfig& cfg,
                                   double x) {
    check_pole(cfg, x);
    switch (branch_at(cfg, x)) {
        case Region::L2:
            return p.k0 * p.k0 * csc2(p.k0 * (x + cfg.L));
        case Region::L1: {
            const complexd ks = std::conj(p.kappa0);
            return -ks * ks * sech2(ks * (x + p.x_L1));
        }
        case Region::R1:
            return -p.kappa0 * p.kappa0 * sech2(p.kappa0 * (x - p.x_R1));
        case Region::R2:
        default:
            return p.k0 * p.k0 * csc2(p.k0 * (x - cfg.L));
    }
}

complexd superpotential_second_derivative(const SusyParameters& p,
                                          const WellConfig& cfg, double x) {
    check_pole(cfg, x);
    switch (branch_at(cfg, x)) {
        case Region::L2: {
            const double u = p.k0 * (x + cfg.L);
            return -2.0 * p.k0 * p.k0 * p.k0 * csc2(u) / std::tan(u);
        }
        case Region::L1: {
            const complexd ks = std::conj(p.kappa0);
            const complexd v = ks * (x + p.x_L1);
            return 2.0 * ks * ks * ks * sech2(v) * std::tanh(v);
        }
        case Region::R1: {
            const complexd v = p.kappa0 * (x - p.x_R1);
            return 2.0 * p.kappa0 * p.kappa0 * p.kappa0 * sech2(v) * std::tanh(v);
        }
        case Region::R2:
        default: {
            const double u = p.k0 * (x - cfg.L);
            return -2.0 * p.k0 * p.k0 * p.k0 * csc2(u) / std::tan(u);
        }
    }
}

complexd partner_potential_value(const SusyParameters& p, const WellConfig& cfg,
                                 double x) {
    check_pole(cfg, x);
    const double two_k02 = 2.0 * p.k0 * p.k0;
    switch (branch_at(cfg, x)) {
        case Region::L2:
            return two_k02 * csc2(p.k0 * (x + cfg.L));
        case Region::L1: {
            const complexd ks = std::conj(p.kappa0);
            return -2.0 * ks * ks * sech2(ks * (x + p.x_L1)) - kI * cfg.g;
        }
        case Region::R1:
            return -2.0 * p.kappa0 * p.kappa0 * sech2(p.kappa0 * (x - p.x_R1)) +
                   kI * cfg.g;
        case Region::R2:
        default:
            return two_k02 * csc2(p.k0 * (x - cfg.L));
    }
}

complexd partner_eigenfunction_value(const WellConfig& cfg,
                                     const SusyParameters& p,
                                     const SpectralRoot& excited,
                                     const WaveCoefficients& coeffs, double x) {
    if (!(x >= -cfg.L && x <= cfg.L))
        throw std::domain_error("partner_eigenfunction: x outside [-L, L]");
    if (x == -cfg.L || x == cfg.L) return {0.0, 0.0};  // Dirichlet, exact

    const complexd Cm = kI;  // PT symmetry wants the common constant imaginary
    const double k = excited.k;
    const complexd kap = excited.kappa();

    switch (branch_at(cfg, x)) {
        case Region::L2: {
            const double th = cfg.L + x;
            return Cm * std::conj(coeffs.A) *
                   (k * std::cos(k * th) -
                    p.k0 * std::sin(k * th) / std::tan(p.k0 * th));
        }
        case Region::L1: {
            const complexd ks = std::conj(kap);
            const complexd k0s = std::conj(p.kappa0);
            const complexd th = std::tanh(k0s * (x + p.x_L1));
            const complexd bterm =
                coeffs.B * (ks * std::sinh(ks * x) - k0s * th * std::cosh(ks * x));
            const complexd cterm =
                kI * coeffs.C / (ks * cfg.l) *
                (ks * std::cosh(ks * x) - k0s * th * std::sinh(ks * x));
            return Cm * (bterm + cterm);
        }
        case Region::R1: {
            const complexd th = std::tanh(p.kappa0 * (x - p.x_R1));
            const complexd bterm =
                coeffs.B *
                (kap * std::sinh(kap * x) - p.kappa0 * th * std::cosh(kap * x));
            const complexd cterm =
                kI * coeffs.C / (kap * cfg.l) *
                (kap * std::cosh(kap * x) - p.kappa0 * th * std::sinh(kap * x));
            return Cm * (bterm + cterm);
        }
        case Region::R2:
        default: {
            const double th = cfg.L - x;
            return Cm * coeffs.A *
                   (-k * std::cos(k * th) +
                    p.k0 * std::sin(k * th) / std::tan(p.k0 * th));
        }
    }
}

complexd partner_eigenfunction_derivative(const WellConfig& cfg,
                                          const SusyParameters& p,
                                          const SpectralRoot& excited,
                                          const WaveCoefficients& coeffs,
                                          double x) {
    // d/dx [C- (psi' + W psi)] = C- (psi'' + W' psi + W psi'), all analytic.
    const complexd psi = eigenfunction_value(cfg, coeffs, x);
    const complexd dpsi = eigenfunction_derivative(cfg, coeffs, x);
    const complexd ddpsi = eigenfunction_second_derivative(cfg, coeffs, x);
    const complexd W = superpotential_value(p, cfg, x);
    const complexd Wp = superpotential_derivative(p, cfg, x);
    return kI * (ddpsi + Wp * psi + W * dpsi);
}

namespace {

std::vector<double> chebyshev_points(double a, double b, int n) {
    std::vector<double> xs(n);
    for (int j = 0; j < n; ++j)
        xs[j] = 0.5 * (a + b) +
                0.5 * (b - a) * std::cos(kPi * (2.0 * j + 1.0) / (2.0 * n));
    return xs;
}

}  // namespace

SusyVerificationReport verify_susy(const WellConfig& cfg, const SusyParameters& p,
                                   const std::vector<SpectralRoot>& roots) {
    if (roots.empty())
        throw std::invalid_argument("verify_susy: need at least the ground root");

    SusyVerificationReport rep{};

    // Sample sets: 64 Chebyshev points per region, 1e-6 L away from the
    // matching points.  Against the hard walls a wider margin of 1e-2 L is
    // kept: the csc^2 pole amplifies rounding as 1/(x -+ L)^2 and double
    // precision cannot hold the target tolerances closer in.
    const double dm = 1e-6 * cfg.L;
    const double dw = 1e-2 * cfg.L;
    const int n_pts = 64;
    std::vector<double> samples;
    for (auto [a, b] : {std::pair<double, double>{-cfg.L + dw, -cfg.l - dm},
                        {-cfg.l + dm, -dm},
                        {dm, cfg.l - dm},
                        {cfg.l + dm, cfg.L - dw}}) {
        auto xs = chebyshev_points(a, b, n_pts);
        samples.insert(samples.end(), xs.begin(), xs.end());
    }

    const WaveCoefficients ground = coefficients(cfg, roots[0]);

    // (a) annihilation  A psi0 = psi0' + W psi0 = 0
    double ann = 0.0, dscale = 0.0;
    for (double x : samples) {
        const complexd r = eigenfunction_derivative(cfg, ground, x) +
                           superpotential_value(p, cfg, x) *
                               eigenfunction_value(cfg, ground, x);
        ann = std::max(ann, std::abs(r));
        dscale = std::max(dscale, std::abs(eigenfunction_derivative(cfg, ground, x)));
    }
    rep.annihilation_residual = ann;
    rep.ground_derivative_scale = dscale;

    // (b) factorization  H+ psi = Abar A psi, normalized by the largest
    // term entering either side
    double fact = 0.0;
    for (const auto& root : roots) {
        const WaveCoefficients c = coefficients(cfg, root);
        for (double x : samples) {
            const complexd psi = eigenfunction_value(cfg, c, x);
            const complexd dpsi = eigenfunction_derivative(cfg, c, x);
            const complexd ddpsi = eigenfunction_second_derivative(cfg, c, x);
            const complexd V = potential_value(cfg, x);
            const complexd W = superpotential_value(p, cfg, x);
            const complexd Wp = superpotential_derivative(p, cfg, x);
            const complexd lhs = -ddpsi + (V - p.E0) * psi;
            const complexd rhs = -ddpsi - Wp * psi + W * W * psi;
            const double scale = std::max(
                {1.0, std::abs(ddpsi), std::abs(W * W * psi), std::abs(lhs)});
            fact = std::max(fact, std::abs(lhs - rhs) / scale);
        }
    }
    rep.factorization_residual = fact;

    // (c) intertwining  A (H+ psi) = H- (A psi) for the excited states
    double intw = 0.0;
    std::vector<WaveCoefficients> excited;
    for (size_t n = 1; n < roots.size(); ++n)
        excited.push_back(coefficients(cfg, roots[n]));
    for (size_t n = 0; n < excited.size(); ++n) {
        const WaveCoefficients& c = excited[n];
        for (double x : samples) {
            const complexd psi = eigenfunction_value(cfg, c, x);
            const complexd dpsi = eigenfunction_derivative(cfg, c, x);
            const complexd mu = branch_curvature(cfg, c.root, x);
            const complexd V = potential_value(cfg, x);
            const complexd W = superpotential_value(p, cfg, x);
            const complexd Wp = superpotential_derivative(p, cfg, x);
            const complexd Wpp = superpotential_second_derivative(p, cfg, x);
            const complexd Vm = partner_potential_value(p, cfg, x);

            // H+ psi = (V - E0 - mu) psi with a region-constant prefactor,
            // so A(H+ psi) = (V - E0 - mu)(psi' + W psi)
            const complexd alpha = V - p.E0 - mu;
            const complexd a_hpsi = alpha * (dpsi + W * psi);

            // H-(A psi) with chi = psi' + W psi,
            // chi'' = mu psi' + W'' psi + 2 W' psi' + W mu psi
            const complexd chi = dpsi + W * psi;
            const complexd chi_dd =
                mu * dpsi + Wpp * psi + 2.0 * Wp * dpsi + W * mu * psi;
            const complexd h_chi = -chi_dd + (Vm - p.E0) * chi;

            const double scale =
                std::max({1.0, std::abs(a_hpsi), std::abs(h_chi), std::abs(chi_dd),
                          std::abs((Vm - p.E0) * chi)});
            intw = std::max(intw, std::abs(a_hpsi - h_chi) / scale);
        }
    }
    rep.intertwining_residual = intw;

    // partner scales
    for (size_t n = 0; n < excited.size(); ++n) {
        double sc = 0.0;
        for (double x : samples)
            sc = std::max(sc, std::abs(partner_eigenfunction_value(
                                  cfg, p, roots[n + 1], excited[n], x)));
        rep.partner_scales.push_back(sc);
    }

    // (d) partner matching at the three discontinuities, one-sided limits
    for (double m : {-cfg.l, 0.0, cfg.l}) {
        const double xl = std::nextafter(m, -2.0 * cfg.L);
        const double xr = std::nextafter(m, 2.0 * cfg.L);
        double worst = 0.0;
        for (size_t n = 0; n < excited.size(); ++n) {
            const complexd vjump =
                partner_eigenfunction_value(cfg, p, roots[n + 1], excited[n], xr) -
                partner_eigenfunction_value(cfg, p, roots[n + 1], excited[n], xl);
            const complexd djump =
                partner_eigenfunction_derivative(cfg, p, roots[n + 1], excited[n], xr) -
                partner_eigenfunction_derivative(cfg, p, roots[n + 1], excited[n], xl);
            const double sc = rep.partner_scales[n] > 0 ? rep.partner_scales[n] : 1.0;
            worst = std::max({worst, std::abs(vjump) / sc, std::abs(djump) / sc});
        }
        rep.partner_matching_residuals[m] = worst;
    }

    // (e) one-sided jumps of the partner potential
    for (double m : {-cfg.l, 0.0, cfg.l}) {
        const double xl = std::nextafter(m, -2.0 * cfg.L);
        const double xr = std::nextafter(m, 2.0 * cfg.L);
        rep.discontinuity_jumps[m] = partner_potential_value(p, cfg, xr) -
                                     partner_potential_value(p, cfg, xl);
    }

    return rep;
}

std::pair<complexd, complexd> discontinuity_certificates(const SusyParameters& p,
                                                         const WellConfig& cfg) {
    const complexd k02 = p.kappa0 * p.kappa0;
    const complexd half_ig = 0.5 * kI * cfg.g;
    const complexd first = (-k02 + half_ig) - p.E0;
    const complexd second = (-k02 + half_ig) - (-std::conj(k02) - half_ig);
    return {first, second};
}

}  // namespace ptsqw
