#include "ptsqw/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace ptsqw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<SpectralRoot> spectral_roots(const WellConfig& cfg, int n_levels,
                                         const RootScanOptions& opts) {
    if (n_levels < 1)
        throw std::invalid_argument("spectral_roots: n_levels must be positive");
    double k_hi = (n_levels + 2) * kPi / (2.0 * cfg.L);
    const double k_cap = std::max(600.0 / cfg.L, 4.0 * k_hi);
    std::vector<SpectralRoot> roots;
    for (;;) {
        const double t_max = hyperbola_t_of_k(k_hi, cfg.g) * (1.0 + 1e-12);
        roots = find_roots_on_hyperbola(cfg, t_max, opts);
        if (static_cast<int>(roots.size()) >= n_levels || k_hi >= k_cap) break;
        k_hi *= 1.5;
    }
    if (static_cast<int>(roots.size()) > n_levels) roots.resize(n_levels);
    return roots;
}

std::vector<double> energies(const WellConfig& cfg, int n_levels,
                             const RootScanOptions& opts) {
    std::vector<double> out;
    for (const auto& r : spectral_roots(cfg, n_levels, opts)) out.push_back(r.E);
    return out;
}

double asymptotic_wavenumber(const WellConfig& cfg, int n) {
    if (n < 1) throw std::invalid_argument("asymptotic_wavenumber: n >= 1");
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return n * kPi / (2.0 * cfg.L) +
           sign * 2.0 * cfg.g * cfg.g * cfg.l * cfg.L * cfg.L /
               (kPi * kPi * kPi * static_cast<double>(n) * n * n);
}

double asymptotic_energy(const WellConfig& cfg, int n) {
    if (n < 1) throw std::invalid_argument("asymptotic_energy: n >= 1");
    const double base = n * kPi / (2.0 * cfg.L);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return base * base +
           sign * 2.0 * cfg.g * cfg.g * cfg.l * cfg.L / (kPi * kPi * n * n);
}

namespace {

// Roots in the frozen k window; the window is set up once per search so
// that it contains the lowest pair and nothing else.
std::vector<double> window_roots(double l, double L, double g, double k_cap,
                                 const RootScanOptions& scan) {
    const WellConfig cfg(L, l, g);
    const double k_lo = std::sqrt(2.0 * g * scan.exclusion_eps);
    return scan_hyperbola_roots(cfg, k_lo, k_cap, scan);
}

}  // namespace

CriticalCoupling critical_coupling(double l, double L, double tol_rel,
                                   const CriticalSearchOptions& opts) {
    if (!(l > 0.0 && l < L))
        throw std::invalid_argument("critical_coupling: need 0 < l < L");
    if (!(tol_rel >= 1e-6))
        throw std::invalid_argument("critical_coupling: tol_rel must be >= 1e-6");

    // Initial bracket from the Table-1 trend g_c ~ (L/l)^(1.2..2).
    const double scale = std::pow(L / std::max(l, 1e-3), 1.2);
    double g_lo = 1.0 * scale;
    double g_hi = 8.0 * scale;

    // Freeze the counting window [k_lo(g), k_cap] at a coupling where the
    // three lowest roots are present: k_cap halfway between roots 1 and 2.
    // As g grows the lowest pair converges inside the window while the next
    // level moves up, so a count < 2 in the window signals the merge.
    std::vector<double> r;
    for (int tries = 0;; ++tries) {
        r = window_roots(l, L, g_lo, 4.5 * kPi / L, opts.scan);
        if (r.size() >= 3) break;
        if (tries >= 12)
            throw std::runtime_error(
                "critical_coupling: could not establish a real 3-level spectrum "
                "below the initial bracket");
        g_lo *= 0.25;
    }
    const double k_cap = 0.5 * (r[1] + r[2]);

    auto pair_energies = [&](double g, double& e_lo, double& e_hi) -> bool {
        const std::vector<double> rr = window_roots(l, L, g, k_cap, opts.scan);
        if (rr.size() < 2) return false;
        e_lo = rr[0] * rr[0];
        e_hi = rr[1] * rr[1];
        return true;
    };

    double e0 = 0.0, e1 = 0.0;
    if (!pair_energies(g_lo, e0, e1))
        throw std::runtime_error("critical_coupling: lowest pair absent at the initial g_lo");

    while (true) {
        double d0, d1;
        if (!pair_energies(g_hi, d0, d1)) break;
        g_lo = g_hi;
        e0 = d0;
        e1 = d1;
        g_hi *= 2.0;
        if (g_hi > opts.g_upper)
            throw std::runtime_error(
                "critical_coupling: no level merge found below g_upper = " +
                std::to_string(opts.g_upper) +
                "; raise CriticalSearchOptions::g_upper (g_c grows faster than 1/l)");
    }

    while ((g_hi - g_lo) > tol_rel * g_hi) {
        const double gm = 0.5 * (g_lo + g_hi);
        double d0, d1;
        if (pair_energies(gm, d0, d1)) {
            g_lo = gm;
            e0 = d0;
            e1 = d1;
        } else {
            g_hi = gm;
        }
    }

    CriticalCoupling out;
    out.l = l;
    out.L = L;
    out.g_c = 0.5 * (g_lo + g_hi);
    out.merge_energy = 0.5 * (e0 + e1);
    out.bracket_width = g_hi - g_lo;
    return out;
}

std::vector<GcSweepEntry> gc_sweep(double L, const std::vector<double>& l_values,
                                   double tol_rel,
                                   const CriticalSearchOptions& opts) {
    std::vector<GcSweepEntry> out;
    out.reserve(l_values.size());
    for (double l : l_values) {
        GcSweepEntry e;
        e.l = l;
        try {
            e.result = critical_coupling(l, L, tol_rel, opts);
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ptsqw
