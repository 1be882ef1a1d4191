#include "ptsqw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptsqw {

std::vector<complexd> complex_symmetric_tridiagonal_eigenvalues(
    std::vector<complexd> d, std::vector<complexd> e) {
    const int n = static_cast<int>(d.size());
    if (static_cast<int>(e.size()) != n - 1)
        throw std::invalid_argument("tridiagonal: off.size() must be diag.size()-1");
    if (n == 0) return {};
    e.push_back(0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            while (m < n - 1) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
                ++m;
            }
            if (m == l) break;
            if (++iter > 80)
                throw std::runtime_error(
                    "complex_symmetric_tridiagonal_eigenvalues: QL did not converge");

            // implicit Wilkinson-like shift
            complexd g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            complexd r = std::sqrt(g * g + 1.0);
            const complexd gp = g + r, gm = g - r;
            g = d[m] - d[l] + e[l] / (std::abs(gp) >= std::abs(gm) ? gp : gm);

            complexd s = 1.0, c = 1.0, p = 0.0;
            bool restart = false;
            for (int i = m - 1; i >= l; --i) {
                complexd f = s * e[i];
                const complexd b = c * e[i];
                r = std::sqrt(f * f + g * g);
                e[i + 1] = r;
                if (r == 0.0) {
                    // complex-orthogonal rotation broke down; deflate here
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    restart = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (restart) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    return d;
}

namespace {

std::vector<complexd> fd_eigenvalues(
    const std::function<complexd(double)>& potential, double L_eff, int N) {
    const double h = 2.0 * L_eff / (N + 1);
    std::vector<complexd> diag(N), off(N - 1, -1.0 / (h * h));
    for (int i = 0; i < N; ++i)
        diag[i] = 2.0 / (h * h) + potential(-L_eff + (i + 1) * h);
    auto ev = complex_symmetric_tridiagonal_eigenvalues(std::move(diag),
                                                        std::move(off));
    std::sort(ev.begin(), ev.end(), [](const complexd& a, const complexd& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ev;
}

}  // namespace

std::vector<complexd> OracleSpectrum::lowest(int n) const {
    const auto& src =
        richardson_eigenvalues.empty() ? eigenvalues : richardson_eigenvalues;
    const int m = std::min<int>(n, static_cast<int>(src.size()));
    return {src.begin(), src.begin() + m};
}

OracleSpectrum fd_spectrum(const std::function<complexd(double)>& potential,
                           double L_eff, int N, int n_levels,
                           const FdOptions& opts) {
    if (N < 200) throw std::invalid_argument("fd_spectrum: N must be >= 200");
    if (n_levels < 1 || n_levels > N)
        throw std::invalid_argument("fd_spectrum: bad n_levels");

    OracleSpectrum out;
    out.grid_size = N;
    out.imag_threshold = opts.imag_threshold;
    out.eigenvalues = fd_eigenvalues(potential, L_eff, N);

    if (opts.richardson) {
        const int M = opts.refined_N > 0 ? opts.refined_N : 2 * N;
        if (M <= N)
            throw std::invalid_argument("fd_spectrum: refined grid must be finer");
        const auto fine = fd_eigenvalues(potential, L_eff, M);
        const double r = static_cast<double>(M + 1) / (N + 1);  // h_coarse / h_fine
        const double r2 = r * r;

        out.richardson_eigenvalues.reserve(n_levels);
        for (int i = 0; i < n_levels; ++i) {
            const complexd ec = out.eigenvalues[i];
            // local gap on the coarse grid
            double gap = 1e300;
            if (i > 0) gap = std::min(gap, std::abs(ec - out.eigenvalues[i - 1]));
            if (i + 1 < N) gap = std::min(gap, std::abs(out.eigenvalues[i + 1] - ec));
            // nearest fine-grid level by real part
            int best = -1;
            double dist = 1e300;
            for (size_t j = 0; j < fine.size(); ++j) {
                const double dd = std::abs(fine[j].real() - ec.real());
                if (dd < dist) {
                    dist = dd;
                    best = static_cast<int>(j);
                }
            }
            if (best < 0 || dist > opts.pairing_gap_factor * gap)
                throw std::runtime_error(
                    "fd_spectrum: level pairing between grids failed (gap too small)");
            out.richardson_eigenvalues.push_back(
                (r2 * fine[best] - ec) / (r2 - 1.0));
        }
    }
    return out;
}

OracleSpectrum fd_spectrum(const WellConfig& cfg, int N, int n_levels,
                           const FdOptions& opts) {
    return fd_spectrum([&cfg](double x) { return potential_value(cfg, x); },
                       cfg.L, N, n_levels, opts);
}

RealityCensus oracle_reality_census(const WellConfig& cfg, int N,
                                    double imag_threshold, int n_levels) {
    FdOptions opts;
    opts.richardson = false;
    opts.imag_threshold = imag_threshold;
    const OracleSpectrum spec = fd_spectrum(cfg, N, n_levels, opts);
    const auto low = spec.lowest(n_levels);

    RealityCensus census;
    census.near_real_count = 0;
    std::vector<bool> paired(low.size(), false);
    for (size_t i = 0; i < low.size(); ++i) {
        const double im = std::abs(low[i].imag());
        if (im > 0.1 * imag_threshold && im < 10.0 * imag_threshold)
            census.unstable.push_back(low[i]);
        if (im < imag_threshold) {
            ++census.near_real_count;
            continue;
        }
        if (paired[i]) continue;
        // find the conjugate partner among the remaining levels
        int mate = -1;
        double best = 1e300;
        for (size_t j = i + 1; j < low.size(); ++j) {
            if (paired[j]) continue;
            const double dd = std::abs(low[j] - std::conj(low[i]));
            if (dd < best) {
                best = dd;
                mate = static_cast<int>(j);
            }
        }
        const double tol = std::max(1e-6 * std::abs(low[i]), 100.0 * imag_threshold);
        if (mate >= 0 && best < tol) {
            paired[i] = paired[mate] = true;
            const complexd a = low[i].imag() > 0 ? low[i] : low[mate];
            const complexd b = low[i].imag() > 0 ? low[mate] : low[i];
            census.complex_pairs.emplace_back(a, b);
        } else {
            // complex but unpaired within the window: still report it
            census.complex_pairs.emplace_back(low[i], std::conj(low[i]));
            paired[i] = true;
        }
    }
    return census;
}

}  // namespace ptsqw
