#include "ptsqw/secular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace ptsqw {

namespace {

constexpr double kPi = 3.14159265358979323846;

double residual_raw(double L, double l, double s, double t) {
    const double k = std::sqrt(std::max(t * t - s * s, 0.0));
    const double th = 2.0 * k * (L - l);
    return k * std::sin(th) * (s * s * std::cosh(2 * s * l) + t * t * std::cos(2 * t * l)) -
           std::cos(th) * (s * s * s * std::sinh(2 * s * l) - t * t * t * std::sin(2 * t * l)) +
           s * t * t * std::sinh(2 * s * l) - s * s * t * std::sin(2 * t * l);
}

}  // namespace

double secular_residual(double L, double l, double s, double t) {
    if (!(s > 0.0) || t < s)
        throw std::domain_error("secular_residual: need t >= s > 0");
    return residual_raw(L, l, s, t);
}

double secular_residual(const WellConfig& cfg, double s, double t) {
    return secular_residual(cfg.L, cfg.l, s, t);
}

double secular_residual_reduced(double L, double l, double s, double t) {
    if (!(s > 0.0) || !(t > s))
        throw std::domain_error("secular_residual_reduced: need t > s > 0");
    return residual_raw(L, l, s, t) / ((t - s) * (t + s));
}

double hyperbola_t_of_k(double k, double g) {
    return std::sqrt(0.5 * (k * k + std::hypot(k * k, g)));
}

namespace {

double residual_at_k(const WellConfig& cfg, double k) {
    const double t = hyperbola_t_of_k(k, cfg.g);
    const double s = cfg.g / (2.0 * t);
    return residual_raw(cfg.L, cfg.l, s, t);
}

double bisect_k(const WellConfig& cfg, double a, double b, double fa, double tol) {
    for (int i = 0; i < 200 && (b - a) > tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = residual_at_k(cfg, m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Locate the extremum of f between a and b (f has equal signs at both ends
// and dips toward zero in between) by golden-section on sign(f)*f.
double golden_extremum(const WellConfig& cfg, double a, double b, double sgn) {
    constexpr double w = 0.3819660112501051;
    for (int i = 0; i < 90 && (b - a) > 1e-15 * std::max(1.0, b); ++i) {
        const double m1 = a + w * (b - a);
        const double m2 = b - w * (b - a);
        if (sgn * residual_at_k(cfg, m1) < sgn * residual_at_k(cfg, m2))
            b = m2;
        else
            a = m1;
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> scan_hyperbola_roots(const WellConfig& cfg, double k_lo,
                                         double k_hi,
                                         const RootScanOptions& opts) {
    std::vector<double> roots;
    if (!(k_hi > k_lo)) return roots;

    const double step =
        0.5 * (opts.k_step > 0.0 ? opts.k_step : std::min(0.05, kPi / (8.0 * cfg.L)));
    const int n = std::max(2, static_cast<int>(std::ceil((k_hi - k_lo) / step)));
    const double h = (k_hi - k_lo) / n;

    std::vector<double> ks(n + 1), fs(n + 1);
    for (int i = 0; i <= n; ++i) {
        ks[i] = k_lo + i * h;
        fs[i] = residual_at_k(cfg, ks[i]);
    }

    std::vector<std::pair<double, double>> brackets;
    for (int i = 0; i < n; ++i) {
        if (fs[i] == 0.0) {
            roots.push_back(ks[i]);
        } else if (fs[i] * fs[i + 1] < 0.0) {
            brackets.emplace_back(ks[i], ks[i + 1]);
        }
    }
    if (fs[n] == 0.0) roots.push_back(ks[n]);

    // Equal-sign dip: a sample that is a strict local minimum of |f| among
    // its neighbours may hide a nearly-merged root pair.  Refine the
    // extremum; if f changes sign there, split into two brackets.
    for (int i = 1; i < n; ++i) {
        if (fs[i] == 0.0 || fs[i - 1] * fs[i] <= 0.0 || fs[i] * fs[i + 1] <= 0.0)
            continue;
        if (std::abs(fs[i]) < std::abs(fs[i - 1]) &&
            std::abs(fs[i]) < std::abs(fs[i + 1])) {
            const double sgn = fs[i] > 0 ? 1.0 : -1.0;
            const double m = golden_extremum(cfg, ks[i - 1], ks[i + 1], sgn);
            const double fm = residual_at_k(cfg, m);
            if (fm == 0.0) {
                roots.push_back(m);
            } else if ((fm > 0) != (fs[i - 1] > 0)) {
                brackets.emplace_back(ks[i - 1], m);
                brackets.emplace_back(m, ks[i + 1]);
            }
        }
    }

    for (const auto& [a, b] : brackets)
        roots.push_back(bisect_k(cfg, a, b, residual_at_k(cfg, a), opts.tol_k));

    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<SpectralRoot> find_roots_on_hyperbola(const WellConfig& cfg,
                                                  double t_max,
                                                  const RootScanOptions& opts) {
    if (!(cfg.g > 0.0))
        throw std::domain_error("find_roots_on_hyperbola: requires g > 0");
    const double t_floor = std::sqrt(0.5 * cfg.g);
    if (!(t_max > t_floor))
        throw std::domain_error("find_roots_on_hyperbola: t_max must exceed sqrt(g/2)");

    // Start just above the spurious s = t point: t = sqrt(g/2)(1 + eps)
    // corresponds to k ~ sqrt(2 g eps).
    const double k_lo = std::sqrt(2.0 * cfg.g * opts.exclusion_eps);
    const double s_at_tmax = cfg.g / (2.0 * t_max);
    const double k_hi = std::sqrt(t_max * t_max - s_at_tmax * s_at_tmax);

    std::vector<SpectralRoot> out;
    for (double k : scan_hyperbola_roots(cfg, k_lo, k_hi, opts)) {
        const double t = hyperbola_t_of_k(k, cfg.g);
        const double s = cfg.g / (2.0 * t);
        out.push_back({s, t, k, k * k, static_cast<int>(out.size())});
    }
    return out;
}

namespace {

struct GridVertex {
    double s, t;
};

// Refine the zero of the reduced residual along a grid edge.
GridVertex refine_on_edge(double L, double l, GridVertex a, GridVertex b,
                          double fa) {
    for (int i = 0; i < 60; ++i) {
        const GridVertex m{0.5 * (a.s + b.s), 0.5 * (a.t + b.t)};
        const double fm = secular_residual_reduced(L, l, m.s, m.t);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return {0.5 * (a.s + b.s), 0.5 * (a.t + b.t)};
}

}  // namespace

std::vector<std::vector<OvalPoint>> trace_semi_ovals(double L, double l,
                                                     double s_max, double t_max,
                                                     const ContourOptions& opts) {
    if (!(s_max > 0.0) || !(t_max > 0.0))
        throw std::domain_error("trace_semi_ovals: bounds must be positive");

    const int ns = opts.cells_s;
    const int nt = opts.cells_t;
    const double ds = s_max / ns;
    const double dt = t_max / nt;

    // Node (i, j) sits at (s_i, t_j) = (i ds, j dt), i,j >= 1.  Only nodes
    // strictly above the diagonal take part; cells touching t <= s are
    // skipped (no physical curve lives there).
    auto node_s = [&](int i) { return i * ds; };
    auto node_t = [&](int j) { return j * dt; };

    std::vector<double> value((ns + 1) * (nt + 1),
                              std::numeric_limits<double>::quiet_NaN());
    auto idx = [&](int i, int j) { return j * (ns + 1) + i; };
    for (int j = 1; j <= nt; ++j)
        for (int i = 1; i <= ns; ++i)
            if (node_t(j) > node_s(i))
                value[idx(i, j)] = secular_residual_reduced(L, l, node_s(i), node_t(j));

    // Edge key: (i, j, horizontal?) for the edge from node (i,j) to
    // (i+1,j) or (i,j+1).
    auto edge_key = [&](int i, int j, bool horiz) {
        return (static_cast<long long>(j) * (ns + 2) + i) * 2 + (horiz ? 1 : 0);
    };

    std::map<long long, GridVertex> crossing;
    auto edge_crossing = [&](int i0, int j0, int i1, int j1,
                             bool horiz) -> const GridVertex* {
        const double fa = value[idx(i0, j0)];
        const double fb = value[idx(i1, j1)];
        if (std::isnan(fa) || std::isnan(fb) || fa * fb > 0.0) return nullptr;
        const long long key = edge_key(i0, j0, horiz);
        auto it = crossing.find(key);
        if (it == crossing.end()) {
            GridVertex a{node_s(i0), node_t(j0)}, b{node_s(i1), node_t(j1)};
            it = crossing.emplace(key, refine_on_edge(L, l, a, b, fa)).first;
        }
        return &it->second;
    };

    // Per cell, collect the crossed edges and connect them; store segments
    // as pairs of edge keys for later chaining.
    struct Seg {
        long long e1, e2;
    };
    std::vector<Seg> segs;

    for (int j = 1; j < nt; ++j) {
        for (int i = 1; i < ns; ++i) {
            // corners: (i,j) (i+1,j) (i+1,j+1) (i,j+1)
            const double f00 = value[idx(i, j)];
            const double f10 = value[idx(i + 1, j)];
            const double f11 = value[idx(i + 1, j + 1)];
            const double f01 = value[idx(i, j + 1)];
            if (std::isnan(f00) || std::isnan(f10) || std::isnan(f11) || std::isnan(f01))
                continue;

            struct EdgeRef {
                long long key;
                bool crossed;
            };
            const bool c_bottom = f00 * f10 <= 0.0 && (f00 != 0.0 || f10 != 0.0);
            const bool c_right = f10 * f11 <= 0.0 && (f10 != 0.0 || f11 != 0.0);
            const bool c_top = f01 * f11 <= 0.0 && (f01 != 0.0 || f11 != 0.0);
            const bool c_left = f00 * f01 <= 0.0 && (f00 != 0.0 || f01 != 0.0);

            std::vector<long long> crossed;
            if (c_bottom && edge_crossing(i, j, i + 1, j, true))
                crossed.push_back(edge_key(i, j, true));
            if (c_right && edge_crossing(i + 1, j, i + 1, j + 1, false))
                crossed.push_back(edge_key(i + 1, j, false));
            if (c_top && edge_crossing(i, j + 1, i + 1, j + 1, true))
                crossed.push_back(edge_key(i, j + 1, true));
            if (c_left && edge_crossing(i, j, i, j + 1, false))
                crossed.push_back(edge_key(i, j, false));

            if (crossed.size() == 2) {
                segs.push_back({crossed[0], crossed[1]});
            } else if (crossed.size() == 4) {
                // saddle cell: disambiguate with the centre value
                const double fc = secular_residual_reduced(
                    L, l, node_s(i) + 0.5 * ds, node_t(j) + 0.5 * dt);
                const long long b = edge_key(i, j, true);
                const long long r = edge_key(i + 1, j, false);
                const long long tp = edge_key(i, j + 1, true);
                const long long lf = edge_key(i, j, false);
                if ((fc > 0) == (f00 > 0)) {
                    segs.push_back({lf, b});
                    segs.push_back({tp, r});
                } else {
                    segs.push_back({lf, tp});
                    segs.push_back({b, r});
                }
            }
        }
    }

    // Chain segments into polylines by shared edge keys.
    std::multimap<long long, size_t> by_edge;
    for (size_t si = 0; si < segs.size(); ++si) {
        by_edge.emplace(segs[si].e1, si);
        by_edge.emplace(segs[si].e2, si);
    }
    std::vector<bool> used(segs.size(), false);

    auto take_next = [&](long long edge, std::vector<bool>& used_) -> long long {
        auto [lo, hi] = by_edge.equal_range(edge);
        for (auto it = lo; it != hi; ++it) {
            if (!used_[it->second]) {
                const Seg& sg = segs[it->second];
                used_[it->second] = true;
                return sg.e1 == edge ? sg.e2 : sg.e1;
            }
        }
        return -1;
    };

    std::vector<std::vector<OvalPoint>> curves;
    auto vertex_of = [&](long long key) -> OvalPoint {
        const GridVertex& v = crossing.at(key);
        const double kk = v.t > v.s ? std::sqrt(v.t * v.t - v.s * v.s) : 0.0;
        return {v.s, v.t, v.t * v.s, kk};
    };

    for (size_t si = 0; si < segs.size(); ++si) {
        if (used[si]) continue;
        used[si] = true;
        std::vector<long long> chain{segs[si].e1, segs[si].e2};
        // extend forward
        for (long long e = take_next(chain.back(), used); e >= 0;
             e = take_next(chain.back(), used))
            chain.push_back(e);
        // extend backward
        std::reverse(chain.begin(), chain.end());
        for (long long e = take_next(chain.back(), used); e >= 0;
             e = take_next(chain.back(), used))
            chain.push_back(e);

        std::vector<OvalPoint> poly;
        poly.reserve(chain.size());
        for (long long e : chain) poly.push_back(vertex_of(e));
        curves.push_back(std::move(poly));
    }

    // Deterministic order: by minimal t, then minimal s.
    std::sort(curves.begin(), curves.end(),
              [](const std::vector<OvalPoint>& a, const std::vector<OvalPoint>& b) {
                  auto key = [](const std::vector<OvalPoint>& c) {
                      double tmin = 1e300, smin = 1e300;
                      for (const auto& p : c) {
                          tmin = std::min(tmin, p.t);
                          smin = std::min(smin, p.s);
                      }
                      return std::pair<double, double>(tmin, smin);
                  };
                  return key(a) < key(b);
              });
    return curves;
}

}  // namespace ptsqw
