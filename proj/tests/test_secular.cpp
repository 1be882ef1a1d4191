#include <doctest.h>

#include <cmath>
#include <vector>

#include "ptsqw/secular.hpp"

#ifdef PTSQW_HAVE_BOOST_MP
#include <boost/multiprecision/cpp_bin_float.hpp>
#endif

using namespace ptsqw;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("the s = t root cancels algebraically") {
    const WellConfig cfg(1.0, 0.3, 1.0);
    CHECK(secular_residual(cfg, 2.0, 2.0) == 0.0);
    CHECK(secular_residual(cfg, 0.37, 0.37) == 0.0);
    CHECK_THROWS_AS(secular_residual(cfg, 2.0, 1.9), std::domain_error);
    CHECK_THROWS_AS(secular_residual(cfg, 0.0, 1.0), std::domain_error);
}

TEST_CASE("l -> 0 reduces to k (s^2 + t^2) sin(2kL)") {
    const double L = 1.0, l = 1e-13;
    for (auto [s, t] : {std::pair{0.7, 1.9}, {2.0, 11.0}, {0.1, 0.3}}) {
        const double k = std::sqrt(t * t - s * s);
        const double expected = k * (s * s + t * t) * std::sin(2 * k * L);
        CHECK(secular_residual(L, l, s, t) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

#ifdef PTSQW_HAVE_BOOST_MP
TEST_CASE("50-digit re-evaluation of the residual formula") {
    using mp = boost::multiprecision::cpp_bin_float_50;
    const mp L = 1, l = mp("0.04"), s = 1, t = 10;
    const mp k = sqrt(t * t - s * s);
    const mp r = k * sin(2 * k * (L - l)) * (s * s * cosh(2 * s * l) + t * t * cos(2 * t * l)) -
                 cos(2 * k * (L - l)) * (s * s * s * sinh(2 * s * l) - t * t * t * sin(2 * t * l)) +
                 s * t * t * sinh(2 * s * l) - s * s * t * sin(2 * t * l);
    // frozen from this oracle
    const double frozen = 871.896175082777482843356051036;
    CHECK(std::abs(static_cast<double>(r) - frozen) <= 1e-12 * frozen);
    const double impl = secular_residual(1.0, 0.04, 1.0, 10.0);
    CHECK(std::abs(impl - static_cast<double>(r)) <= 1e-12 * frozen);
    CHECK(impl == doctest::Approx(frozen).epsilon(1e-12));
}
#endif

TEST_CASE("Hermitian limit spectrum: E_n -> (n pi / 2L)^2") {
    const WellConfig cfg(1.0, 0.37, 1e-10);
    const auto roots = find_roots_on_hyperbola(cfg, 10.5);
    REQUIRE(roots.size() >= 6);
    CHECK(roots[0].E == doctest::Approx(2.4674011002723395).epsilon(1e-8));
    for (int n = 1; n <= 6; ++n) {
        const double en = std::pow(n * kPi / 2.0, 2);
        CHECK(roots[n - 1].E == doctest::Approx(en).epsilon(1e-6));
        CHECK(roots[n - 1].t == doctest::Approx(n * kPi / 2.0).epsilon(1e-6));
        CHECK(roots[n - 1].index == n - 1);
    }
}

TEST_CASE("roots satisfy the secular system and avoid the spurious point") {
    const WellConfig cfg(1.0, 0.5, 2.0);
    const auto roots = find_roots_on_hyperbola(cfg, 12.0);
    REQUIRE(!roots.empty());
    for (const auto& r : roots) {
        CHECK(std::abs(2.0 * r.s * r.t - cfg.g) <= 1e-12 * cfg.g);
        // residual scales steeply with t; compare against a local scale
        const double scale =
            std::pow(r.t, 3) * std::cosh(2 * r.s * cfg.l) + 1.0;
        CHECK(std::abs(secular_residual(cfg, r.s, r.t)) <= 1e-10 * scale);
        CHECK(r.t - r.s > 1e-6);
        CHECK(r.E == doctest::Approx(r.t * r.t - r.s * r.s));
        CHECK(r.k == doctest::Approx(std::sqrt(r.E)));
    }
    for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i].E > roots[i - 1].E);
}

TEST_CASE("Schroedinger scaling (L,l,g) -> (aL, al, g/a^2)") {
    const double a = 2.0;
    const WellConfig base(1.0, 0.3, 5.0);
    const WellConfig scaled(a, a * 0.3, 5.0 / (a * a));
    const auto r1 = find_roots_on_hyperbola(base, 8.0);
    const auto r2 = find_roots_on_hyperbola(scaled, 8.0 / a);
    REQUIRE(r1.size() >= 3);
    REQUIRE(r2.size() >= 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(r2[i].s == doctest::Approx(r1[i].s / a).epsilon(1e-9));
        CHECK(r2[i].t == doctest::Approx(r1[i].t / a).epsilon(1e-9));
    }
}

namespace {

// reduced single-discontinuity equation s sinh(2sL) + t sin(2tL) = 0 along
// the hyperbola, scanned independently of the production code path
std::vector<double> single_jump_roots(double L, double g, double k_max) {
    auto f = [&](double k) {
        const double t = hyperbola_t_of_k(k, g);
        const double s = g / (2 * t);
        return s * std::sinh(2 * s * L) + t * std::sin(2 * t * L);
    };
    std::vector<double> out;
    const double dk = 0.01;
    double prev = f(1e-4);
    for (double k = 1e-4 + dk; k <= k_max; k += dk) {
        const double cur = f(k);
        if (prev * cur < 0) {
            double a = k - dk, b = k, fa = prev;
            for (int i = 0; i < 80; ++i) {
                const double m = 0.5 * (a + b), fm = f(m);
                if ((fm > 0) == (fa > 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        prev = cur;
    }
    return out;
}

}  // namespace

TEST_CASE("l -> L limit agrees with the single-discontinuity equation") {
    const double L = 1.0, g = 3.0;
    const WellConfig cfg(L, 1.0 - 1e-9, g);
    const auto full = find_roots_on_hyperbola(cfg, hyperbola_t_of_k(7.0, g));
    const auto reduced = single_jump_roots(L, g, 7.0);
    REQUIRE(full.size() == reduced.size());
    for (size_t i = 0; i < full.size(); ++i)
        CHECK(full[i].k == doctest::Approx(reduced[i]).epsilon(1e-6));
}

TEST_CASE("root pair detection straddling the critical coupling") {
    // g_c(l = 0.5) = 6.4364; the lowest pair must be present just below and
    // absent just above while the next levels survive
    const double t_window = hyperbola_t_of_k(4.2, 6.5);
    const auto below = find_roots_on_hyperbola(WellConfig(1, 0.5, 6.40), t_window);
    const auto above = find_roots_on_hyperbola(WellConfig(1, 0.5, 6.47), t_window);
    int low_below = 0, low_above = 0;
    for (const auto& r : below)
        if (r.E < 12.0) ++low_below;
    for (const auto& r : above)
        if (r.E < 12.0) ++low_above;
    CHECK(low_below == 2);
    CHECK(low_above == 0);
}

TEST_CASE("near-tangent pair is still resolved") {
    // just below the critical coupling the two roots are separated by ~1e-3
    // in k; the dip search must find both
    const WellConfig cfg(1.0, 0.5, 6.436);
    const auto roots = find_roots_on_hyperbola(cfg, hyperbola_t_of_k(4.0, 6.436));
    REQUIRE(roots.size() >= 2);
    CHECK(roots[1].k - roots[0].k < 0.3);
    CHECK(roots[1].k > roots[0].k);
}

TEST_CASE("semi-oval tracing") {
    ContourOptions copts;
    copts.cells_s = 240;
    copts.cells_t = 240;
    const auto curves = trace_semi_ovals(1.0, 0.5, 3.0, 7.0, copts);
    REQUIRE(!curves.empty());

    // vertices sit on the zero set of the reduced residual
    for (const auto& c : curves) {
        REQUIRE(c.size() >= 2);
        for (const auto& p : c) {
            CHECK(p.u == doctest::Approx(p.s * p.t).epsilon(1e-12));
            if (p.t > p.s)
                CHECK(p.k * p.k == doctest::Approx(p.t * p.t - p.s * p.s)
                                       .epsilon(1e-10));
            const double scale = std::pow(p.t, 3) + 1.0;
            CHECK(std::abs(secular_residual_reduced(1.0, 0.5, p.s, p.t)) <=
                  1e-6 * scale);
        }
    }

    // curves meet the t axis near t = n pi / 2
    int matched = 0;
    for (const auto& c : curves) {
        double s_min = 1e300, t_at = 0;
        for (const auto& p : c)
            if (p.s < s_min) {
                s_min = p.s;
                t_at = p.t;
            }
        if (s_min < 0.05) {
            const double n_est = t_at / (kPi / 2);
            CHECK(std::abs(n_est - std::round(n_est)) < 0.05);
            ++matched;
        }
    }
    CHECK(matched >= 2);
}

TEST_CASE("oval/hyperbola intersections reproduce the spectrum") {
    const double g = 2.0;
    ContourOptions copts;
    copts.cells_s = 300;
    copts.cells_t = 300;
    const auto curves = trace_semi_ovals(1.0, 0.5, 2.5, 7.0, copts);
    std::vector<double> intersect_E;
    for (const auto& c : curves) {
        for (size_t i = 1; i < c.size(); ++i) {
            const double f0 = c[i - 1].u - g / 2, f1 = c[i].u - g / 2;
            if (f0 == 0.0 || f0 * f1 >= 0) continue;
            const double w = f0 / (f0 - f1);
            const double s = c[i - 1].s + w * (c[i].s - c[i - 1].s);
            const double t = c[i - 1].t + w * (c[i].t - c[i - 1].t);
            intersect_E.push_back(t * t - s * s);
        }
    }
    std::sort(intersect_E.begin(), intersect_E.end());

    const auto roots = find_roots_on_hyperbola(WellConfig(1.0, 0.5, g), 6.9);
    std::vector<double> root_E;
    for (const auto& r : roots)
        if (r.t < 6.7 && r.s < 2.3) root_E.push_back(r.E);
    REQUIRE(!root_E.empty());
    REQUIRE(intersect_E.size() == root_E.size());
    for (size_t i = 0; i < root_E.size(); ++i)
        CHECK(intersect_E[i] == doctest::Approx(root_E[i]).epsilon(1e-3));
}
