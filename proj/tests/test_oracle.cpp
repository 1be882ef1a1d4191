#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "ptsqw/oracle.hpp"
#include "ptsqw/spectrum.hpp"

#ifdef PTSQW_HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

using namespace ptsqw;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<complexd> sorted_by_re(std::vector<complexd> v) {
    std::sort(v.begin(), v.end(), [](const complexd& a, const complexd& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
}
}  // namespace

TEST_CASE("QL reproduces the exact discrete Laplacian spectrum") {
    const int N = 500;
    const double L = 1.0, h = 2 * L / (N + 1);
    std::vector<complexd> d(N, 2.0 / (h * h)), e(N - 1, -1.0 / (h * h));
    auto ev = sorted_by_re(complex_symmetric_tridiagonal_eigenvalues(d, e));
    REQUIRE(static_cast<int>(ev.size()) == N);
    for (int j = 1; j <= N; ++j) {
        const double exact = (2.0 - 2.0 * std::cos(j * kPi / (N + 1))) / (h * h);
        CHECK(std::abs(ev[j - 1] - exact) <= 1e-11 * (2.0 / (h * h)) + 1e-9);
        CHECK(std::abs(ev[j - 1].imag()) <= 1e-9 * (2.0 / (h * h)));
    }
}

TEST_CASE("free-well continuum limit at N = 2000") {
    auto zero = [](double) { return complexd(0, 0); };
    FdOptions opts;
    opts.richardson = false;
    const auto spec = fd_spectrum(zero, 1.0, 2000, 5, opts);
    CHECK(spec.grid_size == 2000);
    CHECK(static_cast<int>(spec.eigenvalues.size()) == 2000);
    const auto low = spec.lowest(5);
    for (int n = 1; n <= 5; ++n) {
        const double exact = std::pow(n * kPi / 2, 2);
        CHECK(std::abs(low[n - 1].real() - exact) <= 1e-4 * exact);
    }
}

#ifdef PTSQW_HAVE_EIGEN
TEST_CASE("QL matches a dense complex Schur solve") {
    const int N = 300;
    const WellConfig cfg(1.0, 0.5, 2.0);
    const double h = 2 * cfg.L / (N + 1);
    std::vector<complexd> d(N), e(N - 1, -1.0 / (h * h));
    for (int i = 0; i < N; ++i)
        d[i] = 2.0 / (h * h) + potential_value(cfg, -cfg.L + (i + 1) * h);

    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        A(i, i) = d[i];
        if (i + 1 < N) {
            A(i, i + 1) = e[i];
            A(i + 1, i) = e[i];
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(A, false);
    REQUIRE(solver.info() == Eigen::Success);
    std::vector<complexd> dense(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + N);

    auto ql = sorted_by_re(complex_symmetric_tridiagonal_eigenvalues(d, e));
    auto dn = sorted_by_re(dense);
    const double scale = std::abs(dn.back());
    for (int i = 0; i < N; ++i) CHECK(std::abs(ql[i] - dn[i]) <= 1e-10 * scale);
}

TEST_CASE("QL matches the dense solve in the broken regime") {
    const int N = 240;
    const WellConfig cfg(1.0, 0.5, 1.05 * 6.4364);
    const double h = 2 * cfg.L / (N + 1);
    std::vector<complexd> d(N), e(N - 1, -1.0 / (h * h));
    for (int i = 0; i < N; ++i)
        d[i] = 2.0 / (h * h) + potential_value(cfg, -cfg.L + (i + 1) * h);

    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        A(i, i) = d[i];
        if (i + 1 < N) {
            A(i, i + 1) = e[i];
            A(i + 1, i) = e[i];
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(A, false);
    std::vector<complexd> dense(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + N);
    auto ql = sorted_by_re(complex_symmetric_tridiagonal_eigenvalues(d, e));
    auto dn = sorted_by_re(dense);
    const double scale = std::abs(dn.back());
    for (int i = 0; i < N; ++i) CHECK(std::abs(ql[i] - dn[i]) <= 1e-7 * scale);
}
#endif

TEST_CASE("second-order convergence toward the exact levels") {
    auto zero = [](double) { return complexd(0, 0); };
    FdOptions opts;
    opts.richardson = false;
    const auto coarse = fd_spectrum(zero, 1.0, 400, 3, opts).lowest(3);
    const auto fine = fd_spectrum(zero, 1.0, 801, 3, opts).lowest(3);
    for (int n = 1; n <= 3; ++n) {
        const double exact = std::pow(n * kPi / 2, 2);
        const double rc = std::abs(coarse[n - 1].real() - exact);
        const double rf = std::abs(fine[n - 1].real() - exact);
        CHECK(rc / rf == doctest::Approx(4.0).epsilon(0.15));
    }
}

TEST_CASE("Richardson extrapolation against the secular solver") {
    const WellConfig cfg(1.0, 0.5, 2.0);
    const auto exact = energies(cfg, 5);
    const auto spec = fd_spectrum(cfg, 1500, 5);
    REQUIRE(spec.richardson_eigenvalues.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(spec.richardson_eigenvalues[i].real() - exact[i]) <=
              1e-6 * exact[i]);
        CHECK(std::abs(spec.richardson_eigenvalues[i].imag()) <= 1e-8);
    }
}

TEST_CASE("oracle/secular agreement across couplings and widths") {
    // all couplings below 0.9 g_c for their geometry
    const std::vector<std::pair<double, double>> cases = {
        {2.0, 0.5}, {4.0, 0.7}, {10.0, 0.3}, {20.0, 0.2}, {80.0, 0.1}};
    for (const auto& [g, l] : cases) {
        const WellConfig cfg(1.0, l, g);
        const auto exact = energies(cfg, 4);
        const auto oracle = fd_spectrum(cfg, 1200, 4);
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(oracle.richardson_eigenvalues[i].real() - exact[i]) <=
                  1e-4 * exact[i]);
            CHECK(std::abs(oracle.richardson_eigenvalues[i].imag()) <= 1e-6);
        }
    }
}

TEST_CASE("PT pairing: the spectrum is closed under conjugation") {
    const WellConfig cfg(1.0, 0.5, 1.05 * 6.4364);
    FdOptions opts;
    opts.richardson = false;
    const auto spec = fd_spectrum(cfg, 600, 6, opts);
    auto ev = sorted_by_re(spec.eigenvalues);
    std::vector<complexd> conj_ev;
    conj_ev.reserve(ev.size());
    for (const auto& z : ev) conj_ev.push_back(std::conj(z));
    conj_ev = sorted_by_re(conj_ev);
    const double scale = std::abs(ev.back());
    for (size_t i = 0; i < ev.size(); ++i)
        CHECK(std::abs(ev[i] - conj_ev[i]) <= 1e-8 * scale);
}

TEST_CASE("reality census below and above the critical coupling") {
    const double gc = 6.4364;  // l = 0.5

    const auto unbroken = oracle_reality_census(WellConfig(1, 0.5, 2.0), 1001,
                                                1e-6, 4);
    CHECK(unbroken.near_real_count == 4);
    CHECK(unbroken.complex_pairs.empty());

    const auto broken = oracle_reality_census(WellConfig(1, 0.5, 1.05 * gc), 2001,
                                              1e-6, 4);
    CHECK(broken.near_real_count == 2);
    REQUIRE(broken.complex_pairs.size() == 1);
    const auto& [ep, em] = broken.complex_pairs.front();
    CHECK(std::abs(ep - std::conj(em)) <= 1e-8 * std::abs(ep));
    CHECK(ep.imag() > 0.0);
}

TEST_CASE("argument validation") {
    auto zero = [](double) { return complexd(0, 0); };
    CHECK_THROWS_AS(fd_spectrum(zero, 1.0, 100, 3), std::invalid_argument);
    CHECK_THROWS_AS(complex_symmetric_tridiagonal_eigenvalues({1.0, 2.0}, {}),
                    std::invalid_argument);
}
