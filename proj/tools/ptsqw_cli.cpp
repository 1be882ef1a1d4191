// ptsqw: spectra, critical couplings and SUSY partner data for the
// PT-symmetric square well with an imaginary piecewise barrier.
//
// Exit codes: 0 success, 2 validation failure (tolerance exceeded or no
// real levels), 3 domain/configuration error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ptsqw/manifest.hpp"
#include "ptsqw/oracle.hpp"
#include "ptsqw/secular.hpp"
#include "ptsqw/spectrum.hpp"
#include "ptsqw/susy.hpp"
#include "ptsqw/version.hpp"
#include "ptsqw/wavefunction.hpp"
#include "ptsqw/well.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace ptsqw;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitConfig = 3;

std::string fmt(double v, int digits = 17) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string fmt(const complexd& z) {
    return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

json complex_json(const complexd& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::filesystem::path output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PTSQW_OUTDIR")) return env;
    return ".";
}

std::ofstream open_output(const std::filesystem::path& p) {
    std::filesystem::create_directories(p.parent_path().empty() ? "."
                                                                : p.parent_path());
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot open output file " + p.string());
    return f;
}

struct SpectrumArgs {
    double L = 1.0, l = 0.0, g = 0.0;
    int n = 6;
    double t_max = 0.0;  // 0: automatic window
    std::string format = "csv";
    std::string out;
};

int run_spectrum(const SpectrumArgs& a) {
    const WellConfig cfg(a.L, a.l, a.g);
    std::vector<SpectralRoot> roots;
    if (a.t_max > 0.0)
        roots = find_roots_on_hyperbola(cfg, a.t_max);
    else
        roots = spectral_roots(cfg, a.n);
    if (static_cast<int>(roots.size()) > a.n) roots.resize(a.n);

    RunManifest man = RunManifest::make("spectrum");
    man.parameters = {{"L", fmt(a.L)},         {"l", fmt(a.l)},
                      {"g", fmt(a.g)},         {"n_levels", std::to_string(a.n)},
                      {"t_max", fmt(a.t_max)}, {"format", a.format}};
    man.tolerances = {{"root_tol_k", "1e-13"}, {"exclusion_eps", "1e-8"}};

    const auto path = output_dir(a.out) /
                      (a.format == "json" ? "spectrum.json" : "spectrum.csv");
    auto f = open_output(path);
    if (a.format == "json") {
        ordered_json j;
        j["manifest"] = json::parse(man.to_json());
        j["levels"] = json::array();
        for (const auto& r : roots) {
            j["levels"].push_back(
                {{"n", r.index},
                 {"s", r.s},
                 {"t", r.t},
                 {"k", r.k},
                 {"E", r.E},
                 {"residual", secular_residual(cfg, r.s, r.t)},
                 {"constraint_residual", 2.0 * r.s * r.t - cfg.g}});
        }
        f << j.dump(2) << "\n";
    } else {
        f << man.to_comment_block();
        f << "n,s,t,k,E,residual,constraint_residual\n";
        for (const auto& r : roots)
            f << r.index << ',' << fmt(r.s) << ',' << fmt(r.t) << ',' << fmt(r.k)
              << ',' << fmt(r.E) << ',' << fmt(secular_residual(cfg, r.s, r.t))
              << ',' << fmt(2.0 * r.s * r.t - cfg.g) << "\n";
    }
    std::cout << "wrote " << path.string() << " (" << roots.size() << " levels)\n";
    if (roots.empty()) {
        std::cerr << "no real levels in the scanned window: PT symmetry fully "
                     "broken there\n";
        return kExitValidation;
    }
    return kExitOk;
}

struct OvalsArgs {
    double L = 1.0, l = 0.0, g = 0.0;
    double s_max = 12.0, t_max = 40.0;
    int cells = 600;
    std::string coords = "st";
    std::string out;
};

int run_ovals(const OvalsArgs& a) {
    const bool uk = a.coords == "uk";
    ContourOptions copts;
    copts.cells_s = a.cells;
    copts.cells_t = a.cells;
    const auto curves = trace_semi_ovals(a.L, a.l, a.s_max, a.t_max, copts);

    RunManifest man = RunManifest::make("ovals");
    man.parameters = {{"L", fmt(a.L)},          {"l", fmt(a.l)},
                      {"g", fmt(a.g)},          {"s_max", fmt(a.s_max)},
                      {"t_max", fmt(a.t_max)},  {"cells", std::to_string(a.cells)},
                      {"coords", a.coords}};
    man.tolerances = {{"vertex_refinement", "bisection to 2^-60 of a cell edge"}};

    const auto dir = output_dir(a.out);
    const auto opath = dir / ("ovals_" + a.coords + ".dat");
    auto f = open_output(opath);
    f << man.to_comment_block();
    f << (uk ? "# columns: u=t*s  k\n" : "# columns: s  t\n");
    for (const auto& curve : curves) {
        for (const auto& pt : curve) {
            if (uk)
                f << fmt(pt.u) << ' ' << fmt(pt.k) << "\n";
            else
                f << fmt(pt.s) << ' ' << fmt(pt.t) << "\n";
        }
        f << "\n";  // blank-line separated segments
    }

    // the constraint 2 s t = g: a curve in (s,t), a horizontal line in (u,k)
    const auto hpath = dir / ("hyperbola_" + a.coords + ".dat");
    auto h = open_output(hpath);
    h << man.to_comment_block();
    if (uk) {
        h << "# u = g/2 line\n";
        h << fmt(a.g / 2) << ' ' << fmt(0.0) << "\n";
        h << fmt(a.g / 2) << ' ' << fmt(std::sqrt(std::max(a.t_max * a.t_max, 1.0)))
          << "\n";
    } else {
        h << "# 2 s t = g\n";
        const double s_lo = a.g / (2.0 * a.t_max);
        for (int i = 0; i <= 800; ++i) {
            const double s = s_lo + (a.s_max - s_lo) * i / 800.0;
            if (s <= 0.0) continue;
            h << fmt(s) << ' ' << fmt(a.g / (2.0 * s)) << "\n";
        }
    }
    std::cout << "wrote " << opath.string() << " (" << curves.size()
              << " polylines) and " << hpath.string() << "\n";
    return kExitOk;
}

struct CriticalArgs {
    double L = 1.0;
    std::vector<double> l_values;
    double tol = 1e-5;
    bool figure3 = false;
    double fig_l_min = 0.01, fig_l_max = 1.0;
    int fig_count = 50;
    std::string out;
};

int run_critical(const CriticalArgs& a) {
    std::vector<double> ls = a.l_values;
    if (a.figure3) {
        ls.clear();
        for (int i = 0; i < a.fig_count; ++i) {
            const double f = static_cast<double>(i) / (a.fig_count - 1);
            ls.push_back(a.fig_l_min *
                         std::pow(a.fig_l_max / a.fig_l_min, f));
        }
    }
    if (ls.empty()) {
        std::cerr << "critical: provide --l values or --figure3\n";
        return kExitConfig;
    }

    const auto sweep = gc_sweep(a.L, ls, a.tol);

    RunManifest man = RunManifest::make("critical");
    man.parameters = {{"L", fmt(a.L)},
                      {"count", std::to_string(ls.size())},
                      {"figure3", a.figure3 ? "true" : "false"}};
    man.tolerances = {{"tol_rel", fmt(a.tol)}};

    const auto path = output_dir(a.out) / "critical.csv";
    auto f = open_output(path);
    f << man.to_comment_block();
    f << "l,g_c,merge_energy,bracket_width,error\n";
    bool any_error = false;
    for (const auto& e : sweep) {
        if (e.result) {
            f << fmt(e.l) << ',' << fmt(e.result->g_c) << ','
              << fmt(e.result->merge_energy) << ',' << fmt(e.result->bracket_width)
              << ",\n";
        } else {
            any_error = true;
            f << fmt(e.l) << ",,,," << e.error << "\n";
        }
    }
    std::cout << "wrote " << path.string() << "\n";
    for (const auto& e : sweep)
        if (e.result)
            std::cout << "l=" << fmt(e.l, 10) << "  g_c=" << fmt(e.result->g_c, 10)
                      << "  E_merge=" << fmt(e.result->merge_energy, 10) << "\n";
    return any_error ? kExitValidation : kExitOk;
}

struct SusyArgs {
    double L = 1.0, l = 0.0, g = 0.0;
    int n = 4;
    int sample_points = 201;
    std::string out;
};

int run_susy(const SusyArgs& a) {
    const WellConfig cfg(a.L, a.l, a.g);
    const auto roots = spectral_roots(cfg, a.n + 1);
    if (roots.size() < 2) {
        std::cerr << "susy: need at least two real levels (got " << roots.size()
                  << ")\n";
        return kExitValidation;
    }
    const SusyParameters p = susy_parameters(cfg, roots[0]);
    const SusyVerificationReport rep = verify_susy(cfg, p, roots);
    const auto [cert1, cert2] = discontinuity_certificates(p, cfg);

    ordered_json j;
    RunManifest man = RunManifest::make("susy");
    man.parameters = {{"L", fmt(a.L)},
                      {"l", fmt(a.l)},
                      {"g", fmt(a.g)},
                      {"n_levels", std::to_string(a.n)},
                      {"sample_points", std::to_string(a.sample_points)}};
    man.tolerances = {{"split_system", "1e-9"}, {"residual_scale", "1e-8"}};
    j["manifest"] = json::parse(man.to_json());

    j["parameters"] = {{"k0", p.k0},
                       {"kappa0", complex_json(p.kappa0)},
                       {"E0", p.E0},
                       {"x_L2", p.x_L2},
                       {"x_R2", p.x_R2},
                       {"x_R1", complex_json(p.x_R1)},
                       {"x_L1", complex_json(p.x_L1)},
                       {"split_residual_r", p.split_residual_r},
                       {"split_residual_i", p.split_residual_i}};

    json report;
    report["annihilation_residual"] = rep.annihilation_residual;
    report["ground_derivative_scale"] = rep.ground_derivative_scale;
    report["factorization_residual"] = rep.factorization_residual;
    report["intertwining_residual"] = rep.intertwining_residual;
    for (const auto& [pt, res] : rep.partner_matching_residuals)
        report["partner_matching_residuals"][fmt(pt, 6)] = res;
    for (const auto& [pt, jump] : rep.discontinuity_jumps)
        report["discontinuity_jumps"][fmt(pt, 6)] = complex_json(jump);
    report["certificate_x_l"] = complex_json(cert1);
    report["certificate_x_0"] = complex_json(cert2);
    j["verification"] = report;

    // sampled profiles on a uniform interior grid
    const int m = std::max(3, a.sample_points);
    json xs = json::array(), ws = json::array(), vm = json::array();
    std::vector<WaveCoefficients> coeffs;
    for (size_t i = 1; i < roots.size(); ++i)
        coeffs.push_back(coefficients(cfg, roots[i]));
    std::vector<json> psim(coeffs.size(), json::array());
    for (int i = 0; i < m; ++i) {
        const double x = -a.L + 2 * a.L * (i + 0.5) / m;
        xs.push_back(x);
        ws.push_back(complex_json(superpotential_value(p, cfg, x)));
        vm.push_back(complex_json(partner_potential_value(p, cfg, x)));
        for (size_t n = 0; n < coeffs.size(); ++n)
            psim[n].push_back(complex_json(
                partner_eigenfunction_value(cfg, p, roots[n + 1], coeffs[n], x)));
    }
    j["samples"]["x"] = xs;
    j["samples"]["W"] = ws;
    j["samples"]["V_minus"] = vm;
    for (size_t n = 0; n < psim.size(); ++n)
        j["samples"]["psi_minus"][std::to_string(n)] = psim[n];

    const auto path = output_dir(a.out) / "susy.json";
    auto f = open_output(path);
    f << j.dump(2) << "\n";
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
}

struct VerifyArgs {
    double L = 1.0, l = 0.0, g = 0.0;
    int N = 2000;
    int n = 5;
    double tol_rel = 1e-4;
    double imag_threshold = 1e-6;
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    constexpr double kPi = 3.14159265358979323846;
    const WellConfig cfg(a.L, a.l, std::max(a.g, 0.0));

    std::vector<double> reference;
    std::string ref_source;
    if (a.g <= 0.0) {
        ref_source = "analytic (n pi / 2L)^2";
        for (int n = 1; n <= a.n; ++n)
            reference.push_back(std::pow(n * kPi / (2 * a.L), 2));
    } else {
        ref_source = "secular";
        reference = energies(cfg, a.n);
    }

    FdOptions fopts;
    fopts.richardson = true;
    fopts.imag_threshold = a.imag_threshold;
    const auto oracle = fd_spectrum(cfg, a.N, std::max<int>(a.n + 4, 8), fopts);

    // near-real oracle levels, ascending
    std::vector<double> fd_levels;
    std::vector<double> fd_imag;
    for (const auto& ev : oracle.richardson_eigenvalues) {
        if (std::abs(ev.imag()) < a.imag_threshold) {
            fd_levels.push_back(ev.real());
            fd_imag.push_back(ev.imag());
        }
    }

    const auto census =
        oracle_reality_census(cfg, a.N, a.imag_threshold, std::max(a.n, 4));

    RunManifest man = RunManifest::make("verify");
    man.parameters = {{"L", fmt(a.L)}, {"l", fmt(a.l)},          {"g", fmt(a.g)},
                      {"N", std::to_string(a.N)}, {"n_levels", std::to_string(a.n)}};
    man.tolerances = {{"tol_rel", fmt(a.tol_rel)},
                      {"imag_threshold", fmt(a.imag_threshold)}};

    const auto path = output_dir(a.out) / "verify.csv";
    auto f = open_output(path);
    f << man.to_comment_block();
    f << "# reference: " << ref_source << "\n";
    f << "n,E_reference,E_oracle,Im_oracle,rel_delta\n";
    bool failed = false;
    const size_t rows = std::min(reference.size(), fd_levels.size());
    for (size_t i = 0; i < rows; ++i) {
        const double delta =
            std::abs(reference[i] - fd_levels[i]) / std::abs(reference[i]);
        if (delta > a.tol_rel) failed = true;
        f << i << ',' << fmt(reference[i]) << ',' << fmt(fd_levels[i]) << ','
          << fmt(fd_imag[i]) << ',' << fmt(delta) << "\n";
        std::cout << "E_" << i << ": ref=" << fmt(reference[i], 10)
                  << " oracle=" << fmt(fd_levels[i], 10) << " delta=" << fmt(delta, 3)
                  << "\n";
    }
    if (rows < reference.size()) failed = true;

    if (!census.complex_pairs.empty()) {
        std::cout << "broken PT symmetry: " << census.complex_pairs.size()
                  << " complex pair(s) among the lowest levels\n";
        for (const auto& [ep, em] : census.complex_pairs)
            std::cout << "  pair: " << fmt(ep) << " / " << fmt(em) << "\n";
    }
    std::cout << "wrote " << path.string() << "\n";
    if (failed) {
        std::cerr << "verification failed: oracle/reference deltas exceed "
                  << fmt(a.tol_rel) << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PT-symmetric square well with an imaginary piecewise barrier: "
                 "spectra, critical couplings, SUSY partner construction"};
    app.set_version_flag("--version", PTSQW_VERSION);
    app.require_subcommand(1);

    SpectrumArgs sa;
    auto* sp = app.add_subcommand("spectrum", "real bound-state levels");
    sp->add_option("--L", sa.L, "box half-width")->capture_default_str();
    sp->add_option("--l", sa.l, "barrier half-width")->required();
    sp->add_option("--g", sa.g, "barrier strength")->required();
    sp->add_option("--n", sa.n, "number of levels")->capture_default_str();
    sp->add_option("--t-max", sa.t_max, "explicit scan window in t (0 = auto)");
    sp->add_option("--format", sa.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sp->add_option("-o,--out", sa.out, "output directory (default $PTSQW_OUTDIR or .)");

    OvalsArgs oa;
    auto* op = app.add_subcommand("ovals", "solution curves of the secular equation");
    op->add_option("--L", oa.L)->capture_default_str();
    op->add_option("--l", oa.l)->required();
    op->add_option("--g", oa.g, "coupling for the hyperbola overlay")->required();
    op->add_option("--s-max", oa.s_max)->capture_default_str();
    op->add_option("--t-max", oa.t_max)->capture_default_str();
    op->add_option("--cells", oa.cells, "contour grid cells per axis")
        ->capture_default_str();
    op->add_option("--coords", oa.coords, "st or uk")
        ->check(CLI::IsMember({"st", "uk"}))
        ->capture_default_str();
    op->add_option("-o,--out", oa.out);

    CriticalArgs ca;
    auto* cp = app.add_subcommand("critical", "critical coupling g_c(l)");
    cp->add_option("--L", ca.L)->capture_default_str();
    cp->add_option("--l", ca.l_values, "one or more barrier half-widths");
    cp->add_option("--tol", ca.tol, "relative bisection tolerance")
        ->capture_default_str();
    cp->add_flag("--figure3", ca.figure3, "sweep 50 log-spaced l values");
    cp->add_option("--l-min", ca.fig_l_min)->capture_default_str();
    cp->add_option("--l-max", ca.fig_l_max)->capture_default_str();
    cp->add_option("-o,--out", ca.out);

    SusyArgs ua;
    auto* up = app.add_subcommand("susy", "superpotential, partner potential and "
                                          "partner eigenfunctions");
    up->add_option("--L", ua.L)->capture_default_str();
    up->add_option("--l", ua.l)->required();
    up->add_option("--g", ua.g)->required();
    up->add_option("--n", ua.n, "number of partner levels")->capture_default_str();
    up->add_option("--samples", ua.sample_points)->capture_default_str();
    up->add_option("-o,--out", ua.out);

    VerifyArgs va;
    auto* vp = app.add_subcommand("verify", "secular vs finite-difference oracle");
    vp->add_option("--L", va.L)->capture_default_str();
    vp->add_option("--l", va.l)->required();
    vp->add_option("--g", va.g)->required();
    vp->add_option("--N", va.N, "interior grid points")->capture_default_str();
    vp->add_option("--n", va.n, "levels to compare")->capture_default_str();
    vp->add_option("--tol-rel", va.tol_rel)->capture_default_str();
    vp->add_option("--imag-threshold", va.imag_threshold)->capture_default_str();
    vp->add_option("-o,--out", va.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sp->parsed()) return run_spectrum(sa);
        if (op->parsed()) return run_ovals(oa);
        if (cp->parsed()) return run_critical(ca);
        if (up->parsed()) return run_susy(ua);
        if (vp->parsed()) return run_verify(va);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitConfig;
}
