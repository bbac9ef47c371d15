// Command-line front end: evaluate xi by any route, run the verification
// suites, reconstruct on grids, locate/certify zeros (with a persistent
// cache), scan the off-line strip, and render reports.
//
// Exit codes: 0 success, 2 configuration error, 3 tolerance/convergence
// failure, 4 asserted-invariant failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xiv/contour.hpp"
#include "xiv/holography.hpp"
#include "xiv/parallel.hpp"
#include "xiv/report.hpp"
#include "xiv/special_functions.hpp"
#include "xiv/xi_core.hpp"
#include "xiv/zeros.hpp"

namespace {

using namespace xiv;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitAssertion = 4;

constexpr double kLineAssertBar = 1e-8;      // single quadrature layer
constexpr double kTransformAssertBar = 1e-7; // stacked quadratures
constexpr double kReconstructAssertBar = 1e-6;

struct GlobalOptions {
    double tolerance = 1e-9;
    double contour_c = 1.5;
    double truncation_T = 60.0;
    std::string format = "text";
    std::string cache_path = "./xi_zeros.json";
    int threads = 0;
    bool serial = false;

    ExecMode mode() const { return serial ? ExecMode::serial : ExecMode::parallel; }
    OutputFormat output_format() const { return *parse_format(format); }
    void validate() const {
        if (!(tolerance > 0.0))
            throw CLI::ValidationError("--tolerance must be positive");
        if (!(contour_c > 1.0 && contour_c < 2.0))
            throw CLI::ValidationError("--contour-c must lie in (1, 2)");
        if (!(truncation_T >= 30.0))
            throw CLI::ValidationError("--truncation-T must be >= 30");
        if (!parse_format(format))
            throw CLI::ValidationError("--format must be json, csv, or text");
    }
    VerticalLineSpec line_spec() const {
        VerticalLineSpec spec;
        spec.c = contour_c;
        spec.T = truncation_T;
        spec.tol = std::min(tolerance, 1e-9);
        return spec;
    }
};

std::string sibling_path(const std::string& cache_path, const char* name) {
    return (std::filesystem::path(cache_path).parent_path() / name).string();
}

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

// "0.5", "0.5+14.1i", "0.5-14.1i", "14.1i"; an optional leading "s=".
cplx parse_complex(std::string text) {
    if (text.rfind("s=", 0) == 0)
        text = text.substr(2);
    if (text.empty())
        throw CLI::ValidationError("empty complex literal");
    double re = 0.0, im = 0.0;
    size_t pos = 0;
    if (text.back() == 'i') {
        // find the split between real and imaginary parts
        size_t split = std::string::npos;
        for (size_t i = 1; i + 1 < text.size(); ++i)
            if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' &&
                text[i - 1] != 'E')
                split = i;
        if (split == std::string::npos) {
            im = std::stod(text.substr(0, text.size() - 1), &pos);
        } else {
            re = std::stod(text.substr(0, split), &pos);
            std::string ims = text.substr(split, text.size() - split - 1);
            im = (ims == "+" || ims == "-") ? (ims == "-" ? -1.0 : 1.0)
                                            : std::stod(ims, &pos);
        }
    } else {
        re = std::stod(text, &pos);
    }
    return {re, im};
}

GridSpec parse_grid_axis(const std::string& text) {
    GridSpec g;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &g.lo, &g.hi, &g.n) != 3)
        throw CLI::ValidationError("grid axis must be lo:hi:n, got '" + text + "'");
    g.validate();
    return g;
}

void emit(const GlobalOptions& g, const ReportDocument& doc) {
    std::cout << emit_report(doc, g.output_format());
}

// --- subcommand bodies ------------------------------------------------------

int run_eval(const GlobalOptions& g, const std::string& s_text,
             const std::string& method) {
    const cplx s = parse_complex(s_text);
    XiValue v;
    if (method == "reference") {
        v = xi_reference(s);
    } else if (method == "theta-integral") {
        v = xi_theta_integral(s, g.tolerance);
    } else if (method == "exp-series") {
        v = xi_exp_series(s, g.tolerance);
    } else if (method == "cosine-integral") {
        if (s.real() != 0.5 || s.imag() != 0.0)
            throw CLI::ValidationError(
                "cosine-integral evaluates Xi(tau); pass s=<tau> as a real "
                "number meaning tau, or use another method");
        v = Xi_cosine_integral(s.real(), g.tolerance);
    } else if (method == "reconstruction") {
        v = xi_reconstruct(s, g.line_spec());
    } else {
        throw CLI::ValidationError("unknown method '" + method + "'");
    }
    std::printf("xi(%.17g%+.17gi) [%s] = %.17g%+.17gi  (est error %.3g)\n",
                s.real(), s.imag(), to_string(v.method), v.value.real(),
                v.value.imag(), v.est_error);
    return kExitOk;
}

int run_eval_tau(const GlobalOptions& g, double tau) {
    const XiValue v = Xi_cosine_integral(tau, g.tolerance);
    std::printf("Xi(%.17g) [cosine-integral] = %.17g  (est error %.3g)\n", tau,
                v.value.real(), v.est_error);
    return kExitOk;
}

int run_verify(const GlobalOptions& g, const std::vector<std::string>& filter) {
    VerticalLineSpec spec = g.line_spec();
    auto reports = verify_line_identities(spec, 14.134725141734694);
    for (auto& r : reports)
        r.note = r.note.empty() ? "line" : r.note;

    TransformSuiteOptions topt;
    topt.T = g.truncation_T;
    topt.tol = std::min(g.tolerance, 1e-9);
    topt.mode = g.mode();
    auto transforms = verify_transform_identities(topt);
    reports.insert(reports.end(), transforms.begin(), transforms.end());

    if (!filter.empty()) {
        std::vector<IdentityReport> kept;
        for (const auto& r : reports)
            for (const auto& f : filter)
                if (r.id == f) {
                    kept.push_back(r);
                    break;
                }
        reports = std::move(kept);
        if (reports.empty())
            throw CLI::ValidationError("no identity matches the given ids");
    }

    ReportDocument doc;
    doc.config = {{"tolerance", g.tolerance},
                  {"contour_c", g.contour_c},
                  {"truncation_T", g.truncation_T}};
    doc.identities = reports;
    bool failed = false;
    for (const auto& r : reports) {
        const double bar = r.note == "line" ? kLineAssertBar : kTransformAssertBar;
        if (r.asserted && !(r.abs_residual <= bar)) {
            failed = true;
            doc.findings.push_back("ASSERTION FAILED: " + r.id + " residual " +
                                   std::to_string(r.abs_residual));
        }
        if (!r.asserted && r.abs_residual > kTransformAssertBar && r.id != "error")
            doc.findings.push_back(
                r.id + ": residual " + std::to_string(r.abs_residual) +
                (r.note.empty() ? "" : " (" + r.note + ")"));
    }
    emit(g, doc);
    write_text_file(sibling_path(g.cache_path, "xi_verify_last.json"),
                    identities_to_json(reports));
    return failed ? kExitAssertion : kExitOk;
}

int run_reconstruct(const GlobalOptions& g, const std::string& grid_text) {
    GridSpec sg{0.1, 0.9, 5}, tg{0.0, 40.0, 5};
    if (!grid_text.empty()) {
        const auto comma = grid_text.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--grid must be sigma_lo:hi:n,tau_lo:hi:n");
        sg = parse_grid_axis(grid_text.substr(0, comma));
        tg = parse_grid_axis(grid_text.substr(comma + 1));
    }
    std::vector<cplx> pts;
    for (int i = 0; i < sg.n; ++i)
        for (int j = 0; j < tg.n; ++j)
            pts.emplace_back(sg.at(i), tg.at(j));

    VerticalLineSpec spec = g.line_spec();
    spec.tol = std::min(spec.tol, 2e-8);
    const auto recon = reconstruct_grid(pts, spec, g.mode());

    ReportDocument doc;
    doc.config = {{"contour_c", g.contour_c}, {"truncation_T", g.truncation_T}};
    double worst = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const cplx ref = xi_reference(pts[i]).value;
        const double res = std::abs(recon[i].value - ref);
        worst = std::max(worst, res);
        doc.identities.push_back(IdentityReport::make(
            "reconstruction", recon[i].value, ref,
            {{"sigma", pts[i].real()}, {"tau", pts[i].imag()}}));
    }
    char line[160];
    std::snprintf(line, sizeof line,
                  "reconstruction grid %dx%d: worst |recon - ref| = %.3e", sg.n,
                  tg.n, worst);
    doc.findings.push_back(line);
    emit(g, doc);
    return worst <= kReconstructAssertBar ? kExitOk : kExitAssertion;
}

int run_zeros(const GlobalOptions& g, int count) {
    if (count < 1 || count > 500)
        throw CLI::ValidationError("--count must be in [1, 500]");

    std::string cache_warning;
    auto cached = load_zero_cache(g.cache_path, &cache_warning);
    std::vector<ZeroRecord> records;
    if (cached && static_cast<int>(cached->size()) >= count) {
        records.assign(cached->begin(), cached->begin() + count);
    } else {
        ZeroSearchOptions opt;
        opt.mode = g.mode();
        const auto out = find_critical_zeros(count, opt);
        records = out.records;
        if (!out.rescan_consistent)
            std::fprintf(stderr, "warning: %s\n", out.warning.c_str());
        save_zero_cache(g.cache_path, records);
    }
    if (!cache_warning.empty())
        std::fprintf(stderr, "warning: %s\n", cache_warning.c_str());

    ReportDocument doc;
    doc.zeros = records;
    emit(g, doc);
    return kExitOk;
}

int run_rh_scan(const GlobalOptions& g, const std::string& sigma_axis,
                const std::string& tau_axis) {
    const GridSpec sg =
        sigma_axis.empty() ? GridSpec{0.02, 0.48, 40} : parse_grid_axis(sigma_axis);
    const GridSpec tg =
        tau_axis.empty() ? GridSpec{0.1, 60.0, 60} : parse_grid_axis(tau_axis);

    ReportDocument doc;
    doc.config = {{"sigma_n", double(sg.n)}, {"tau_n", double(tg.n)}};
    doc.scans = rh_scan(sg, tg, 1e-11, g.mode());
    doc.conjecture = one_term_conjecture_scan(GridSpec{0.05, 0.45, 9},
                                              GridSpec{10.0, 100.0, 46}, g.mode());
    doc.findings.push_back(adjudicate_denominator(sg, tg));

    double min_sys = HUGE_VAL;
    for (const auto& c : doc.scans)
        min_sys = std::min(min_sys, c.residual_system);
    char line[200];
    std::snprintf(line, sizeof line,
                  "off-line scan: joint residual strictly positive over %zu "
                  "cells (min %.3e); the joint residual equals |xi(rho)| and "
                  "decays with the xi envelope at large tau",
                  doc.scans.size(), min_sys);
    doc.findings.push_back(line);

    bool mixed = false;
    double min_conj = HUGE_VAL;
    ConjectureCell argmin{};
    for (const auto& c : doc.conjecture) {
        if (std::fabs(c.value) < min_conj) {
            min_conj = std::fabs(c.value);
            argmin = c;
        }
        mixed = mixed || (c.value < 0.0) != (doc.conjecture.front().value < 0.0);
    }
    std::snprintf(line, sizeof line,
                  "one-term conjecture: %s over the grid; min |value| %.3e at "
                  "s=%.3f t=%.3f",
                  mixed ? "SIGN CHANGE (finding)" : "no sign change", min_conj,
                  argmin.s, argmin.t);
    doc.findings.push_back(line);

    emit(g, doc);
    write_text_file(sibling_path(g.cache_path, "xi_scan_last.json"),
                    emit_report(doc, OutputFormat::json));
    const bool positive = min_sys > 0.0;
    return positive ? kExitOk : kExitAssertion;
}

int run_report(const GlobalOptions& g) {
    ReportDocument doc;
    doc.generated_at = now_iso8601();
    doc.config = {{"tolerance", g.tolerance},
                  {"contour_c", g.contour_c},
                  {"truncation_T", g.truncation_T}};
    if (auto cached = load_zero_cache(g.cache_path))
        doc.zeros = *cached;
    if (auto verify_text = read_text_file(sibling_path(g.cache_path, "xi_verify_last.json"))) {
        try {
            doc.identities = identities_from_json(*verify_text);
        } catch (const std::exception& e) {
            doc.findings.push_back(std::string("stored verify results unreadable: ") +
                                   e.what());
        }
    }
    for (const auto& r : doc.identities)
        if (!r.asserted && r.abs_residual > kTransformAssertBar && r.id != "error")
            doc.findings.push_back(r.id + ": residual " +
                                   std::to_string(r.abs_residual));
    emit(g, doc);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"xiverify: numerical verification of xi-function line-integral "
                 "identities, holographic reconstruction in the critical strip, "
                 "and critical-line zero certification"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--tolerance", g.tolerance, "target tolerance (default 1e-9)");
    app.add_option("--contour-c", g.contour_c, "line abscissa, 1 < c < 2");
    app.add_option("--truncation-T", g.truncation_T, "line truncation height (>= 30)");
    app.add_option("--format", g.format, "output format: json, csv, text");
    app.add_option("--cache-path", g.cache_path, "zero cache file (JSON)");
    app.add_option("--threads", g.threads, "worker threads (0 = library default)");
    app.add_flag("--serial", g.serial, "run kernels on the serial reference path");

    auto* eval = app.add_subcommand("eval", "evaluate xi(s) by a chosen method");
    std::string s_text, method = "reference";
    eval->add_option("s", s_text, "point, e.g. s=0.5+14.134725i")->required();
    eval->add_option("--method", method,
                     "reference | theta-integral | exp-series | cosine-integral "
                     "| reconstruction");

    auto* verify = app.add_subcommand("verify", "run the identity suites");
    std::string identity_csv;
    verify->add_option("--identities", identity_csv,
                       "comma-separated identity ids (default: all)");

    auto* reconstruct =
        app.add_subcommand("reconstruct", "holographic reconstruction on a grid");
    std::string grid_text;
    reconstruct->add_option("--grid", grid_text,
                            "sigma_lo:hi:n,tau_lo:hi:n (default 0.1:0.9:5,0:40:5)");

    auto* zeros = app.add_subcommand("zeros", "locate and certify critical-line zeros");
    int count = 29;
    zeros->add_option("--count", count, "number of zeros (default 29)");

    auto* rhscan = app.add_subcommand("rh-scan", "off-line strip scans");
    std::string sigma_axis, tau_axis;
    rhscan->add_option("--sigma-grid", sigma_axis, "lo:hi:n (default 0.02:0.48:40)");
    rhscan->add_option("--tau-grid", tau_axis, "lo:hi:n (default 0.1:60:60)");

    auto* report = app.add_subcommand("report", "render cache + stored results");

    try {
        app.parse(argc, argv);
        g.validate();
        set_threads(g.threads);

        if (eval->parsed())
            return run_eval(g, s_text, method);
        if (verify->parsed()) {
            std::vector<std::string> filter;
            std::string cur;
            for (char ch : identity_csv) {
                if (ch == ',') {
                    if (!cur.empty())
                        filter.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            if (!cur.empty())
                filter.push_back(cur);
            return run_verify(g, filter);
        }
        if (reconstruct->parsed())
            return run_reconstruct(g, grid_text);
        if (zeros->parsed())
            return run_zeros(g, count);
        if (rhscan->parsed())
            return run_rh_scan(g, sigma_axis, tau_axis);
        if (report->parsed())
            return run_report(g);
        return kExitConfig;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "configuration/domain error: %s\n", e.what());
        return kExitConfig;
    } catch (const tolerance_error& e) {
        std::fprintf(stderr, "tolerance failure: %s\n", e.what());
        return kExitTolerance;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitTolerance;
    }
}
