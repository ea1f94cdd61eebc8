#pragma once

// Subcommands of the `epszeta` command-line tool.
//
//   eval      evaluate eps or Z at one point in any modulus regime
//   tables    print eps/Z at x = 0.5, k in {0.5, 1, 2} next to quadrature
//   elastica  write an elastica curve as CSV
//   check     randomized comparison of eps against quadrature
//
// Exit codes: 0 success, 1 I/O failure, 2 bad flags, 3 domain error,
// 4 tolerance exceeded (tables, check), 5 numerical non-convergence.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <epszeta.hpp>

namespace epszeta::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_io = 1,
    exit_usage = 2,
    exit_domain = 3,
    exit_tolerance = 4,
    exit_convergence = 5,
};

/// Table cells print with 6 decimals; this is the largest difference that
/// cannot change a printed digit by more than one unit.
inline constexpr double table_tolerance = 5e-7;

// snprintf rounds the exact binary value, ties to even, and is
// locale-independent as long as nothing calls setlocale.
inline std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline std::string full(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);  // -0 prints as 0
    return buf;
}

inline std::string sci(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline std::string fixed6(std::complex<double> z)
{
    return fixed6(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + fixed6(std::abs(z.imag())) + "i";
}

struct OutputRecord {
    std::string function;
    double x = 0;
    Modulus<double> modulus = Modulus<double>::real(0.0);
    double value_re = 0;
    double value_im = 0;
    bool show_im = false;
};

inline Modulus<double> make_modulus(double k, const std::string& kind)
{
    return kind == "imaginary" ? Modulus<double>::imaginary(k) : Modulus<double>::real(k);
}

inline Branch parse_branch(const std::string& s) { return s == "upper" ? Branch::upper : Branch::lower; }

// ---------------------------------------------------------------- eval

struct EvalOptions {
    std::string function = "epsilon";
    double x = 0;
    double k = 0;
    std::string modulus = "real";
    std::string format = "text";
    std::string branch = "lower";
    bool complex = false;
};

inline OutputRecord evaluate(const EvalOptions& opt)
{
    OutputRecord rec;
    rec.function = opt.function;
    rec.x = opt.x;
    rec.modulus = make_modulus(opt.k, opt.modulus);
    if (opt.function == "epsilon") {
        rec.value_re = epsilon_any(opt.x, rec.modulus);
    } else {
        const auto z = zeta_any(opt.x, rec.modulus, parse_branch(opt.branch));
        rec.value_re = z.real();
        rec.value_im = z.imag();
        rec.show_im = rec.modulus.regime() == Regime::large_real;
    }
    rec.show_im = rec.show_im || opt.complex;
    return rec;
}

inline void write_record(const OutputRecord& rec, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << "{\"fn\":\"" << rec.function << "\",\"x\":" << full(rec.x)
            << ",\"k\":" << full(rec.modulus.magnitude()) << ",\"regime\":\""
            << to_string(rec.modulus.regime()) << "\",\"re\":" << full(rec.value_re)
            << ",\"im\":" << full(rec.value_im) << "}\n";
    } else if (format == "csv") {
        out << "fn,x,k,regime,re,im\n"
            << rec.function << ',' << full(rec.x) << ',' << full(rec.modulus.magnitude()) << ','
            << to_string(rec.modulus.regime()) << ',' << full(rec.value_re) << ','
            << full(rec.value_im) << '\n';
    } else if (rec.show_im) {
        out << fixed6({rec.value_re, rec.value_im}) << '\n';
    } else {
        out << fixed6(rec.value_re) << '\n';
    }
}

inline int run_eval(const EvalOptions& opt, std::ostream& out)
{
    write_record(evaluate(opt), opt.format, out);
    return exit_ok;
}

// ---------------------------------------------------------------- tables

struct TableCell {
    double k;
    std::complex<double> present;
    std::complex<double> quadrature;

    double abs_diff() const { return std::abs(present - quadrature); }
};

struct Table {
    std::string title;
    std::vector<TableCell> cells;
};

inline constexpr double table_x = 0.5;
inline constexpr double quadrature_tolerance = 1e-12;

inline std::vector<Table> build_tables()
{
    struct Layout {
        const char* title;
        const char* modulus;
        bool zeta;
    };
    const Layout layouts[] = {
        {"Table 1. eps(x, k)", "real", false},
        {"Table 2. eps(x, ik)", "imaginary", false},
        {"Table 3. Z(x, k)", "real", true},
        {"Table 4. Z(x, ik)", "imaginary", true},
    };

    std::vector<Table> tables;
    for (const auto& layout : layouts) {
        Table t{layout.title, {}};
        for (double k : {0.5, 1.0, 2.0}) {
            const auto m = make_modulus(k, layout.modulus);
            const double eps_quad = epsilon_by_quadrature(table_x, m, quadrature_tolerance);
            TableCell cell{k, {}, {}};
            if (layout.zeta) {
                cell.present = zeta_any(table_x, m);
                cell.quadrature = eps_quad - ek_ratio_any(m) * table_x;
            } else {
                cell.present = epsilon_any(table_x, m);
                cell.quadrature = eps_quad;
            }
            t.cells.push_back(cell);
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

inline int run_tables(std::ostream& out)
{
    const auto tables = build_tables();
    int failures = 0;
    for (const auto& t : tables) {
        out << t.title << "  (quadrature: adaptive 8-panel Newton-Cotes)\n";
        out << "  x     k     Present                 Quadrature              AbsDiff\n";
        for (const auto& c : t.cells) {
            const bool show_im = c.present.imag() != 0 || c.quadrature.imag() != 0;
            const auto column = [&](std::complex<double> v) {
                std::string s = show_im ? fixed6(v) : fixed6(v.real());
                s.resize(std::max<std::size_t>(s.size(), 22), ' ');
                return s;
            };
            out << "  " << fixed6(table_x).substr(0, 3) << "   " << fixed6(c.k).substr(0, 3) << "   "
                << column(c.present) << "  " << column(c.quadrature) << "  " << sci(c.abs_diff()) << '\n';
            if (!(c.abs_diff() <= table_tolerance))
                ++failures;
        }
        out << '\n';
    }
    if (failures > 0) {
        out << "FAIL: " << failures << " of 12 cells differ by more than " << sci(table_tolerance) << '\n';
        return exit_tolerance;
    }
    out << "all 12 cells agree within " << sci(table_tolerance) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- elastica

struct ElasticaOptions {
    std::string kind = "flexural";
    double k = 0.5;
    double omega = 1;
    double u_min = -4;
    double u_max = 4;
    int samples = 201;
    std::string out_path;
};

inline void write_curve_csv(const ElasticaOptions& opt, std::ostream& out)
{
    const CurveKind kind = opt.kind == "inflexural" ? CurveKind::inflexural : CurveKind::flexural;
    const ElasticaParams<double> params{opt.k, opt.omega};
    const auto grid = uniform_grid(opt.u_min, opt.u_max, opt.samples);
    const auto points = sample_curve(kind, params, opt.u_min, opt.u_max, opt.samples);
    out << "u,x,y\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << full(grid[i]) << ',' << full(points[i].x) << ',' << full(points[i].y) << '\n';
}

inline int run_elastica(const ElasticaOptions& opt, std::ostream& out, std::ostream& err)
{
    if (!(opt.u_min < opt.u_max)) {
        err << "elastica: --u-min must be less than --u-max\n";
        return exit_usage;
    }
    if (opt.samples < 2) {
        err << "elastica: --samples must be at least 2\n";
        return exit_usage;
    }
    if (opt.out_path.empty() || opt.out_path == "-") {
        write_curve_csv(opt, out);
        return exit_ok;
    }
    std::ostringstream buffer;
    write_curve_csv(opt, buffer);  // domain errors surface before the file is touched
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        err << "elastica: cannot open " << opt.out_path << '\n';
        return exit_io;
    }
    file << buffer.str();
    return file ? exit_ok : exit_io;
}

// ---------------------------------------------------------------- check

struct CheckOptions {
    int trials = 100;
    double tol = 1e-9;
    std::uint64_t seed = 7;
};

struct RegimeReport {
    Regime regime;
    double max_abs_diff = 0;
    double worst_x = 0;
    double worst_k = 0;
};

inline std::vector<RegimeReport> run_oracle_comparison(const CheckOptions& opt)
{
    std::mt19937_64 engine(opt.seed);
    auto draw = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
    };
    const double quad_tol = std::clamp(opt.tol / 100, 1e-14, 1e-11);

    std::vector<RegimeReport> reports;
    for (Regime regime : {Regime::standard, Regime::large_real, Regime::pure_imaginary}) {
        RegimeReport report{regime};
        for (int i = 0; i < opt.trials; ++i) {
            const double x = draw(-4, 4);
            Modulus<double> m = Modulus<double>::real(0.0);
            double k = 0;
            switch (regime) {
            case Regime::standard: k = draw(0, 1); m = Modulus<double>::real(k); break;
            case Regime::large_real: k = draw(1.05, 10); m = Modulus<double>::real(k); break;
            case Regime::pure_imaginary: k = draw(0.05, 10); m = Modulus<double>::imaginary(k); break;
            }
            const double diff = std::abs(epsilon_any(x, m) - epsilon_by_quadrature(x, m, quad_tol));
            if (diff > report.max_abs_diff || i == 0)
                report = {regime, diff, x, k};
        }
        reports.push_back(report);
    }
    return reports;
}

inline int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.trials <= 0) {
        err << "check: --trials must be positive\n";
        return exit_usage;
    }
    if (!(opt.tol > 0)) {
        err << "check: --tol must be positive\n";
        return exit_usage;
    }
    const auto reports = run_oracle_comparison(opt);
    out << "epszeta check " << EPSZETA_VERSION << '\n';
    out << "trials per regime " << opt.trials << ", seed " << opt.seed << ", tolerance " << sci(opt.tol)
        << '\n';
    bool ok = true;
    for (const auto& r : reports) {
        char line[160];
        std::snprintf(line, sizeof line, "%-15s max |eps - quadrature| = %.3e  (at x = %.6f, k = %.6f)\n",
                      to_string(r.regime), r.max_abs_diff, r.worst_x, r.worst_k);
        out << line;
        ok = ok && r.max_abs_diff <= opt.tol;
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? exit_ok : exit_tolerance;
}

// ---------------------------------------------------------------- entry

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Jacobi epsilon and zeta functions for real, large-real and imaginary moduli",
                 "epszeta"};
    app.set_version_flag("--version", std::string(EPSZETA_VERSION));
    app.require_subcommand(1);

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "Evaluate eps(x, m) or Z(x, m)");
    eval->add_option("--fn", eval_opt.function, "Function")
        ->required()
        ->check(CLI::IsMember({"epsilon", "zeta"}));
    eval->add_option("--x", eval_opt.x, "Argument x")->required();
    eval->add_option("--k", eval_opt.k, "Modulus magnitude k")->required();
    eval->add_option("--modulus", eval_opt.modulus, "Modulus k (real) or ik (imaginary)")
        ->check(CLI::IsMember({"real", "imaginary"}))
        ->capture_default_str();
    eval->add_option("--format", eval_opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    eval->add_option("--branch", eval_opt.branch, "Branch of Z for real k > 1")
        ->check(CLI::IsMember({"lower", "upper"}))
        ->capture_default_str();
    eval->add_flag("--complex", eval_opt.complex, "Always print the imaginary part in text mode");

    auto* tables = app.add_subcommand("tables", "Reproduce the eps/Z comparison tables at x = 0.5");

    ElasticaOptions el_opt;
    auto* elastica = app.add_subcommand("elastica", "Write an elastica curve as CSV (u,x,y)");
    elastica->add_option("--kind", el_opt.kind, "Curve kind")
        ->check(CLI::IsMember({"flexural", "inflexural"}))
        ->capture_default_str();
    elastica->add_option("--k", el_opt.k, "Modulus (k < 1 flexural, k > 1 in-flexural)")->capture_default_str();
    elastica->add_option("--omega", el_opt.omega, "Scale parameter omega > 0")->capture_default_str();
    elastica->add_option("--u-min", el_opt.u_min, "First parameter value")->capture_default_str();
    elastica->add_option("--u-max", el_opt.u_max, "Last parameter value")->capture_default_str();
    elastica->add_option("--samples", el_opt.samples, "Number of samples (>= 2)")->capture_default_str();
    elastica->add_option("--out", el_opt.out_path, "Output file (default stdout)");

    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "Randomized eps vs quadrature comparison over all regimes");
    check->add_option("--trials", check_opt.trials, "Trials per regime")->capture_default_str();
    check->add_option("--tol", check_opt.tol, "Maximum allowed |difference|")->capture_default_str();
    check->add_option("--seed", check_opt.seed, "PRNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*eval)
            return run_eval(eval_opt, out);
        if (*tables)
            return run_tables(out);
        if (*elastica)
            return run_elastica(el_opt, out, err);
        if (*check)
            return run_check(check_opt, out, err);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << '\n';
        return exit_convergence;
    }
    return exit_usage;
}

}  // namespace epszeta::cli
