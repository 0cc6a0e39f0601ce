// umbratrig command-line front end. Talks to the library only through the C API.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umbratrig/umbratrig.h"

namespace {

// Exit code 2 with a one-line diagnostic.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ut_status s)
{
    if (s != UT_OK)
        throw UsageError(std::string(ut_status_name(s)) + ": " + ut_last_error());
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 2;

    std::vector<double> points() const
    {
        std::vector<double> p;
        for (int i = 0; i < steps; ++i)
            p.push_back(i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1));
        return p;
    }
};

double parse_number(const std::string& s)
{
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
        throw UsageError("not a decimal number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(item);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> out;
    for (const std::string& item : split(s, ','))
        out.push_back(parse_number(item));
    if (out.empty())
        throw UsageError("empty number list");
    return out;
}

Grid parse_grid(const std::string& s)
{
    const auto parts = split(s, ':');
    if (parts.size() != 3)
        throw UsageError("grid must be min:max:steps, got '" + s + "'");
    Grid g;
    g.lo = parse_number(parts[0]);
    g.hi = parse_number(parts[1]);
    const double steps = parse_number(parts[2]);
    if (steps != std::floor(steps) || steps < 2 || steps > 1e7)
        throw UsageError("grid steps must be an integer >= 2");
    g.steps = static_cast<int>(steps);
    if (!(g.lo <= g.hi))
        throw UsageError("grid needs min <= max");
    return g;
}

ut_eval_config eval_config()
{
    ut_eval_config cfg = ut_eval_config_default();
    if (const char* env = std::getenv("UMBRATRIG_MAX_TERMS")) {
        const double v = parse_number(env);
        if (v != std::floor(v) || v < 1 || v > 1e8)
            throw UsageError("UMBRATRIG_MAX_TERMS must be a positive integer");
        cfg.max_terms = static_cast<int>(v);
    }
    return cfg;
}

struct FamilyDeleter {
    void operator()(ut_family* f) const { ut_family_destroy(f); }
};
struct DensityDeleter {
    void operator()(ut_density* d) const { ut_density_destroy(d); }
};
struct ReportDeleter {
    void operator()(ut_report* r) const { ut_report_destroy(r); }
};
using FamilyPtr = std::unique_ptr<ut_family, FamilyDeleter>;
using DensityPtr = std::unique_ptr<ut_density, DensityDeleter>;
using ReportPtr = std::unique_ptr<ut_report, ReportDeleter>;

struct FamilyFlags {
    std::string name = "lexp";
    double alpha = 1.0;
    double beta = 1.0;
    int k = 0;
    int m = 3;

    void add_to(CLI::App* app)
    {
        app->add_option("--family", name, "function family (lexp, lcos, lsin, humbert, phf, g_alpha, ...)");
        app->add_option("--alpha", alpha, "family parameter alpha");
        app->add_option("--beta", beta, "family parameter beta");
        app->add_option("--k", k, "PHF residue k");
        app->add_option("--m", m, "PHF modulus m");
    }

    FamilyPtr create() const
    {
        ut_family* f = nullptr;
        check(ut_family_create(name.c_str(), alpha, beta, k, m, &f));
        return FamilyPtr(f);
    }
};

// Writes to the named file, or stdout when the path is empty.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw UsageError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

double real_eval(const ut_family* f, double x, const ut_eval_config& cfg)
{
    double re = 0.0, im = 0.0;
    check(ut_eval(f, x, 0.0, &cfg, &re, &im, nullptr));
    return re;
}

void write_svg(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ys)
{
    double x0 = xs[0], x1 = xs[0], y0 = ys[0], y1 = ys[0];
    for (size_t i = 0; i < xs.size(); ++i) {
        x0 = std::min(x0, xs[i]);
        x1 = std::max(x1, xs[i]);
        y0 = std::min(y0, ys[i]);
        y1 = std::max(y1, ys[i]);
    }
    const double pad = 0.02 * std::max({x1 - x0, y1 - y0, 1e-9});
    const double w = x1 - x0 + 2 * pad;
    const double h = y1 - y0 + 2 * pad;
    // SVG y grows downwards, so plot -ls.
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(x0 - pad) << ' '
        << fmt(-y1 - pad) << ' ' << fmt(w) << ' ' << fmt(h) << "\">\n"
        << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(0.004 * std::max(w, h))
        << "\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i)
        out << (i ? " " : "") << fmt(xs[i]) << ',' << fmt(0.0 - ys[i]);
    out << "\"/>\n</svg>\n";
}

double exp_density(double t, void* user) { return std::exp(-*static_cast<double*>(user) * t); }
double gauss_density(double t, void*) { return std::exp(-(t - 1.0) * (t - 1.0)); }

std::vector<std::pair<double, double>> parse_atoms(const std::vector<std::string>& items)
{
    std::vector<std::pair<double, double>> out;
    for (const std::string& a : items) {
        const auto parts = split(a, ':');
        if (parts.size() != 2)
            throw UsageError("atom must be location:weight, got '" + a + "'");
        out.emplace_back(parse_number(parts[0]), parse_number(parts[1]));
    }
    return out;
}

int run(int argc, char** argv)
{
    CLI::App app{"Laguerre-type trigonometric functions, umbral identities and diffusion solvers"};
    app.require_subcommand(1, 1);

    // eval
    FamilyFlags eval_family;
    double eval_x = 0.0, eval_im = 0.0;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a series family at one point");
    eval_family.add_to(eval_cmd);
    eval_cmd->add_option("--x", eval_x, "argument (real part)")->required();
    eval_cmd->add_option("--im", eval_im, "argument imaginary part");

    // table
    FamilyFlags table_family;
    std::string table_grid, table_out;
    auto* table_cmd = app.add_subcommand("table", "tabulate a family on a grid as CSV");
    table_family.add_to(table_cmd);
    table_cmd->add_option("--grid", table_grid, "min:max:steps")->required();
    table_cmd->add_option("--output,-o", table_out, "output path (default stdout)");

    // lissajous
    double liss_xmax = 1.0;
    int liss_steps = 2;
    std::string liss_format = "csv", liss_out;
    auto* liss_cmd = app.add_subcommand("lissajous", "sample (lc(x), ls(x)) on [0, xmax]");
    liss_cmd->add_option("--xmax", liss_xmax, "upper parameter bound")->required();
    liss_cmd->add_option("--steps", liss_steps, "number of samples, endpoints included")->required();
    liss_cmd->add_option("--format", liss_format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    liss_cmd->add_option("--output,-o", liss_out, "output path (default stdout)");

    // area
    double area_x = 1.0, area_tol = 1e-8;
    int area_panels = 200;
    bool area_self_test = false;
    auto* area_cmd = app.add_subcommand("area", "area swept by (lc, ls) between parameters 0 and x");
    area_cmd->add_option("--x", area_x, "parameter")->required();
    area_cmd->add_option("--panels", area_panels, "Simpson panels");
    area_cmd->add_flag("--self-test", area_self_test, "check the cos/sin analog against x/2");
    area_cmd->add_option("--tol", area_tol, "self-test tolerance");

    // verify
    double verify_tol = 1e-10;
    std::string verify_grid = "0:2:9", verify_params = "0.5,1,2";
    auto* verify_cmd = app.add_subcommand("verify", "run the identity residual suite");
    verify_cmd->add_option("--tol", verify_tol, "residual tolerance");
    verify_cmd->add_option("--grid", verify_grid, "x and y grid, min:max:steps");
    verify_cmd->add_option("--params", verify_params, "alpha/beta values, comma separated");

    // transform
    std::string tr_kind = "borel";
    FamilyFlags tr_family;
    double tr_x = 0.0;
    int tr_nodes = 0;
    auto* tr_cmd = app.add_subcommand("transform", "Borel-type or Beta-weighted integral transform");
    tr_cmd->add_option("--kind", tr_kind, "borel or galpha")->check(CLI::IsMember({"borel", "galpha"}));
    tr_family.add_to(tr_cmd);
    tr_cmd->add_option("--x", tr_x, "argument (eta for galpha)")->required();
    tr_cmd->add_option("--nodes", tr_nodes, "quadrature nodes (default per transform)");

    // diffuse
    std::string df_solver = "closed", df_op = "ld", df_coeffs, df_density = "exp";
    FamilyFlags df_family;
    double df_x = 0.0, df_tau = 0.0, df_decay = 1.0;
    int df_order = -1;
    std::vector<std::string> df_atoms;
    auto* df_cmd = app.add_subcommand("diffuse", "solve a Laguerre-type diffusion problem at one point");
    df_cmd->add_option("--solver", df_solver, "closed, spectral, umbral, airy or series")
        ->check(CLI::IsMember({"closed", "spectral", "umbral", "airy", "series"}));
    df_family.add_to(df_cmd);
    df_cmd->add_option("--op", df_op, "operator for the series solver (d, d3, ld, ld_alpha, ld_ab, theta)");
    df_cmd->add_option("--coeffs", df_coeffs, "initial power-series coefficients, comma separated");
    df_cmd->add_option("--density", df_density, "exp (e^{-c t}), gauss (e^{-(t-1)^2}) or none")
        ->check(CLI::IsMember({"exp", "gauss", "none"}));
    df_cmd->add_option("--decay", df_decay, "decay rate c of the exp density");
    df_cmd->add_option("--atom", df_atoms, "spectral atom location:weight (repeatable)");
    df_cmd->add_option("--x", df_x, "space coordinate")->required();
    df_cmd->add_option("--tau,--t", df_tau, "time");
    df_cmd->add_option("--order", df_order, "truncation order of the umbral solver");

    // limits
    std::string lim_kind = "napier", lim_ns = "10,100,1000";
    double lim_x = 1.0;
    bool lim_check = false;
    auto* lim_cmd = app.add_subcommand("limits", "convergence of the Napier-Laguerre and J0 umbral limits");
    lim_cmd->add_option("--kind", lim_kind, "napier or j0")->check(CLI::IsMember({"napier", "j0"}));
    lim_cmd->add_option("--x", lim_x, "argument");
    lim_cmd->add_option("--n", lim_ns, "orders, comma separated");
    lim_cmd->add_flag("--check", lim_check, "fail unless the error decreases along the orders");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const ut_eval_config cfg = eval_config();

    if (*eval_cmd) {
        const FamilyPtr f = eval_family.create();
        double re = 0.0, im = 0.0;
        check(ut_eval(f.get(), eval_x, eval_im, &cfg, &re, &im, nullptr));
        if (eval_im == 0.0 && im == 0.0)
            std::cout << fmt(re) << '\n';
        else
            std::cout << fmt(re) << ' ' << fmt(im) << '\n';
        return 0;
    }

    if (*table_cmd) {
        const Grid g = parse_grid(table_grid);
        const FamilyPtr f = table_family.create();
        std::vector<std::string> rows;
        for (double x : g.points())
            rows.push_back(fmt(x) + ',' + fmt(real_eval(f.get(), x, cfg)));
        Output out(table_out);
        out.stream() << "x,value\n";
        for (const auto& r : rows)
            out.stream() << r << '\n';
        return 0;
    }

    if (*liss_cmd) {
        if (liss_steps < 2)
            throw UsageError("--steps must be >= 2");
        std::vector<double> xs(static_cast<size_t>(liss_steps)), lcs(xs.size()), lss(xs.size());
        check(ut_lissajous(liss_xmax, liss_steps, xs.data(), lcs.data(), lss.data()));
        Output out(liss_out);
        if (liss_format == "svg") {
            write_svg(out.stream(), lcs, lss);
        } else {
            out.stream() << "x,lc,ls\n";
            for (size_t i = 0; i < xs.size(); ++i)
                out.stream() << fmt(xs[i]) << ',' << fmt(lcs[i]) << ',' << fmt(lss[i]) << '\n';
        }
        return 0;
    }

    if (*area_cmd) {
        if (area_self_test) {
            double a = 0.0, a2 = 0.0;
            check(ut_sector_area_circular(area_x, area_panels, &a, &a2));
            const double err = std::fabs(a - area_x / 2.0);
            const bool ok = err <= area_tol;
            std::cout << "circular area " << fmt(a) << " expected " << fmt(area_x / 2.0) << " error " << fmt(err)
                      << (ok ? " PASS" : " FAIL") << '\n';
            return ok ? 0 : 1;
        }
        double a = 0.0, a2 = 0.0;
        check(ut_sector_area(area_x, area_panels, &a, &a2));
        std::cout << "area " << fmt(a) << '\n' << "double_area " << fmt(a2) << '\n';
        return 0;
    }

    if (*verify_cmd) {
        const std::vector<double> pts = parse_grid(verify_grid).points();
        const std::vector<double> params = parse_list(verify_params);
        ut_report* raw = nullptr;
        check(ut_verify(pts.data(), pts.size(), params.data(), params.size(), verify_tol, &cfg, &raw));
        const ReportPtr report(raw);
        bool all = true;
        std::printf("%-20s %-24s %8s  %s\n", "identity", "max_residual", "evals", "result");
        for (size_t i = 0; i < ut_report_size(report.get()); ++i) {
            char name[64];
            double res = 0.0;
            int evals = 0, passed = 0;
            check(ut_report_entry(report.get(), i, name, sizeof name, &res, &evals, &passed));
            all = all && passed;
            std::printf("%-20s %-24s %8d  %s\n", name, fmt(res).c_str(), evals, passed ? "PASS" : "FAIL");
        }
        std::printf("%s\n", all ? "all identities pass" : "identity check failed");
        return all ? 0 : 1;
    }

    if (*tr_cmd) {
        double v = 0.0;
        if (tr_kind == "borel") {
            const FamilyPtr f = tr_family.create();
            ut_quadrature q{UT_QUAD_GAUSS_LAGUERRE, tr_nodes, 0.0, 0.0};
            check(ut_borel_transform(f.get(), tr_x, tr_nodes > 0 ? &q : nullptr, &v));
        } else {
            ut_quadrature q{UT_QUAD_GAUSS_JACOBI, tr_nodes, tr_family.alpha - 1.0, -1.0 / 3.0};
            check(ut_g_alpha_integral(tr_x, tr_family.alpha, tr_nodes > 0 ? &q : nullptr, &v));
        }
        std::cout << fmt(v) << '\n';
        return 0;
    }

    if (*df_cmd) {
        double v = 0.0;
        if (df_solver == "closed") {
            check(ut_laguerre_heat_closed(df_x, df_tau, &v));
        } else if (df_solver == "umbral" || df_solver == "series") {
            if (df_coeffs.empty())
                throw UsageError("--coeffs is required for the " + df_solver + " solver");
            const std::vector<double> c = parse_list(df_coeffs);
            if (df_solver == "umbral") {
                const int order = df_order >= 0 ? df_order : static_cast<int>(c.size()) - 1;
                check(ut_ll_heat_umbral(c.data(), c.size(), df_x, df_tau, order, &cfg, &v));
            } else {
                check(ut_heat_power_series(c.data(), c.size(), df_op.c_str(), df_family.alpha, df_family.beta,
                                           df_x, df_tau, &v));
            }
        } else {
            double decay = df_decay;
            ut_density* raw = nullptr;
            if (df_density == "exp")
                check(ut_density_create(exp_density, &decay, decay, INFINITY, &raw));
            else if (df_density == "gauss")
                check(ut_density_create(gauss_density, nullptr, 1.0, INFINITY, &raw));
            else
                check(ut_density_create(nullptr, nullptr, 1.0, INFINITY, &raw));
            const DensityPtr density(raw);
            for (const auto& [loc, w] : parse_atoms(df_atoms))
                check(ut_density_add_atom(density.get(), loc, w));
            if (df_solver == "spectral") {
                const FamilyPtr f = df_family.create();
                check(ut_heat_spectral(density.get(), f.get(), df_x, df_tau, nullptr, &v));
            } else {
                check(ut_airy_heat_spectral(density.get(), df_family.alpha, df_x, df_tau, nullptr, &v));
            }
        }
        std::cout << fmt(v) << '\n';
        return 0;
    }

    if (*lim_cmd) {
        std::vector<int> ns;
        for (double n : parse_list(lim_ns)) {
            if (n != std::floor(n) || n < 1 || n > 1e7)
                throw UsageError("orders must be positive integers");
            ns.push_back(static_cast<int>(n));
        }
        // Napier terms tend to le(x); J0 terms tend to le(-x^2/4) = J0(x).
        ut_family* raw = nullptr;
        check(ut_family_create("lexp", 0, 0, 0, 0, &raw));
        const FamilyPtr lexp(raw);
        const double limit = real_eval(lexp.get(), lim_kind == "napier" ? lim_x : -lim_x * lim_x / 4.0, cfg);
        std::cout << "n,term,abs_error_vs_limit\n";
        bool decreasing = true;
        double prev = INFINITY;
        for (int n : ns) {
            double term = 0.0;
            check(lim_kind == "napier" ? ut_napier_term(lim_x, n, &term) : ut_j0_term(lim_x, n, &term));
            const double err = std::fabs(term - limit);
            decreasing = decreasing && err < prev;
            prev = err;
            std::cout << n << ',' << fmt(term) << ',' << fmt(err) << '\n';
        }
        return (!lim_check || decreasing) ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
