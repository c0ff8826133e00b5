// qrmt: command-line front end for the qrmt::core library.
//
// Every subcommand emits CSV (17 significant digits, LF line endings, dot
// decimal separator) on stdout or --out, plus a JSON manifest describing the
// run (parameters, derived quantities, check results).  The manifest goes to
// stderr by default or to --manifest <file>.
//
// Exit codes: 0 success, 2 usage error, 3 numerical-precision failure,
// 4 verification failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrmt/density.hpp"
#include "qrmt/ensemble.hpp"
#include "qrmt/gap.hpp"
#include "qrmt/kernels.hpp"
#include "qrmt/moments.hpp"
#include "qrmt/sampler.hpp"
#include "qrmt/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qrmt;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Output {
    std::string csv_path = "-";       // "-" = stdout
    std::string manifest_path = "";   // "" = stderr

    void add_to(CLI::App* cmd) {
        cmd->add_option("--out", csv_path,
                        "CSV output file ('-' for stdout)");
        cmd->add_option("--manifest", manifest_path,
                        "JSON manifest file (default: stderr)");
    }
    void write_csv(const std::string& body) const {
        if (csv_path == "-") {
            std::cout << body;
        } else {
            std::ofstream f(csv_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + csv_path);
            f << body;
        }
    }
    void write_manifest(const json& m) const {
        const std::string text = m.dump(2) + "\n";
        if (manifest_path.empty()) {
            std::cerr << text;
        } else {
            std::ofstream f(manifest_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + manifest_path);
            f << text;
        }
    }
};

struct GridSpec {
    double lo = -2, hi = 2;
    int n = 21;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    char colon1, colon2;
    std::istringstream is(s);
    if (!(is >> g.lo >> colon1 >> g.hi >> colon2 >> g.n) || colon1 != ':' ||
        colon2 != ':' || g.n < 2 || !(g.hi > g.lo))
        throw CLI::ValidationError("--grid", "expected lo:hi:n with n >= 2");
    return g;
}

QParams params_from(int N, double q, double lambda, double c, double L) {
    const bool has_q = q > 0, has_lambda = lambda > 0, has_cl = c > 0;
    if (has_q + has_lambda + has_cl != 1)
        throw CLI::ValidationError(
            "parameters", "give exactly one of --q, --lambda, or --c/--L");
    if (has_q) return QParams::from_qN(N, q);
    if (has_lambda) return QParams::from_lambdaN(N, lambda);
    return QParams::from_cNL(N, c, L > 0 ? L : 2 * std::numbers::pi);
}

// ---------------------------------------------------------------- moments --
int cmd_moments(int N, double q, double lambda, int lmax,
                const std::string& route, const Output& out) {
    QParams p = params_from(N, q, lambda, 0, 0);
    std::vector<MomentRoute> routes;
    if (route == "all")
        routes = {MomentRoute::phi21, MomentRoute::hook, MomentRoute::det};
    else if (route == "phi21")
        routes = {MomentRoute::phi21};
    else if (route == "hook")
        routes = {MomentRoute::hook};
    else if (route == "det")
        routes = {MomentRoute::det};
    else
        throw CLI::ValidationError("--route", "must be all|phi21|hook|det");
    static const char* names[] = {"phi21", "hook", "det"};

    std::ostringstream csv;
    csv << "l,value_log,value_sign,route,cross_route_max_reldiff\n";
    for (int l = 1; l <= lmax; ++l) {
        std::vector<SignedLog> vals;
        for (MomentRoute r : routes)
            vals.push_back(power_sum_moment(l, p, r).value);
        double spread = 0;
        for (const auto& v : vals)
            spread = std::max(spread,
                              std::abs((v / vals.front()).to_double() - 1.0));
        csv << l << ',' << num(vals.front().logmag) << ','
            << vals.front().sign << ','
            << names[static_cast<int>(routes.front())] << ',' << num(spread)
            << "\n";
    }
    out.write_csv(csv.str());

    json m;
    m["command"] = "moments";
    m["N"] = N;
    m["q"] = p.q();
    m["c"] = p.c();
    m["L"] = p.L();
    m["lmax"] = lmax;
    m["route"] = route;
    m["note"] = "values are q^{N l} m_l as (sign, log magnitude)";
    out.write_manifest(m);
    return 0;
}

// ---------------------------------------------------------------- density --
int cmd_density(double lambda, int points, const Output& out) {
    if (points < 1) throw CLI::ValidationError("--points", "must be >= 1");
    const Support sup = support(lambda);
    std::ostringstream csv;
    csv << "x,rho\n";
    double mass = 0;
    const double w = sup.z_plus - sup.z_minus;
    for (int i = 0; i < points; ++i) {
        const double x = sup.z_minus + w * (i + 0.5) / points;
        const double r = rho(x, lambda);
        mass += r * w / points;
        csv << num(x) << ',' << num(r) << "\n";
    }
    out.write_csv(csv.str());
    json m;
    m["command"] = "density";
    m["lambda"] = lambda;
    m["points"] = points;
    m["support"] = {{"z_minus", sup.z_minus}, {"z_plus", sup.z_plus}};
    m["midpoint_riemann_mass"] = mass;
    out.write_manifest(m);
    return 0;
}

// ----------------------------------------------------------------- kernel --
int cmd_kernel(const std::string& kind, const std::string& grid_spec, int N,
               double q, double lambda, double c, double L,
               const std::string& route, int parity, const std::string& form,
               const Output& out) {
    const GridSpec g = parse_grid(grid_spec);
    QParams p = params_from(N, q, lambda, c, L);
    auto eval = [&](double x, double y) -> double {
        if (kind == "sw")
            return kernel_sw(x, y, p,
                             route == "cd" ? SwKernelRoute::cd
                                           : SwKernelRoute::sum);
        if (kind == "swe") return kernel_swe(x, y, p);
        if (kind == "bulk")
            return kernel_bulk(x, y, p,
                               form == "theta1" ? BulkForm::theta1
                                                : BulkForm::theta3,
                               parity);
        if (kind == "edge") return kernel_edge(x, y, p);
        if (kind == "airy-rescaled") return airy_rescaled_edge(x, y, p);
        throw CLI::ValidationError("--kind",
                                   "must be sw|swe|bulk|edge|airy-rescaled");
    };
    std::vector<double> ab(g.n);
    for (int i = 0; i < g.n; ++i)
        ab[i] = g.lo + (g.hi - g.lo) * i / (g.n - 1);
    if (kind == "sw")
        for (double a : ab)
            if (!(a > 0))
                throw CLI::ValidationError("--grid",
                                           "sw kernel needs u, v > 0");
    std::ostringstream csv;
    csv << "x\\y";
    for (double a : ab) csv << ',' << num(a);
    csv << "\n";
    for (double x : ab) {
        csv << num(x);
        for (double y : ab) csv << ',' << num(eval(x, y));
        csv << "\n";
    }
    out.write_csv(csv.str());
    json m;
    m["command"] = "kernel";
    m["kind"] = kind;
    m["grid"] = {{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}};
    m["N"] = p.N();
    m["q"] = p.q();
    m["c"] = p.c();
    m["L"] = p.L();
    if (kind == "sw") m["route"] = route;
    if (kind == "bulk") {
        m["form"] = form;
        m["parity"] = parity;
    }
    out.write_manifest(m);
    return 0;
}

// -------------------------------------------------------------------- gap --
int cmd_gap(double s_from, double s_to, double step, int nodes, int N,
            double q, double lambda, double c, double L, const Output& out) {
    if (!(step > 0) || !(s_to >= s_from))
        throw CLI::ValidationError("--step", "need s-to >= s-from, step > 0");
    QParams p = params_from(N, q, lambda, c, L);
    FredholmConfig cfg;
    cfg.nodes = nodes;
    std::ostringstream csv;
    csv << "s,gap,leftmost_pdf\n";
    for (double s = s_from; s <= s_to + 1e-12; s += step)
        csv << num(s) << ',' << num(gap_probability(s, p, cfg)) << ','
            << num(leftmost_pdf(s, p, cfg)) << "\n";
    out.write_csv(csv.str());
    json m;
    m["command"] = "gap";
    m["N"] = p.N();
    m["q"] = p.q();
    m["c"] = p.c();
    m["L"] = p.L();
    m["nodes"] = nodes;
    m["s_from"] = s_from;
    m["s_to"] = s_to;
    m["step"] = step;
    out.write_manifest(m);
    return 0;
}

// ------------------------------------------------------------------ gap2d --
int cmd_gap2d(double L, double s_from, double s_to, double step,
              const Output& out) {
    if (!(L > 0) || !(step > 0) || !(s_to >= s_from))
        throw CLI::ValidationError("gap2d",
                                   "need L > 0, s-to >= s-from, step > 0");
    std::ostringstream csv;
    csv << "s,gap2d\n";
    for (double s = s_from; s <= s_to + 1e-12; s += step)
        csv << num(s) << ',' << num(gap2d_product(s, L)) << "\n";
    out.write_csv(csv.str());
    const double fit_lo = std::max(s_from, 10.0);
    const double fit_hi = std::max(s_to, fit_lo + 5.0);
    const TailFit fit = right_tail_exponent(L, fit_lo, fit_hi);
    json m;
    m["command"] = "gap2d";
    m["L"] = L;
    m["s_from"] = s_from;
    m["s_to"] = s_to;
    m["step"] = step;
    m["fitted_tail_coeff"] = fit.coefficient;
    m["fitted_tail_residual"] = fit.residual;
    m["expected_tail_coeff"] = L / (24.0 * std::numbers::pi);
    m["fit_window"] = {fit_lo, fit_hi};
    out.write_manifest(m);
    return 0;
}

// ----------------------------------------------------------------- sample --
int cmd_sample(int N, double c, double L, long long steps, long long seed,
               int chains, const Output& out) {
    QParams p = QParams::from_cNL(N, c, L > 0 ? L : 2 * std::numbers::pi);
    SamplerOptions opt;
    opt.sweeps = steps;
    opt.seed = seed;
    opt.n_chains = chains;
    SampleStats st = run_chain(p, opt);
    std::ostringstream csv;
    csv << "bin_center,density,stderr\n";
    for (std::size_t i = 0; i < st.bin_centers.size(); ++i)
        csv << num(st.bin_centers[i]) << ',' << num(st.histogram[i]) << ','
            << num(st.histogram_err[i]) << "\n";
    out.write_csv(csv.str());
    json m;
    m["command"] = "sample";
    m["N"] = N;
    m["c"] = p.c();
    m["L"] = p.L();
    m["q"] = p.q();
    m["sweeps"] = steps;
    m["seed"] = seed;
    m["chains"] = chains;
    m["acceptance_rate"] = st.acceptance_rate;
    m["step_width"] = st.step_width;
    m["energy_audit_max_drift"] = st.energy_audit_max_drift;
    m["moments"] = st.moments;
    m["moments_stderr"] = st.moments_err;
    out.write_manifest(m);
    return 0;
}

// ----------------------------------------------------------------- verify --
int cmd_verify(const std::string& suite, const Output& out) {
    std::vector<verify::Check> checks;
    try {
        checks = verify::run_suite(suite);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--suite", e.what());
    }
    json rep;
    rep["command"] = "verify";
    rep["suite"] = suite;
    json arr = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["suite"] = c.suite;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        arr.push_back(jc);
    }
    rep["checks"] = arr;
    const bool ok = verify::all_pass(checks);
    rep["all_pass"] = ok;
    std::cout << rep.dump(2) << "\n";
    (void)out;
    return ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stieltjes-Wigert ensemble numerics"};
    app.require_subcommand(1);

    Output out;

    // moments
    int mo_N = 1, mo_lmax = 4;
    double mo_q = 0, mo_lambda = 0;
    std::string mo_route = "all";
    auto* mo = app.add_subcommand("moments", "exact finite-N power-sum moments");
    mo->add_option("--N", mo_N, "matrix dimension")->required();
    mo->add_option("--q", mo_q, "q in (0,1)");
    mo->add_option("--lambda", mo_lambda, "scaled regime q = e^{-lambda/N}");
    mo->add_option("--lmax", mo_lmax, "largest moment order")->required();
    mo->add_option("--route", mo_route, "all|phi21|hook|det");
    out.add_to(mo);

    // density
    double de_lambda = 1;
    int de_points = 100;
    auto* de = app.add_subcommand("density", "limiting spectral density");
    de->add_option("--lambda", de_lambda)->required();
    de->add_option("--points", de_points)->required();
    out.add_to(de);

    // kernel
    std::string ke_kind, ke_grid = "-2:2:21", ke_route = "sum",
                ke_form = "theta3";
    int ke_N = 1, ke_parity = 1;
    double ke_q = 0, ke_lambda = 0, ke_c = 0, ke_L = 0;
    auto* ke = app.add_subcommand("kernel", "correlation kernels on a grid");
    ke->add_option("--kind", ke_kind, "sw|swe|bulk|edge|airy-rescaled")
        ->required();
    ke->add_option("--grid", ke_grid, "lo:hi:n");
    ke->add_option("--N", ke_N);
    ke->add_option("--q", ke_q);
    ke->add_option("--lambda", ke_lambda);
    ke->add_option("--c", ke_c);
    ke->add_option("--L", ke_L);
    ke->add_option("--route", ke_route, "sw kernel route: sum|cd");
    ke->add_option("--parity", ke_parity, "bulk kernel parity: +1|-1");
    ke->add_option("--form", ke_form, "bulk kernel form: theta3|theta1");
    out.add_to(ke);

    // gap
    double ga_from = -2, ga_to = 2, ga_step = 0.5;
    int ga_nodes = 80, ga_N = 1;
    double ga_q = 0, ga_lambda = 0, ga_c = 0, ga_L = 0;
    auto* ga = app.add_subcommand("gap", "edge gap probability");
    ga->add_option("--s-from", ga_from)->required();
    ga->add_option("--s-to", ga_to)->required();
    ga->add_option("--step", ga_step)->required();
    ga->add_option("--nodes", ga_nodes);
    ga->add_option("--N", ga_N);
    ga->add_option("--q", ga_q);
    ga->add_option("--lambda", ga_lambda);
    ga->add_option("--c", ga_c);
    ga->add_option("--L", ga_L);
    out.add_to(ga);

    // gap2d
    double g2_L = 2, g2_from = 0, g2_to = 20, g2_step = 1;
    auto* g2 = app.add_subcommand("gap2d", "2D cylinder-gas gap");
    g2->add_option("--L", g2_L)->required();
    g2->add_option("--s-from", g2_from)->required();
    g2->add_option("--s-to", g2_to)->required();
    g2->add_option("--step", g2_step)->required();
    out.add_to(g2);

    // sample
    int sa_N = 4, sa_chains = 2;
    double sa_c = 1, sa_L = 0;
    long long sa_steps = 100000, sa_seed = 1;
    auto* sa = app.add_subcommand("sample", "Metropolis log-gas sampler");
    sa->add_option("--N", sa_N)->required();
    sa->add_option("--c", sa_c)->required();
    sa->add_option("--L", sa_L, "default 2 pi");
    sa->add_option("--steps", sa_steps, "measurement sweeps")->required();
    sa->add_option("--seed", sa_seed);
    sa->add_option("--chains", sa_chains);
    out.add_to(sa);

    // verify
    std::string ve_suite = "all";
    auto* ve = app.add_subcommand("verify", "run the invariant suite");
    ve->add_option("--suite", ve_suite,
                   "qcore|moments|density|kernels|gap|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (mo->parsed())
            return cmd_moments(mo_N, mo_q, mo_lambda, mo_lmax, mo_route, out);
        if (de->parsed()) return cmd_density(de_lambda, de_points, out);
        if (ke->parsed())
            return cmd_kernel(ke_kind, ke_grid, ke_N, ke_q, ke_lambda, ke_c,
                              ke_L, ke_route, ke_parity, ke_form, out);
        if (ga->parsed())
            return cmd_gap(ga_from, ga_to, ga_step, ga_nodes, ga_N, ga_q,
                           ga_lambda, ga_c, ga_L, out);
        if (g2->parsed())
            return cmd_gap2d(g2_L, g2_from, g2_to, g2_step, out);
        if (sa->parsed())
            return cmd_sample(sa_N, sa_c, sa_L, sa_steps, sa_seed, sa_chains,
                              out);
        if (ve->parsed()) return cmd_verify(ve_suite, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
