#include "cli_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"
#include "miacomp/analytic.hpp"
#include "miacomp/montecarlo.hpp"
#include "miacomp/specfun.hpp"

namespace miacomp::cli {

namespace an = miacomp::analytic;

namespace {

constexpr double kLn2 = 0.6931471805599453;

using nlohmann::ordered_json;

bool includes_analytic(const std::string& method) { return method != "mc"; }
bool includes_mc(const std::string& method) { return method == "mc" || method == "both"; }

mc::SimOptions sim_options(const RunConfig& cfg) {
    mc::SimOptions opts;
    opts.workers = resolved_workers(cfg);
    return opts;
}

ordered_json sidecar_base(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    j["scenario"] = cfg.scenario;
    j["method"] = cfg.method;
    j["params"] = {{"alpha", cfg.alpha}, {"lambda", cfg.lambda}, {"kbits", cfg.kbits}};
    j["spacing"] = cfg.spacing;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["workers"] = resolved_workers(cfg);
    j["quick"] = cfg.quick;
    j["out"] = cfg.out;
    j["emit_plot"] = cfg.emit_plot;
    return j;
}

void write_sidecar(const RunConfig& cfg, const ordered_json& grid, const ordered_json& results) {
    ordered_json j = sidecar_base(cfg);
    if (!grid.is_null()) j["grid"] = grid;
    if (!results.is_null()) j["results"] = results;
    const std::string path = cfg.out + ".json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << j.dump(2) << "\n";
}

ordered_json grid_json(const char* axis, double lo, double hi, int points,
                       const std::string& spacing) {
    return {{"axis", axis}, {"min", lo}, {"max", hi}, {"points", points}, {"spacing", spacing}};
}

// CSV goes to stdout when no --out was given; otherwise to the file plus a
// JSON sidecar and (for curve-like commands) the optional plot script.
void emit_output(const RunConfig& cfg, const std::vector<CsvRow>& rows, const ordered_json& grid,
                 const ordered_json& results, bool plottable) {
    if (cfg.out.empty()) {
        std::fputs((csv_header() + "\n").c_str(), stdout);
        for (const CsvRow& row : rows) std::fputs((csv_line(row, cfg) + "\n").c_str(), stdout);
        return;
    }
    write_csv(cfg.out, cfg, rows);
    write_sidecar(cfg, grid, results);
    if (cfg.emit_plot && plottable) write_plot_script(cfg.out);
}

const char* analytic_method_name(Scenario s) {
    return an::method_name(an::scenario_method(s));
}

}  // namespace

NetworkParams params_of(const RunConfig& cfg) {
    NetworkParams p{cfg.lambda, cfg.alpha, cfg.kbits};
    p.validate();
    return p;
}

void apply_command_defaults(RunConfig& cfg) {
    if (cfg.command == "curve") {
        if (cfg.method.empty()) cfg.method = "analytic";
        if (cfg.t_min == 0.0) cfg.t_min = 25.0;
        if (cfg.t_max == 0.0) cfg.t_max = 1500.0;
        if (cfg.t_points == 0) cfg.t_points = 60;
    } else if (cfg.command == "figure-success") {
        if (cfg.method.empty()) cfg.method = "both";
        if (cfg.n_min == 0.0) cfg.n_min = 25.0;
        if (cfg.n_max == 0.0) cfg.n_max = 1500.0;
        if (cfg.n_points == 0) cfg.n_points = 60;
    } else if (cfg.command == "figure-rate") {
        if (cfg.method.empty()) cfg.method = "both";
        if (cfg.n_min == 0.0) cfg.n_min = cfg.kbits / 20.0;
        if (cfg.n_max == 0.0) cfg.n_max = 20.0 * cfg.kbits;
        if (cfg.n_points == 0) cfg.n_points = 200;
    } else if (cfg.command == "diversity") {
        if (cfg.method.empty()) cfg.method = "analytic";
        if (cfg.n_points == 0) cfg.n_points = 12;
    } else if (cfg.command == "validate") {
        if (cfg.method.empty()) cfg.method = "mc";
    }
}

Scenario parse_scenario(const std::string& name) {
    if (name == "gu-nc") return kGuNc;
    if (name == "gu-mia") return kGuMia;
    if (name == "wu-nc") return kWuNc;
    if (name == "wu-mia") return kWuMia;
    throw std::domain_error("unknown scenario: " + name);
}

std::vector<Scenario> scenario_list(const std::string& name) {
    if (name == "all") return {kGuNc, kGuMia, kWuNc, kWuMia};
    return {parse_scenario(name)};
}

int resolved_workers(const RunConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<double> make_grid(double lo, double hi, int points, const std::string& spacing) {
    if (spacing == "log") return an::log_grid(lo, hi, points);
    if (spacing == "lin") return an::lin_grid(lo, hi, points);
    throw std::domain_error("unknown spacing: " + spacing);
}

std::string format_sig(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_header() {
    return "scenario,method,x,value,stderr,n_trials,alpha,lambda,kbits,seed";
}

std::string csv_line(const CsvRow& row, const RunConfig& cfg) {
    std::string line;
    line.reserve(128);
    line += row.scenario;
    line += ',';
    line += row.method;
    line += ',';
    line += format_sig(row.x);
    line += ',';
    line += format_sig(row.value);
    line += ',';
    if (row.has_stderr) line += format_sig(row.std_error);
    line += ',';
    line += std::to_string(row.n_trials);
    line += ',';
    line += format_sig(cfg.alpha);
    line += ',';
    line += format_sig(cfg.lambda);
    line += ',';
    line += format_sig(cfg.kbits);
    line += ',';
    line += std::to_string(cfg.seed);
    return line;
}

void write_csv(const std::string& path, const RunConfig& cfg, const std::vector<CsvRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << csv_header() << "\n";
    for (const CsvRow& row : rows) out << csv_line(row, cfg) << "\n";
}

void write_plot_script(const std::string& csv_path) {
    const std::size_t slash = csv_path.find_last_of('/');
    const std::string base = slash == std::string::npos ? csv_path : csv_path.substr(slash + 1);
    std::ofstream out(csv_path + ".plot.py");
    if (!out) throw std::runtime_error("cannot open " + csv_path + ".plot.py");
    out << "#!/usr/bin/env python3\n"
           "\"\"\"Plot the CSV produced alongside this script (pure consumer).\"\"\"\n"
           "import collections\n"
           "import csv\n"
           "import os\n"
           "\n"
           "import matplotlib\n"
           "matplotlib.use(\"Agg\")\n"
           "import matplotlib.pyplot as plt\n"
           "\n"
           "path = os.path.join(os.path.dirname(os.path.abspath(__file__)), \""
        << base
        << "\")\n"
           "series = collections.defaultdict(list)\n"
           "with open(path) as fh:\n"
           "    for row in csv.DictReader(fh):\n"
           "        key = (row[\"scenario\"], row[\"method\"])\n"
           "        series[key].append((float(row[\"x\"]), float(row[\"value\"])))\n"
           "\n"
           "fig, ax = plt.subplots(figsize=(7.2, 5.0))\n"
           "for (scenario, method), pts in sorted(series.items()):\n"
           "    pts.sort()\n"
           "    style = \"--\" if method == \"monte_carlo\" else \"-\"\n"
           "    ax.plot([p[0] for p in pts], [p[1] for p in pts], style,\n"
           "            label=f\"{scenario} ({method})\")\n"
           "ax.set_xscale(\"log\")\n"
           "ax.set_xlabel(\"x\")\n"
           "ax.set_ylabel(\"value\")\n"
           "ax.grid(True, alpha=0.3)\n"
           "ax.legend(fontsize=8)\n"
           "fig.tight_layout()\n"
           "fig.savefig(path + \".png\", dpi=150)\n"
           "print(\"wrote\", path + \".png\")\n";
}

int cmd_curve(const RunConfig& cfg0) {
    RunConfig cfg = cfg0;
    cfg.command = "curve";
    apply_command_defaults(cfg);
    const NetworkParams p = params_of(cfg);
    const std::vector<double> grid = make_grid(cfg.t_min, cfg.t_max, cfg.t_points, cfg.spacing);

    std::vector<CsvRow> rows;
    for (Scenario s : scenario_list(cfg.scenario)) {
        const std::string name = scenario_name(s);
        if (includes_analytic(cfg.method)) {
            const an::CurveFn fn = an::ccdf_fn(p, s);
            const char* method = analytic_method_name(s);
            for (double t : grid) rows.push_back({name, method, t, fn(t), false, 0.0, 0});
        }
        if (includes_mc(cfg.method)) {
            const mc::CcdfEstimate est =
                mc::estimate_ccdf(s, p, grid, cfg.trials, cfg.seed, sim_options(cfg));
            for (std::size_t j = 0; j < grid.size(); ++j)
                rows.push_back({name, "monte_carlo", grid[j], est.curve.values[j], true,
                                est.curve.std_error[j], cfg.trials});
        }
    }
    emit_output(cfg, rows, grid_json("t", cfg.t_min, cfg.t_max, cfg.t_points, cfg.spacing),
                ordered_json(), true);
    return 0;
}

int cmd_figure_success(const RunConfig& cfg0) {
    RunConfig cfg = cfg0;
    cfg.command = "figure-success";
    apply_command_defaults(cfg);
    const NetworkParams p = params_of(cfg);
    const std::vector<double> grid = make_grid(cfg.n_min, cfg.n_max, cfg.n_points, cfg.spacing);

    std::vector<CsvRow> rows;
    for (Scenario s : scenario_list(cfg.scenario)) {
        const std::string name = scenario_name(s);
        if (includes_analytic(cfg.method)) {
            const an::CurveFn fn = an::ccdf_fn(p, s);
            const char* method = analytic_method_name(s);
            for (double n : grid)
                rows.push_back({name, method, n, an::success_prob(fn, n), false, 0.0, 0});
        }
        if (includes_mc(cfg.method)) {
            const mc::CcdfEstimate est =
                mc::estimate_ccdf(s, p, grid, cfg.trials, cfg.seed, sim_options(cfg));
            for (std::size_t j = 0; j < grid.size(); ++j)
                rows.push_back({name, "monte_carlo", grid[j], 1.0 - est.curve.values[j], true,
                                est.curve.std_error[j], cfg.trials});
        }
    }
    emit_output(cfg, rows, grid_json("N", cfg.n_min, cfg.n_max, cfg.n_points, cfg.spacing),
                ordered_json(), true);
    return 0;
}

int cmd_figure_rate(const RunConfig& cfg0) {
    RunConfig cfg = cfg0;
    cfg.command = "figure-rate";
    apply_command_defaults(cfg);
    const NetworkParams p = params_of(cfg);
    const std::vector<double> grid = make_grid(cfg.n_min, cfg.n_max, cfg.n_points, cfg.spacing);

    std::vector<CsvRow> rows;
    ordered_json gains;
    std::string summary;
    char line[256];

    if (includes_analytic(cfg.method)) {
        for (Scenario s : scenario_list(cfg.scenario)) {
            const auto curve = an::rate_curve(an::ccdf_fn(p, s), p, grid);
            const char* method = analytic_method_name(s);
            for (const an::RatePoint& pt : curve)
                rows.push_back({scenario_name(s), method, pt.n_uses, pt.value, false, 0.0, 0});
        }
        for (UserClass uc : {UserClass::general, UserClass::worst_case}) {
            const char* label = uc == UserClass::general ? "general" : "worst-case";
            const an::RateGainResult g = an::rate_gain(p, uc, grid);
            if (g.mia.edge || g.nc.edge)
                std::fprintf(stderr, "warning: %s analytic rate maximum sits on the grid edge\n",
                             label);
            std::snprintf(line, sizeof(line),
                          "# g_r(%s) analytic %.6g  [R*_mia %.6g at N=%.6g, R*_nc %.6g at N=%.6g]\n",
                          label, g.gain, g.mia.r_max, g.mia.n_opt, g.nc.r_max, g.nc.n_opt);
            summary += line;
            gains[label]["analytic"] = {{"gain", g.gain},
                                        {"mia", {{"n_opt", g.mia.n_opt}, {"r_max", g.mia.r_max}}},
                                        {"nc", {{"n_opt", g.nc.n_opt}, {"r_max", g.nc.r_max}}}};
        }
    }
    if (includes_mc(cfg.method)) {
        std::vector<mc::McRateCurve> curves;
        std::vector<Scenario> scens = scenario_list(cfg.scenario);
        for (Scenario s : scens) {
            curves.push_back(mc::mc_rate_curve(s, p, grid, cfg.trials, cfg.seed, sim_options(cfg)));
            for (const an::RatePoint& pt : curves.back().points)
                rows.push_back(
                    {scenario_name(s), "monte_carlo", pt.n_uses, pt.value, false, 0.0, cfg.trials});
        }
        auto find = [&](Scenario s) -> const mc::McRateCurve* {
            for (std::size_t i = 0; i < scens.size(); ++i)
                if (scens[i] == s) return &curves[i];
            return nullptr;
        };
        const struct {
            const char* label;
            Scenario nc, mia;
        } pairs[2] = {{"general", kGuNc, kGuMia}, {"worst-case", kWuNc, kWuMia}};
        for (const auto& pr : pairs) {
            const mc::McRateCurve* nc = find(pr.nc);
            const mc::McRateCurve* mia = find(pr.mia);
            if (!nc || !mia) continue;
            const double gain = mia->r_max / nc->r_max;
            std::snprintf(line, sizeof(line),
                          "# g_r(%s) mc %.6g  [R*_mia %.6g at N=%.6g, R*_nc %.6g at N=%.6g]\n",
                          pr.label, gain, mia->r_max, mia->n_opt, nc->r_max, nc->n_opt);
            summary += line;
            gains[pr.label]["mc"] = {{"gain", gain},
                                     {"mia", {{"n_opt", mia->n_opt}, {"r_max", mia->r_max}}},
                                     {"nc", {{"n_opt", nc->n_opt}, {"r_max", nc->r_max}}},
                                     {"trials", cfg.trials}};
        }
    }

    emit_output(cfg, rows, grid_json("N", cfg.n_min, cfg.n_max, cfg.n_points, cfg.spacing), gains,
                true);
    std::fputs(summary.c_str(), stdout);
    return 0;
}

int cmd_diversity(const RunConfig& cfg0) {
    RunConfig cfg = cfg0;
    cfg.command = "diversity";
    apply_command_defaults(cfg);
    const NetworkParams p = params_of(cfg);

    std::vector<CsvRow> rows;
    ordered_json slopes;
    std::string summary;
    char line[192];
    for (Scenario s : scenario_list(cfg.scenario)) {
        std::pair<double, double> window;
        if (cfg.n_min > 0.0 && cfg.n_max > 0.0)
            window = {cfg.n_min, cfg.n_max};
        else
            window = an::diversity_window(p, s);
        const std::vector<double> grid = an::log_grid(window.first, window.second, cfg.n_points);
        const an::CurveFn fn = an::ccdf_fn(p, s);
        std::vector<double> ps(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double outage = fn(grid[i]);
            ps[i] = 1.0 - outage;
            rows.push_back(
                {scenario_name(s), analytic_method_name(s), grid[i], outage, false, 0.0, 0});
        }
        const double slope = an::diversity_estimate(grid, ps);
        std::snprintf(line, sizeof(line), "# g_d(%s) = %.4f over N in [%.6g, %.6g]\n",
                      scenario_name(s).c_str(), slope, window.first, window.second);
        summary += line;
        slopes[scenario_name(s)] = {
            {"g_d", slope}, {"n_min", window.first}, {"n_max", window.second}};
    }
    emit_output(cfg, rows, ordered_json(), slopes, true);
    std::fputs(summary.c_str(), stdout);
    return 0;
}

// ---------------------------------------------------------------------------
// validation property suite
// ---------------------------------------------------------------------------

namespace {

struct SuiteCtx {
    NetworkParams p;
    double band = 3.0;  // SE multiplier on statistical checks
    long trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::vector<PropertyResult> results;

    void add(std::string name, std::string method, bool pass, double statistic, std::string detail,
             long n = 0, double se = -1.0) {
        PropertyResult r;
        r.name = std::move(name);
        r.method = std::move(method);
        r.pass = pass;
        r.statistic = statistic;
        r.n_trials = n;
        if (se >= 0.0) {
            r.has_se = true;
            r.std_error = se;
        }
        r.detail = std::move(detail);
        results.push_back(std::move(r));
    }

    std::uint64_t prop_seed(std::uint64_t k) const { return mc::derive_seed(seed, 0xC11, k); }
    mc::SimOptions opts() const {
        mc::SimOptions o;
        o.workers = workers;
        return o;
    }
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

// Discretized Stieltjes convolution of two i.i.d. G-distributed variables:
// the straightforward oracle the adaptive convolution must agree with.
double conv_cdf_oracle(double delta, double gamma, int cells) {
    double acc = 0.0;
    double g_prev = 1.0;
    for (int j = 0; j < cells; ++j) {
        const double y1 = gamma * (j + 1) / cells;
        const double mid = gamma * (j + 0.5) / cells;
        const double g_next = an::g_ccdf(delta, y1);
        acc += (g_prev - g_next) * (1.0 - an::g_ccdf(delta, gamma - mid));
        g_prev = g_next;
    }
    return acc;
}

// sup_x sqrt(n)*|ecdf - cdf| against a continuous CDF
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double c = cdf(samples[i]);
        d = std::max(d, std::abs(c - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - c));
    }
    return d * std::sqrt(n);
}

std::vector<double> ranks_of(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<double>(k + 1);
    return r;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    const std::vector<double> ra = ranks_of(a);
    const std::vector<double> rb = ranks_of(b);
    const double n = static_cast<double>(a.size());
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
    return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

void specfun_properties(SuiteCtx& ctx) {
    const double lo_d = 0.02, hi_d = 0.98;

    {  // identity 1 + H = F on random (delta, nu)
        mc::StreamRng rng(ctx.prop_seed(1));
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double delta = lo_d + (hi_d - lo_d) * rng.uniform01();
            const double nu = std::pow(10.0, -3.0 + 9.0 * rng.uniform01());
            const double f = specfun::hyp_f(delta, nu);
            worst = std::max(worst, std::abs((1.0 + specfun::hyp_h(delta, nu) - f) / f));
        }
        ctx.add("specfun.identity", "exact", worst <= 1e-10, worst,
                fmt("max rel residual %.3g (tol 1e-10)", worst));
    }
    {  // delta = 1/2 closed forms for F, H, F'
        double worst = 0.0;
        for (double nu : an::log_grid(1e-4, 1e6, 60)) {
            const double rt = std::sqrt(nu);
            const double f_ref = 1.0 + rt * std::atan(rt);
            const double fp_ref = 0.5 * std::atan(rt) / rt + 0.5 / (1.0 + nu);
            worst = std::max(worst, std::abs(specfun::hyp_f(0.5, nu) - f_ref) / f_ref);
            worst = std::max(worst, std::abs(specfun::hyp_h(0.5, nu) - (f_ref - 1.0)) / f_ref);
            worst = std::max(worst, std::abs(specfun::hyp_f_deriv(0.5, nu) - fp_ref) / fp_ref);
        }
        ctx.add("specfun.closed_form_half", "exact", worst <= 1e-10, worst,
                fmt("max rel error %.3g vs sqrt/atan forms (tol 1e-10)", worst));
    }
    {  // derivative vs central finite differences
        double worst = 0.0;
        for (double delta : {0.15, 0.5, 2.0 / 3.0, 0.9}) {
            for (double nu : an::log_grid(1e-2, 1e4, 10)) {
                const double h = 1e-6 * (1.0 + nu);
                const double fd =
                    (specfun::hyp_f(delta, nu + h) - specfun::hyp_f(delta, nu - h)) / (2.0 * h);
                const double dv = specfun::hyp_f_deriv(delta, nu);
                worst = std::max(worst, std::abs(fd - dv) / dv);
            }
        }
        ctx.add("specfun.derivative_fd", "exact", worst <= 1e-5, worst,
                fmt("max rel gap %.3g vs central differences (tol 1e-5)", worst));
    }
    {  // small-argument CDF asymptote, Taylor regime
        const double delta = ctx.p.delta();
        const double y = 1e-4;
        const double h = specfun::hyp_h(delta, y);
        const double ratio = (h / (1.0 + h)) / (y * delta / (1.0 - delta));
        const bool pass = ratio > 0.99 && ratio < 1.01;
        ctx.add("specfun.small_arg", "exact", pass, ratio,
                fmt("(1-G(1e-4))/linear term = %.6f (band 1%%)", ratio));
    }
    {  // series/tail-branch consistency across the crossover near nu = 999
        double worst = 0.0;
        for (double delta : {0.15, 0.5, 2.0 / 3.0, 0.9}) {
            const double lo = 998.9, hi = 1001.0, mid = 0.5 * (lo + hi);
            const double pred = specfun::hyp_f_deriv(delta, mid) * (hi - lo);
            const double jump = specfun::hyp_f(delta, hi) - specfun::hyp_f(delta, lo);
            worst = std::max(worst, std::abs(jump - pred) / specfun::hyp_f(delta, mid));
            const double hjump = specfun::hyp_h(delta, hi) - specfun::hyp_h(delta, lo);
            worst = std::max(worst, std::abs(hjump - pred) / specfun::hyp_f(delta, mid));
        }
        ctx.add("specfun.seam_continuity", "exact", worst <= 1e-6, worst,
                fmt("max branch mismatch %.3g across nu=999 (tol 1e-6)", worst));
    }
    {  // domain rejection
        int thrown = 0;
        const auto expect_throw = [&](double delta, double nu) {
            try {
                specfun::hyp_f(delta, nu);
            } catch (const std::domain_error&) {
                ++thrown;
            }
        };
        expect_throw(0.005, 1.0);
        expect_throw(0.995, 1.0);
        expect_throw(0.5, -0.1);
        expect_throw(0.5, std::nan(""));
        ctx.add("specfun.domain_errors", "exact", thrown == 4, thrown,
                fmt("%.0f of 4 invalid inputs rejected", thrown));
    }
}

void analytic_properties(SuiteCtx& ctx) {
    const NetworkParams& p = ctx.p;
    const double delta = p.delta();
    const Scenario all[4] = {kGuNc, kGuMia, kWuNc, kWuMia};

    {  // CCDF range and monotonicity, 100-point grid
        bool pass = true;
        double worst = 0.0;
        for (Scenario s : all) {
            double prev = 1.0;
            for (double t : an::log_grid(1.0, 1e5, 100)) {
                const double v = an::ccdf(p, s, t);
                if (v < 0.0 || v > 1.0) pass = false;
                if (v > prev + 1e-12) pass = false;
                worst = std::max(worst, v - prev);
                prev = v;
            }
        }
        ctx.add("analytic.ccdf_shape", "exact", pass, worst,
                fmt("max increase %.3g over 100-point grids, all scenarios", worst));
    }
    {  // lambda invariance of all four analytic CCDFs
        double worst = 0.0;
        for (Scenario s : all) {
            for (double t : an::log_grid(10.0, 2e4, 8)) {
                const double base = an::ccdf(NetworkParams{1.0, p.alpha, p.kbits}, s, t);
                for (double lam : {0.25, 4.0}) {
                    const double v = an::ccdf(NetworkParams{lam, p.alpha, p.kbits}, s, t);
                    worst = std::max(worst, std::abs(v - base));
                }
            }
        }
        ctx.add("analytic.lambda_invariance", "exact", worst <= 1e-9, worst,
                fmt("max |change| %.3g across lambda in {0.25,1,4} (tol 1e-9)", worst));
    }
    {  // AM-GM ordering behind the Thm. 1 bound
        mc::StreamRng rng(ctx.prop_seed(2));
        double worst = -1.0;
        for (int i = 0; i < 10000; ++i) {
            const double y1 = rng.exponential(1.0) * std::pow(10.0, -2.0 + 4.0 * rng.uniform01());
            const double y2 = rng.exponential(1.0) * std::pow(10.0, -2.0 + 4.0 * rng.uniform01());
            const double lhs = std::log2(1.0 + y1) + std::log2(1.0 + y2);
            const double rhs = 2.0 * std::log2(1.0 + 0.5 * (y1 + y2));
            worst = std::max(worst, lhs - rhs);
        }
        ctx.add("analytic.amgm", "exact", worst <= 1e-12, worst,
                fmt("max(lhs-rhs) %.3g over 1e4 random pairs", worst));
    }
    {  // MIA success dominates NC success per user class (bound direction)
        bool pass = true;
        double worst = 0.0;
        for (double n : an::log_grid(25.0, 1500.0, 30)) {
            const double d1 = an::ccdf(p, kGuNc, n) - an::ccdf(p, kGuMia, n);
            const double d2 = an::ccdf(p, kWuNc, n) - an::ccdf(p, kWuMia, n);
            worst = std::min(d1, d2) < worst ? std::min(d1, d2) : worst;
            if (d1 < -1e-12 || d2 < -1e-12) pass = false;
        }
        ctx.add("analytic.mia_dominates_nc", "lower_bound", pass, worst,
                fmt("min(A_nc - A_mia) = %.3g (must be >= 0)", worst));
    }
    {  // worst-case user strictly worse than general user (NC exact forms)
        bool pass = true;
        double worst = 1.0;
        for (double t : an::log_grid(1.0, 1e5, 100)) {
            const double d = an::wu_nc_ccdf(p, t) - an::gu_nc_ccdf(p, t);
            worst = std::min(worst, d);
            if (d < -1e-12) pass = false;
        }
        ctx.add("analytic.wu_dominates_gu", "exact", pass, worst,
                fmt("min(A_wu - A_gu) = %.3g (must be >= 0)", worst));
    }
    {  // adaptive convolution vs discretized Stieltjes oracle at t = K
        const double gamma = 2.0 * std::expm1(p.kbits * kLn2 / (2.0 * 75.0));
        const double ours = an::gu_mia_ccdf_bound(p, 75.0);
        const double oracle = conv_cdf_oracle(delta, gamma, 4000);
        const double rel = std::abs(ours - oracle) / oracle;
        ctx.add("analytic.convolution_oracle", "lower_bound", rel <= 1e-6, rel,
                fmt("rel gap %.3g vs 4000-cell Stieltjes sum (tol 1e-6)", rel));
    }
    {  // quadratic small-y asymptote of the convolution CDF
        const double y = 1e-2;
        const double ratio =
            conv_cdf_oracle(delta, y, 4000) /
            (0.5 * std::pow(delta / (1.0 - delta), 2.0) * y * y);
        const bool pass = ratio > 0.97 && ratio < 1.03;
        ctx.add("analytic.conv_asymptote", "exact", pass, ratio,
                fmt("conv CDF / quadratic term = %.5f at y=1e-2 (band 3%%)", ratio));
    }
    const auto ratio_prop = [&](const char* name, Scenario s, double n, double lo, double hi) {
        const double ratio = an::ccdf(p, s, n) / an::outage_asymptote(p, s, n);
        const bool pass = ratio > lo && ratio < hi;
        ctx.add(name, analytic_method_name(s), pass, ratio,
                fmt("outage/asymptote = %.5f at N=%.3g", ratio, n));
    };
    ratio_prop("analytic.asymptote_gu_nc", kGuNc, 1e5, 0.98, 1.02);
    ratio_prop("analytic.asymptote_wu_nc", kWuNc, 1e5, 0.98, 1.02);
    ratio_prop("analytic.asymptote_gu_mia", kGuMia, 1e4, 0.95, 1.05);
    {  // WU-MIA asymptote is density-free
        const double a = an::outage_asymptote(NetworkParams{0.5, p.alpha, p.kbits}, kWuMia, 1e4);
        const double b = an::outage_asymptote(NetworkParams{2.0, p.alpha, p.kbits}, kWuMia, 1e4);
        const double rel = std::abs(a / b - 1.0);
        ctx.add("analytic.asymptote_wu_mia_lambda", "exact", rel <= 1e-12, rel,
                fmt("rel change %.3g across lambda in {0.5,2}", rel));
    }
    {  // pinned arithmetic of the GU-NC asymptote formula
        const double v = an::outage_asymptote(NetworkParams{1.0, 3.0, 75.0}, kGuNc, 1e4);
        const double rel = std::abs(v / (2.0 * 75.0 * kLn2 / 1e4) - 1.0);
        ctx.add("analytic.asymptote_example", "exact", rel <= 1e-12, rel,
                fmt("rel error %.3g vs 2K ln2/N at alpha=3", rel));
    }
    const auto diversity_prop = [&](const char* name, Scenario s, double target, double tol) {
        const auto window = an::diversity_window(p, s);
        const std::vector<double> grid = an::log_grid(window.first, window.second, 12);
        const an::CurveFn fn = an::ccdf_fn(p, s);
        std::vector<double> ps(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) ps[i] = 1.0 - fn(grid[i]);
        const double slope = an::diversity_estimate(grid, ps);
        const bool pass = std::abs(slope - target) <= tol;
        ctx.add(name, analytic_method_name(s), pass, slope,
                fmt("g_d = %.4f (target %.0f +- %.2f)", slope, target, tol));
    };
    diversity_prop("analytic.diversity_gu_nc", kGuNc, 1.0, 0.05);
    diversity_prop("analytic.diversity_gu_mia", kGuMia, 2.0, 0.15);
    diversity_prop("analytic.diversity_wu_nc", kWuNc, 1.0, 0.05);
    diversity_prop("analytic.diversity_wu_mia", kWuMia, 2.0, 0.15);
    {  // max rate is invariant to K with the grid scaled along
        const NetworkParams p2{p.lambda, p.alpha, 2.0 * p.kbits};
        const an::RateMax m1 =
            an::max_rate(an::ccdf_fn(p, kGuNc), p, an::log_grid(p.kbits / 20.0, 20.0 * p.kbits, 120));
        const an::RateMax m2 = an::max_rate(an::ccdf_fn(p2, kGuNc), p2,
                                            an::log_grid(p2.kbits / 20.0, 20.0 * p2.kbits, 120));
        const double rel = std::abs(m1.r_max / m2.r_max - 1.0);
        ctx.add("analytic.rate_k_scaling", "exact", rel <= 1e-6, rel,
                fmt("max-rate rel change %.3g when K doubles (tol 1e-6)", rel));
    }
    {  // incremental rate sweep equals the direct quadrature definition
        const an::CurveFn fn = an::ccdf_fn(p, kGuNc);
        const std::vector<double> grid = an::log_grid(p.kbits / 20.0, 20.0 * p.kbits, 40);
        const auto curve = an::rate_curve(fn, p, grid);
        double worst = 0.0;
        for (std::size_t i : {std::size_t{5}, std::size_t{15}, std::size_t{25}, std::size_t{35}}) {
            const double direct = an::rate(fn, p, grid[i]);
            worst = std::max(worst, std::abs(curve[i].value / direct - 1.0));
        }
        ctx.add("analytic.rate_curve_consistency", "exact", worst <= 1e-7, worst,
                fmt("max rel gap %.3g sweep vs direct (tol 1e-7)", worst));
    }
    {  // A == 1 forever means zero successes and zero rate
        const an::CurveFn ones = [](double) { return 1.0; };
        const double r = an::rate(ones, p, 100.0);
        const double ps = an::success_prob(ones, 100.0);
        ctx.add("analytic.rate_trivial", "exact", r == 0.0 && ps == 0.0, r,
                fmt("rate %.3g, p_s %.3g for the all-ones CCDF", r, ps));
    }
}

void montecarlo_properties(SuiteCtx& ctx) {
    const NetworkParams& p = ctx.p;
    const double delta = p.delta();
    const double band = ctx.band;
    const long tr = ctx.trials;
    const long half = std::max<long>(tr / 2, 200);
    const long quarter = std::max<long>(tr / 4, 200);
    const mc::SimOptions opts = ctx.opts();

    {  // PPP count on a fixed annulus
        const long n = std::min<long>(tr, 20000);
        mc::StreamRng rng(ctx.prop_seed(10));
        long total = 0;
        for (long i = 0; i < n; ++i)
            total += static_cast<long>(mc::sample_annulus_ppp(p.lambda, 0.5, 5.0, rng).points.size());
        const double mean = M_PI * p.lambda * (25.0 - 0.25);
        const double z = (static_cast<double>(total) - static_cast<double>(n) * mean) /
                         std::sqrt(static_cast<double>(n) * mean);
        ctx.add("mc.ppp_count", "monte_carlo", std::abs(z) <= band, z,
                fmt("count z = %.2f (band %.0f)", z, band), n, std::sqrt(mean / static_cast<double>(n)));
    }
    {  // squared-distance gaps are exponential
        const long want = std::min<long>(tr, 20000);
        mc::StreamRng rng(ctx.prop_seed(11));
        std::vector<double> gaps;
        gaps.reserve(static_cast<std::size_t>(want));
        while (static_cast<long>(gaps.size()) < want) {
            const mc::PointPattern pat = mc::sample_annulus_ppp(p.lambda, 0.0, 3.0, rng);
            double prev = 0.0;
            for (std::size_t k = 0; k + 1 < pat.points.size(); ++k) {
                const double q = pat.points[k].dist * pat.points[k].dist;
                gaps.push_back(q - prev);
                prev = q;
                if (static_cast<long>(gaps.size()) == want) break;
            }
        }
        // Pooled uncensored gaps in a finite window [0, w] are length biased:
        // a gap of size x is observed 1 + rate*(w - x) times in expectation,
        // which integrates to F(x) = 1 - exp(-rate*x)*(1 - x/w).
        const double rate = M_PI * p.lambda;
        const double window = 9.0;
        const double ks = ks_statistic(gaps, [rate, window](double x) {
            return 1.0 - std::exp(-rate * x) * (1.0 - x / window);
        });
        ctx.add("mc.ppp_spacing_ks", "monte_carlo", ks <= 1.95, ks,
                fmt("KS sqrt(n)D = %.3f (crit 1.95)", ks), want);
    }
    {  // vertex-distance sampler against Gamma(2,1) in s = pi*lambda*D^2
        const long n = std::min<long>(tr, 100000);
        mc::StreamRng rng(ctx.prop_seed(12));
        std::vector<double> s(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            const double d = mc::sample_vertex_distance(p, rng);
            s[static_cast<std::size_t>(i)] = M_PI * p.lambda * d * d;
        }
        const double ks = ks_statistic(std::move(s), [](double x) {
            return 1.0 - std::exp(-x) * (1.0 + x);
        });
        ctx.add("mc.vertex_distance_ks", "monte_carlo", ks <= 1.63, ks,
                fmt("KS sqrt(n)D = %.3f (crit 1.63 at 1%%)", ks), n);
    }
    {  // nearest-BS coverage at threshold 1 vs G
        mc::StreamRng rng(ctx.prop_seed(13));
        long hit = 0;
        for (long i = 0; i < tr; ++i)
            hit += mc::gu_nc_trial(p, rng, opts).sirs[0] > 1.0 ? 1 : 0;
        const double target = an::g_ccdf(delta, 1.0);
        const double se = mc::proportion_std_error(hit, tr);
        const double z = (static_cast<double>(hit) / static_cast<double>(tr) - target) / se;
        ctx.add("mc.gu_nc_coverage", "monte_carlo", std::abs(z) <= band, z,
                fmt("P(SIR>1) z = %.2f vs G(1) (band %.0f)", z, band), tr, se);
    }
    {  // alpha = 4 closed form 1/(1 + atan(1))... G(1) = 1/(1 + pi/4)
        const NetworkParams p4{p.lambda, 4.0, p.kbits};
        mc::StreamRng rng(ctx.prop_seed(14));
        long hit = 0;
        for (long i = 0; i < half; ++i)
            hit += mc::gu_nc_trial(p4, rng, opts).sirs[0] > 1.0 ? 1 : 0;
        const double target = 1.0 / (1.0 + M_PI / 4.0);
        const double se = mc::proportion_std_error(hit, half);
        const double z = (static_cast<double>(hit) / static_cast<double>(half) - target) / se;
        ctx.add("mc.gu_nc_alpha4", "monte_carlo", std::abs(z) <= band, z,
                fmt("P(SIR>1) z = %.2f vs 1/(1+pi/4) (band %.0f)", z, band), half, se);
    }
    {  // per-codeword marginals and independence under MIA
        mc::StreamRng rng(ctx.prop_seed(15));
        std::vector<double> s1(static_cast<std::size_t>(half)), s2(static_cast<std::size_t>(half));
        long hit1 = 0, hit2 = 0;
        for (long i = 0; i < half; ++i) {
            const mc::TrialOutcome o = mc::gu_mia_trial(p, rng, opts);
            s1[static_cast<std::size_t>(i)] = o.sirs[0];
            s2[static_cast<std::size_t>(i)] = o.sirs[1];
            hit1 += o.sirs[0] > 1.0 ? 1 : 0;
            hit2 += o.sirs[1] > 1.0 ? 1 : 0;
        }
        const double target = an::g_ccdf(delta, 1.0);  // intensity-free marginal law
        const double se1 = mc::proportion_std_error(hit1, half);
        const double se2 = mc::proportion_std_error(hit2, half);
        const double z1 = (static_cast<double>(hit1) / static_cast<double>(half) - target) / se1;
        const double z2 = (static_cast<double>(hit2) / static_cast<double>(half) - target) / se2;
        const double worst = std::max(std::abs(z1), std::abs(z2));
        ctx.add("mc.gu_mia_marginals", "monte_carlo", worst <= band, worst,
                fmt("marginal z = %.2f / %.2f vs G(1) (band %.0f)", z1, z2, band), half, se1);
        const double rho = spearman(s1, s2);
        const double zr = rho * std::sqrt(static_cast<double>(half) - 1.0);
        ctx.add("mc.gu_mia_independence", "monte_carlo", std::abs(zr) <= band, zr,
                fmt("Spearman z = %.2f between codeword SIRs (band %.0f)", zr, band), half);
    }
    const auto bound_prop = [&](const char* name, Scenario s) {
        const std::vector<double> grid = an::log_grid(50.0, 1200.0, 12);
        const mc::CcdfEstimate est = mc::estimate_ccdf(s, p, grid, tr, ctx.prop_seed(16), opts);
        bool pass = true;
        double max_gap = 0.0, worst_dir = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double ps_sim = 1.0 - est.curve.values[j];
            const double ps_bound = 1.0 - an::ccdf(p, s, grid[j]);
            const double se = est.curve.std_error[j];
            const double overshoot = ps_sim - ps_bound;  // must be <= noise
            worst_dir = std::max(worst_dir, overshoot / se);
            if (overshoot > band * se) pass = false;
            const double gap = ps_bound - ps_sim;
            max_gap = std::max(max_gap, gap);
            if (gap > 0.05 + band * se) pass = false;
        }
        ctx.add(name, "monte_carlo", pass, max_gap,
                fmt("max bound gap %.4f (cap 0.05), worst overshoot %.2f SE", max_gap, worst_dir),
                tr);
    };
    bound_prop("mc.gu_mia_bound", kGuMia);
    bound_prop("mc.wu_mia_bound", kWuMia);
    {  // exact WU-NC curve against simulation
        const std::vector<double> grid = an::log_grid(50.0, 1200.0, 12);
        const mc::CcdfEstimate est = mc::estimate_ccdf(kWuNc, p, grid, tr, ctx.prop_seed(17), opts);
        double worst = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double z =
                (est.curve.values[j] - an::wu_nc_ccdf(p, grid[j])) / est.curve.std_error[j];
            worst = std::max(worst, std::abs(z));
        }
        ctx.add("mc.wu_nc_exact", "monte_carlo", worst <= band, worst,
                fmt("max |z| = %.2f over 12 deadlines (band %.0f)", worst, band), tr);
    }
    {  // conditional codeword CCDFs at pinned vertex distance
        const double r = 0.6;
        const double base = M_PI * 0.5 * p.lambda * r * r;
        mc::StreamRng rng(ctx.prop_seed(18));
        std::vector<double> y1(static_cast<std::size_t>(half)), y2(static_cast<std::size_t>(half));
        for (long i = 0; i < half; ++i) {
            const mc::TrialOutcome o = mc::wu_mia_trial_at(p, r, rng, opts);
            y1[static_cast<std::size_t>(i)] = o.sirs[0];
            y2[static_cast<std::size_t>(i)] = o.sirs[1];
        }
        double worst = 0.0;
        for (double y : {0.5, 1.0, 2.0}) {
            const double g_tilde = std::exp(-base * specfun::hyp_h(delta, y));
            long h1 = 0, h2 = 0;
            for (long i = 0; i < half; ++i) {
                h1 += y1[static_cast<std::size_t>(i)] > y ? 1 : 0;
                h2 += y2[static_cast<std::size_t>(i)] > y ? 1 : 0;
            }
            const double z1 = (static_cast<double>(h1) / static_cast<double>(half) -
                               g_tilde / (1.0 + y)) /
                              mc::proportion_std_error(h1, half);
            const double z2 = (static_cast<double>(h2) / static_cast<double>(half) - g_tilde) /
                              mc::proportion_std_error(h2, half);
            worst = std::max({worst, std::abs(z1), std::abs(z2)});
        }
        ctx.add("mc.wu_cond_oracles", "monte_carlo", worst <= band, worst,
                fmt("max |z| = %.2f for Y1/Y2 conditional laws (band %.0f)", worst, band), half);
    }
    {  // with no co-located interferers the conditional law degenerates
        const double r = 0.6;
        mc::StreamRng rng(ctx.prop_seed(19));
        long hit = 0;
        for (long i = 0; i < half; ++i)
            hit += mc::wu_nc_trial_at(p, r, 0, rng, opts).sirs[0] > 1.0 ? 1 : 0;
        const double target = std::exp(-M_PI * p.lambda * r * r * specfun::hyp_h(delta, 1.0));
        const double se = mc::proportion_std_error(hit, half);
        const double z = (static_cast<double>(hit) / static_cast<double>(half) - target) / se;
        ctx.add("mc.degeneration", "monte_carlo", std::abs(z) <= band, z,
                fmt("conditional P(SIR>1) z = %.2f (band %.0f)", z, band), half, se);
    }
    {  // worker count must not change a single output bit
        const long n = std::min<long>(tr, 10000);
        const std::vector<double> grid = an::log_grid(50.0, 800.0, 6);
        mc::SimOptions o1 = opts, o3 = opts;
        o1.workers = 1;
        o3.workers = 3;
        const mc::CcdfEstimate a = mc::estimate_ccdf(kGuNc, p, grid, n, ctx.prop_seed(20), o1);
        const mc::CcdfEstimate b = mc::estimate_ccdf(kGuNc, p, grid, n, ctx.prop_seed(20), o3);
        const mc::PsRateEstimate ra = mc::estimate_ps_rate(kWuMia, p, 150.0, n, ctx.prop_seed(21), o1);
        const mc::PsRateEstimate rb = mc::estimate_ps_rate(kWuMia, p, 150.0, n, ctx.prop_seed(21), o3);
        bool same = a.curve.values == b.curve.values && a.curve.std_error == b.curve.std_error;
        same = same && ra.ps.mean == rb.ps.mean && ra.rate.mean == rb.rate.mean &&
               ra.rate.std_error == rb.rate.std_error;
        ctx.add("mc.determinism_workers", "monte_carlo", same, same ? 1.0 : 0.0,
                "1-worker and 3-worker runs compared bitwise", n);
    }
    {  // doubling the truncation radius must not move estimates
        mc::SimOptions wide = opts;
        wide.truncation_scale = 2.0;
        mc::StreamRng r1(ctx.prop_seed(22));
        mc::StreamRng r2(ctx.prop_seed(23));
        long h1 = 0, h2 = 0;
        for (long i = 0; i < quarter; ++i) {
            h1 += mc::gu_nc_trial(p, r1, opts).sirs[0] > 1.0 ? 1 : 0;
            h2 += mc::gu_nc_trial(p, r2, wide).sirs[0] > 1.0 ? 1 : 0;
        }
        const double se = std::sqrt(std::pow(mc::proportion_std_error(h1, quarter), 2.0) +
                                    std::pow(mc::proportion_std_error(h2, quarter), 2.0));
        const double z =
            (static_cast<double>(h1) - static_cast<double>(h2)) / static_cast<double>(quarter) / se;
        ctx.add("mc.truncation_2x", "monte_carlo", std::abs(z) <= band, z,
                fmt("coverage shift z = %.2f at 2x radius (band %.0f)", z, band), quarter, se);
    }
    {  // E[T] and R_N from simulation vs the exact quadrature route
        const double n_uses = 400.0;
        const an::CurveFn fn = an::ccdf_fn(p, kGuNc);
        mc::StreamRng rng(ctx.prop_seed(24));
        double sum_m = 0.0, sum_m2 = 0.0;
        for (long i = 0; i < half; ++i) {
            const double m = mc::gu_nc_trial(p, rng, opts).truncated_time(n_uses);
            sum_m += m;
            sum_m2 += m * m;
        }
        const double nn = static_cast<double>(half);
        const double mean_m = sum_m / nn;
        const double se_m = std::sqrt((sum_m2 / nn - mean_m * mean_m) / (nn - 1.0));
        const double z_et = (mean_m - an::expected_time(fn, n_uses)) / se_m;
        const mc::PsRateEstimate est =
            mc::estimate_ps_rate(kGuNc, p, n_uses, half, ctx.prop_seed(24), opts);
        const double z_rate = (est.rate.mean - an::rate(fn, p, n_uses)) / est.rate.std_error;
        const double worst = std::max(std::abs(z_rate), std::abs(z_et));
        ctx.add("mc.rate_and_et", "monte_carlo", worst <= band, worst,
                fmt("rate z = %.2f, E[T] z = %.2f at N=400 (band %.0f)", z_rate, z_et, band), half,
                se_m);
    }
    {  // the curve-wide rate estimator agrees with the single-N estimator
        const long n = std::min<long>(tr, 10000);
        const std::vector<double> grid = {200.0, 400.0};
        const mc::McRateCurve curve = mc::mc_rate_curve(kGuNc, p, grid, n, ctx.prop_seed(25), opts);
        const mc::PsRateEstimate single =
            mc::estimate_ps_rate(kGuNc, p, 400.0, n, ctx.prop_seed(25), opts);
        const double rel = std::abs(curve.points[1].value / single.rate.mean - 1.0);
        ctx.add("mc.rate_curve_consistency", "monte_carlo", rel <= 1e-9, rel,
                fmt("rel gap %.3g between rate estimators (tol 1e-9)", rel), n);
    }
    {  // the resample guard should never fire at default truncation
        const long n = std::min<long>(tr, 10000);
        const mc::CcdfEstimate est =
            mc::estimate_ccdf(kGuNc, p, {100.0, 400.0}, n, ctx.prop_seed(26), opts);
        ctx.add("mc.zero_resamples", "monte_carlo", est.resamples == 0,
                static_cast<double>(est.resamples),
                fmt("%.0f resamples at default truncation", static_cast<double>(est.resamples)), n);
    }
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const RunConfig& cfg) {
    SuiteCtx ctx;
    ctx.p = params_of(cfg);
    ctx.band = cfg.quick ? 5.0 : 3.0;
    ctx.trials = cfg.trials;
    ctx.seed = cfg.seed;
    ctx.workers = resolved_workers(cfg);
    specfun_properties(ctx);
    analytic_properties(ctx);
    montecarlo_properties(ctx);
    return ctx.results;
}

int cmd_validate(const RunConfig& cfg0) {
    RunConfig cfg = cfg0;
    cfg.command = "validate";
    apply_command_defaults(cfg);
    const std::vector<PropertyResult> results = run_property_suite(cfg);

    int failed = 0;
    for (const PropertyResult& r : results) {
        if (!r.pass) ++failed;
        std::printf("[%s] %-32s %s\n", r.pass ? "pass" : "FAIL", r.name.c_str(), r.detail.c_str());
    }
    std::printf("%zu/%zu properties passed\n", results.size() - static_cast<std::size_t>(failed),
                results.size());

    if (!cfg.out.empty()) {
        std::vector<CsvRow> rows;
        rows.reserve(results.size());
        for (const PropertyResult& r : results)
            rows.push_back({r.name, r.method, r.pass ? 1.0 : 0.0, r.statistic, r.has_se,
                            r.std_error, r.n_trials});
        write_csv(cfg.out, cfg, rows);
        ordered_json summary;
        summary["passed"] = results.size() - static_cast<std::size_t>(failed);
        summary["failed"] = failed;
        ordered_json props = ordered_json::array();
        for (const PropertyResult& r : results)
            props.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        summary["properties"] = props;
        write_sidecar(cfg, ordered_json(), summary);
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace miacomp::cli
