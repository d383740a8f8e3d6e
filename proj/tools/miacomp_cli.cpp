#include <cstdio>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "miacomp/errors.hpp"

namespace {

using miacomp::cli::RunConfig;

struct SubOptions {
    CLI::App* sub = nullptr;
    CLI::Option* trials_opt = nullptr;
};

SubOptions add_common(CLI::App& app, const char* name, const char* help, RunConfig& cfg,
                      bool with_t, bool with_n) {
    SubOptions so;
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", cfg.scenario, "scenario or 'all'")
        ->check(CLI::IsMember({"gu-nc", "gu-mia", "wu-nc", "wu-mia", "all"}));
    sub->add_option("--method", cfg.method, "evaluation route")
        ->check(CLI::IsMember({"analytic", "mc", "both"}));
    sub->add_option("--alpha", cfg.alpha, "path-loss exponent (> 2)");
    sub->add_option("--lambda", cfg.lambda, "BS density")->check(CLI::PositiveNumber);
    sub->add_option("--kbits", cfg.kbits, "packet size in bits")->check(CLI::PositiveNumber);
    if (with_t) {
        sub->add_option("--t-min", cfg.t_min, "grid start")->check(CLI::PositiveNumber);
        sub->add_option("--t-max", cfg.t_max, "grid end")->check(CLI::PositiveNumber);
        sub->add_option("--t-points", cfg.t_points, "grid size")->check(CLI::Range(1, 1000000));
    }
    if (with_n) {
        sub->add_option("--n-min", cfg.n_min, "grid start")->check(CLI::PositiveNumber);
        sub->add_option("--n-max", cfg.n_max, "grid end")->check(CLI::PositiveNumber);
        sub->add_option("--n-points", cfg.n_points, "grid size")->check(CLI::Range(1, 1000000));
    }
    sub->add_option("--spacing", cfg.spacing, "grid spacing")
        ->check(CLI::IsMember({"lin", "log"}));
    so.trials_opt = sub->add_option("--trials", cfg.trials, "Monte Carlo trials per point")
                        ->check(CLI::Range(1L, 2000000000L));
    sub->add_option("--seed", cfg.seed, "root RNG seed");
    sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)")
        ->check(CLI::Range(0, 4096));
    sub->add_option("--out", cfg.out, "CSV output path (stdout when omitted)");
    sub->add_flag("--emit-plot", cfg.emit_plot, "also write a matplotlib script next to the CSV");
    so.sub = sub;
    return so;
}

int usage_fail(const char* msg) {
    std::fprintf(stderr, "error: %s\n", msg);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"coverage, transmission-time and rate toolkit for cooperative PPP downlinks"};
    app.require_subcommand(1);

    const SubOptions curve =
        add_common(app, "curve", "CCDF of the packet transmission time on a t grid", cfg, true, false);
    const SubOptions fig_succ = add_common(
        app, "figure-success", "success probability p_s(N) across scenarios", cfg, false, true);
    const SubOptions fig_rate = add_common(
        app, "figure-rate", "rate R_N across scenarios plus rate-gain summary", cfg, false, true);
    const SubOptions diversity = add_common(
        app, "diversity", "diversity-order fits from analytic outage curves", cfg, false, true);
    const SubOptions validate =
        add_common(app, "validate", "run the self-check property suite", cfg, false, false);
    validate.sub->add_flag("--quick", cfg.quick, "small-sample smoke mode (1e3 trials, 5 SE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (curve.sub->parsed())
        cfg.command = "curve";
    else if (fig_succ.sub->parsed())
        cfg.command = "figure-success";
    else if (fig_rate.sub->parsed())
        cfg.command = "figure-rate";
    else if (diversity.sub->parsed())
        cfg.command = "diversity";
    else
        cfg.command = "validate";

    if (cfg.command == "validate" && cfg.quick && validate.trials_opt->count() == 0)
        cfg.trials = 1000;
    miacomp::cli::apply_command_defaults(cfg);

    if (cfg.alpha <= 2.0) return usage_fail("--alpha must be greater than 2");
    if (cfg.emit_plot && cfg.out.empty()) return usage_fail("--emit-plot requires --out");
    if (cfg.command == "curve" && cfg.t_max < cfg.t_min)
        return usage_fail("--t-max must be at least --t-min");
    if ((cfg.command == "figure-success" || cfg.command == "figure-rate") &&
        cfg.n_max < cfg.n_min)
        return usage_fail("--n-max must be at least --n-min");
    if (cfg.command == "diversity") {
        if ((cfg.n_min > 0.0) != (cfg.n_max > 0.0))
            return usage_fail("diversity needs both --n-min and --n-max, or neither");
        if (cfg.n_min > 0.0 && cfg.n_max <= cfg.n_min)
            return usage_fail("--n-max must exceed --n-min");
        if (cfg.n_points < 2) return usage_fail("diversity needs at least 2 grid points");
    }

    try {
        if (cfg.command == "curve") return miacomp::cli::cmd_curve(cfg);
        if (cfg.command == "figure-success") return miacomp::cli::cmd_figure_success(cfg);
        if (cfg.command == "figure-rate") return miacomp::cli::cmd_figure_rate(cfg);
        if (cfg.command == "diversity") return miacomp::cli::cmd_diversity(cfg);
        return miacomp::cli::cmd_validate(cfg);
    } catch (const miacomp::AccuracyError& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
