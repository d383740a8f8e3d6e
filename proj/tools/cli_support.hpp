#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "miacomp/params.hpp"

namespace miacomp::cli {

// Resolved run configuration shared by every subcommand. Zero sentinels on
// the grid fields mean "use the command's default"; the JSON sidecar always
// records the resolved values.
struct RunConfig {
    std::string command;
    std::string scenario = "all";
    std::string method;  // analytic | mc | both; default depends on command
    double alpha = 3.0;
    double lambda = 1.0;
    double kbits = 75.0;
    double t_min = 0.0;
    double t_max = 0.0;
    int t_points = 0;
    double n_min = 0.0;
    double n_max = 0.0;
    int n_points = 0;
    std::string spacing = "log";
    long trials = 100000;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = hardware concurrency
    std::string out;
    bool emit_plot = false;
    bool quick = false;
};

NetworkParams params_of(const RunConfig& cfg);

// fills per-command method and grid defaults in place (idempotent)
void apply_command_defaults(RunConfig& cfg);
Scenario parse_scenario(const std::string& name);
std::vector<Scenario> scenario_list(const std::string& name);
int resolved_workers(const RunConfig& cfg);
std::vector<double> make_grid(double lo, double hi, int points, const std::string& spacing);

// One CSV record in the fixed 10-column schema:
// scenario,method,x,value,stderr,n_trials,alpha,lambda,kbits,seed
// (stderr stays empty and n_trials 0 on analytic rows).
struct CsvRow {
    std::string scenario;
    std::string method;
    double x = 0.0;
    double value = 0.0;
    bool has_stderr = false;
    double std_error = 0.0;
    long n_trials = 0;
};

std::string format_sig(double v);  // 12 significant digits
std::string csv_line(const CsvRow& row, const RunConfig& cfg);
std::string csv_header();
void write_csv(const std::string& path, const RunConfig& cfg, const std::vector<CsvRow>& rows);
void write_plot_script(const std::string& csv_path);

struct PropertyResult {
    std::string name;
    std::string method;  // exact | lower_bound | monte_carlo
    bool pass = false;
    double statistic = 0.0;  // measured quantity the tolerance applies to
    bool has_se = false;
    double std_error = 0.0;
    long n_trials = 0;
    std::string detail;
};

// Full validation suite: special-function identities, closed forms, asymptote
// ratios, bound directions, sampler oracles, estimator determinism. Budgets
// follow cfg.trials; statistical bands are 3 SE, widened to 5 SE by --quick.
std::vector<PropertyResult> run_property_suite(const RunConfig& cfg);

int cmd_curve(const RunConfig& cfg);
int cmd_figure_success(const RunConfig& cfg);
int cmd_figure_rate(const RunConfig& cfg);
int cmd_diversity(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg);

}  // namespace miacomp::cli
