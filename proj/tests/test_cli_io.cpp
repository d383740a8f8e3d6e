#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "doctest.h"
#include "cli_support.hpp"
#include "miacomp/analytic.hpp"

#ifndef MIACOMP_CLI
#error "MIACOMP_CLI must point at the built binary"
#endif

namespace cli = miacomp::cli;

namespace {

int run_cli(const std::string& args, const std::string& stdout_path = "") {
    std::string cmd = std::string(MIACOMP_CLI) + " " + args;
    if (stdout_path.empty())
        cmd += " >/dev/null 2>/dev/null";
    else
        cmd += " > " + stdout_path + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string read_all(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("significant digit formatting") {
    CHECK(cli::format_sig(1.0) == "1");
    CHECK(cli::format_sig(0.5) == "0.5");
    CHECK(cli::format_sig(1.0 / 3.0) == "0.333333333333");
    CHECK(cli::format_sig(1234567.89) == "1234567.89");
    CHECK(cli::format_sig(1e-7) == "1e-07");
}

TEST_CASE("csv schema") {
    CHECK(cli::csv_header() == "scenario,method,x,value,stderr,n_trials,alpha,lambda,kbits,seed");
    cli::RunConfig cfg;
    const cli::CsvRow analytic_row{"gu-nc", "exact", 50.0, 0.25, false, 0.0, 0};
    CHECK(cli::csv_line(analytic_row, cfg) == "gu-nc,exact,50,0.25,,0,3,1,75,1");
    const cli::CsvRow mc_row{"wu-mia", "monte_carlo", 50.0, 0.25, true, 0.0125, 2000};
    CHECK(cli::csv_line(mc_row, cfg) == "wu-mia,monte_carlo,50,0.25,0.0125,2000,3,1,75,1");
}

TEST_CASE("grid construction and scenario parsing") {
    const std::vector<double> lg = cli::make_grid(10.0, 1000.0, 5, "log");
    CHECK(lg == miacomp::analytic::log_grid(10.0, 1000.0, 5));
    const std::vector<double> ln = cli::make_grid(1.0, 3.0, 3, "lin");
    CHECK(ln == miacomp::analytic::lin_grid(1.0, 3.0, 3));
    CHECK_THROWS_AS(cli::make_grid(1.0, 3.0, 3, "cubic"), std::domain_error);
    CHECK(cli::parse_scenario("wu-mia") == miacomp::kWuMia);
    CHECK_THROWS_AS(cli::parse_scenario("nope"), std::domain_error);
    CHECK(cli::scenario_list("all").size() == 4);
    CHECK(cli::scenario_list("gu-nc").size() == 1);
}

TEST_CASE("per command defaults") {
    cli::RunConfig cfg;
    cfg.command = "curve";
    cli::apply_command_defaults(cfg);
    CHECK(cfg.method == "analytic");
    CHECK(cfg.t_min == 25.0);
    CHECK(cfg.t_max == 1500.0);
    CHECK(cfg.t_points == 60);

    cli::RunConfig fr;
    fr.command = "figure-rate";
    fr.kbits = 100.0;
    cli::apply_command_defaults(fr);
    CHECK(fr.method == "both");
    CHECK(fr.n_min == 5.0);
    CHECK(fr.n_max == 2000.0);
    CHECK(fr.n_points == 200);

    cli::RunConfig v;
    v.command = "validate";
    cli::apply_command_defaults(v);
    CHECK(v.method == "mc");
}

TEST_CASE("curve command writes a deterministic csv") {
    const std::string out = "tmp_cli_curve.csv";
    const std::string args =
        "curve --scenario gu-nc --t-min 50 --t-max 200 --t-points 5 --out " + out;
    REQUIRE(run_cli(args) == 0);
    const std::vector<std::string> lines = read_lines(out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == cli::csv_header());
    double prev = 2.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 10);
        CHECK(cells[0] == "gu-nc");
        CHECK(cells[1] == "exact");
        CHECK(cells[4] == "");
        CHECK(cells[5] == "0");
        const double v = std::stod(cells[3]);
        CHECK(v <= prev);
        prev = v;
    }
    const std::string first = read_all(out);
    REQUIRE(run_cli(args) == 0);
    CHECK(read_all(out) == first);
    std::remove(out.c_str());
    std::remove((out + ".json").c_str());
}

TEST_CASE("curve without an output path prints csv to stdout") {
    const std::string cap = "tmp_cli_stdout.txt";
    REQUIRE(run_cli("curve --scenario wu-nc --t-min 50 --t-max 200 --t-points 4", cap) == 0);
    const std::vector<std::string> lines = read_lines(cap);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == cli::csv_header());
    std::remove(cap.c_str());
}

TEST_CASE("monte carlo stays within noise of the analytic bound") {
    const std::string out = "tmp_cli_both.csv";
    REQUIRE(run_cli("curve --scenario wu-mia --method both --trials 2000 --t-min 50 --t-max 400 "
                    "--t-points 4 --seed 5 --out " +
                    out) == 0);
    const std::vector<std::string> lines = read_lines(out);
    REQUIRE(lines.size() == 9);
    std::vector<double> analytic_vals, mc_vals, mc_se;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        if (cells[1] == "monte_carlo") {
            mc_vals.push_back(std::stod(cells[3]));
            mc_se.push_back(std::stod(cells[4]));
        } else {
            CHECK(cells[1] == "lower_bound");
            analytic_vals.push_back(std::stod(cells[3]));
        }
    }
    REQUIRE(analytic_vals.size() == 4);
    REQUIRE(mc_vals.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) CHECK(mc_vals[j] + 3.0 * mc_se[j] >= analytic_vals[j]);
    std::remove(out.c_str());
    std::remove((out + ".json").c_str());
}

TEST_CASE("single point grids are allowed") {
    const std::string cap = "tmp_cli_single.txt";
    REQUIRE(run_cli("figure-success --method analytic --n-min 300 --n-max 300 --n-points 1",
                    cap) == 0);
    const std::vector<std::string> lines = read_lines(cap);
    REQUIRE(lines.size() == 5);  // header plus one row per scenario
    std::remove(cap.c_str());
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("curve --no-such-flag") == 2);
    CHECK(run_cli("curve --scenario ''") == 2);
    CHECK(run_cli("curve --t-min 100 --t-max 50") == 2);
    CHECK(run_cli("figure-rate --n-min 100 --n-max 10") == 2);
    CHECK(run_cli("curve --alpha 1.5") == 2);
    CHECK(run_cli("curve --emit-plot") == 2);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("no-such-command") == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("curve --help") == 0);
}

TEST_CASE("diversity command reports slopes") {
    const std::string out = "tmp_cli_div.csv";
    const std::string cap = "tmp_cli_div.txt";
    REQUIRE(run_cli("diversity --scenario gu-nc --out " + out, cap) == 0);
    const std::vector<std::string> lines = read_lines(out);
    REQUIRE(lines.size() == 13);
    const std::string console = read_all(cap);
    CHECK(console.find("g_d(gu-nc)") != std::string::npos);
    CHECK(read_all(out + ".json").find("g_d") != std::string::npos);
    std::remove(out.c_str());
    std::remove((out + ".json").c_str());
    std::remove(cap.c_str());
}

TEST_CASE("figure rate prints the gain summary") {
    const std::string out = "tmp_cli_rate.csv";
    const std::string cap = "tmp_cli_rate.txt";
    REQUIRE(run_cli("figure-rate --method analytic --n-min 10 --n-max 1000 --n-points 30 --out " +
                        out,
                    cap) == 0);
    const std::string console = read_all(cap);
    CHECK(console.find("g_r(general) analytic") != std::string::npos);
    CHECK(console.find("g_r(worst-case) analytic") != std::string::npos);
    CHECK(read_lines(out).size() == 1 + 4 * 30);
    std::remove(out.c_str());
    std::remove((out + ".json").c_str());
    std::remove(cap.c_str());
}

TEST_CASE("plot script is emitted next to the csv") {
    const std::string out = "tmp_cli_plot.csv";
    REQUIRE(run_cli("curve --scenario gu-nc --t-points 3 --t-min 50 --t-max 200 --emit-plot "
                    "--out " +
                    out) == 0);
    const std::string script = read_all(out + ".plot.py");
    CHECK(script.find("matplotlib") != std::string::npos);
    CHECK(script.find(out) != std::string::npos);
    std::remove(out.c_str());
    std::remove((out + ".json").c_str());
    std::remove((out + ".plot.py").c_str());
}

TEST_CASE("quick validation passes end to end") {
    const std::string cap = "tmp_cli_validate.txt";
    REQUIRE(run_cli("validate --quick --seed 3", cap) == 0);
    const std::string console = read_all(cap);
    CHECK(console.find("FAIL") == std::string::npos);
    CHECK(console.find("properties passed") != std::string::npos);
    std::remove(cap.c_str());
}

}  // TEST_SUITE
