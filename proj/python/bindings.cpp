#include <stdexcept>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "miacomp/analytic.hpp"
#include "miacomp/montecarlo.hpp"
#include "miacomp/specfun.hpp"

namespace py = pybind11;
namespace an = miacomp::analytic;
namespace mc = miacomp::mc;
using miacomp::NetworkParams;
using miacomp::Scenario;

namespace {

Scenario scenario_from(const std::string& name) {
    if (name == "gu-nc") return miacomp::kGuNc;
    if (name == "gu-mia") return miacomp::kGuMia;
    if (name == "wu-nc") return miacomp::kWuNc;
    if (name == "wu-mia") return miacomp::kWuMia;
    throw std::domain_error("unknown scenario: " + name);
}

mc::SimOptions options_for(int workers) {
    mc::SimOptions opts;
    opts.workers = workers < 1 ? 1 : workers;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "analytic and Monte Carlo engines for cooperative PPP downlink analysis";

    py::class_<NetworkParams>(m, "NetworkParams")
        .def(py::init<double, double, double>(), py::arg("lam") = 1.0, py::arg("alpha") = 3.0,
             py::arg("kbits") = 75.0)
        .def_readwrite("lam", &NetworkParams::lambda)
        .def_readwrite("alpha", &NetworkParams::alpha)
        .def_readwrite("kbits", &NetworkParams::kbits)
        .def("delta", &NetworkParams::delta)
        .def("validate", &NetworkParams::validate)
        .def("__repr__", [](const NetworkParams& p) {
            return "NetworkParams(lam=" + std::to_string(p.lambda) +
                   ", alpha=" + std::to_string(p.alpha) + ", kbits=" + std::to_string(p.kbits) +
                   ")";
        });

    m.def("scenarios", [] {
        return std::vector<std::string>{"gu-nc", "gu-mia", "wu-nc", "wu-mia"};
    });

    m.def("hyp_f", &miacomp::specfun::hyp_f, py::arg("delta"), py::arg("nu"));
    m.def("hyp_h", &miacomp::specfun::hyp_h, py::arg("delta"), py::arg("theta"));
    m.def("hyp_f_deriv", &miacomp::specfun::hyp_f_deriv, py::arg("delta"), py::arg("nu"));
    m.def("sir_ccdf", &an::g_ccdf, py::arg("delta"), py::arg("nu"));

    m.def(
        "ccdf",
        [](const NetworkParams& p, const std::string& s, double t) {
            return an::ccdf(p, scenario_from(s), t);
        },
        py::arg("params"), py::arg("scenario"), py::arg("t"));
    m.def(
        "ccdf_curve",
        [](const NetworkParams& p, const std::string& s, const std::vector<double>& grid) {
            const an::CurveFn fn = an::ccdf_fn(p, scenario_from(s));
            std::vector<double> out(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) out[i] = fn(grid[i]);
            return out;
        },
        py::arg("params"), py::arg("scenario"), py::arg("t_grid"));
    m.def(
        "success_prob",
        [](const NetworkParams& p, const std::string& s, double n_uses) {
            return an::success_prob(an::ccdf_fn(p, scenario_from(s)), n_uses);
        },
        py::arg("params"), py::arg("scenario"), py::arg("n_uses"));
    m.def(
        "rate",
        [](const NetworkParams& p, const std::string& s, double n_uses) {
            return an::rate(an::ccdf_fn(p, scenario_from(s)), p, n_uses);
        },
        py::arg("params"), py::arg("scenario"), py::arg("n_uses"));
    m.def(
        "rate_gain",
        [](const NetworkParams& p, const std::string& user_class,
           const std::vector<double>& n_grid) {
            miacomp::UserClass uc;
            if (user_class == "general")
                uc = miacomp::UserClass::general;
            else if (user_class == "worst-case")
                uc = miacomp::UserClass::worst_case;
            else
                throw std::domain_error("user_class must be 'general' or 'worst-case'");
            const std::vector<double> grid =
                n_grid.empty() ? an::log_grid(p.kbits / 20.0, 20.0 * p.kbits, 200) : n_grid;
            const an::RateGainResult g = an::rate_gain(p, uc, grid);
            py::dict out;
            out["gain"] = g.gain;
            out["mia_n_opt"] = g.mia.n_opt;
            out["mia_r_max"] = g.mia.r_max;
            out["nc_n_opt"] = g.nc.n_opt;
            out["nc_r_max"] = g.nc.r_max;
            return out;
        },
        py::arg("params"), py::arg("user_class"), py::arg("n_grid") = std::vector<double>{});
    m.def(
        "outage_asymptote",
        [](const NetworkParams& p, const std::string& s, double n_uses) {
            return an::outage_asymptote(p, scenario_from(s), n_uses);
        },
        py::arg("params"), py::arg("scenario"), py::arg("n_uses"));
    m.def(
        "diversity_window",
        [](const NetworkParams& p, const std::string& s) {
            return an::diversity_window(p, scenario_from(s));
        },
        py::arg("params"), py::arg("scenario"));
    m.def("log_grid", &an::log_grid, py::arg("lo"), py::arg("hi"), py::arg("points"));

    m.def(
        "estimate_ccdf",
        [](const NetworkParams& p, const std::string& s, const std::vector<double>& t_grid,
           long n_trials, std::uint64_t seed, int workers) {
            const mc::CcdfEstimate est =
                mc::estimate_ccdf(scenario_from(s), p, t_grid, n_trials, seed, options_for(workers));
            py::dict out;
            out["values"] = est.curve.values;
            out["std_error"] = est.curve.std_error;
            out["n_trials"] = est.curve.n_trials;
            out["resamples"] = est.resamples;
            return out;
        },
        py::arg("params"), py::arg("scenario"), py::arg("t_grid"), py::arg("n_trials") = 10000,
        py::arg("seed") = 1, py::arg("workers") = 1);
    m.def(
        "estimate_ps_rate",
        [](const NetworkParams& p, const std::string& s, double n_uses, long n_trials,
           std::uint64_t seed, int workers) {
            const mc::PsRateEstimate est = mc::estimate_ps_rate(scenario_from(s), p, n_uses,
                                                                n_trials, seed, options_for(workers));
            py::dict out;
            out["ps"] = est.ps.mean;
            out["ps_std_error"] = est.ps.std_error;
            out["rate"] = est.rate.mean;
            out["rate_std_error"] = est.rate.std_error;
            out["n_trials"] = est.ps.n_trials;
            out["resamples"] = est.resamples;
            return out;
        },
        py::arg("params"), py::arg("scenario"), py::arg("n_uses"), py::arg("n_trials") = 10000,
        py::arg("seed") = 1, py::arg("workers") = 1);
}
