#pragma once

#include <functional>
#include <vector>

#include "miacomp/params.hpp"

namespace miacomp::analytic {

using CurveFn = std::function<double(double)>;

enum class CurveMethod { exact, lower_bound, monte_carlo };

inline const char* method_name(CurveMethod m) {
    switch (m) {
        case CurveMethod::exact: return "exact";
        case CurveMethod::lower_bound: return "lower_bound";
        default: return "monte_carlo";
    }
}

// Sampled packet-time CCDF t -> A_M(t). std_error is populated only for
// monte_carlo curves.
struct CcdfCurve {
    std::vector<double> t_grid;
    std::vector<double> values;
    std::vector<double> std_error;
    CurveMethod method = CurveMethod::exact;
    long n_trials = 0;
};

// SIR-level primitives: G(nu) = P(SIR > nu) for the nearest-BS general user
// and its derivative in nu.
double g_ccdf(double delta, double nu);
double g_ccdf_deriv(double delta, double nu);

// Packet-time CCDFs A_M(t). NC forms are exact; MIA forms are the paper's
// lower bounds on the CCDF (so success probabilities derived from them are
// upper bounds).
double gu_nc_ccdf(const NetworkParams& p, double t);
double gu_mia_ccdf_bound(const NetworkParams& p, double t);
double wu_nc_ccdf(const NetworkParams& p, double t);
double wu_mia_ccdf_bound(const NetworkParams& p, double t);

double ccdf(const NetworkParams& p, Scenario s, double t);
CurveFn ccdf_fn(const NetworkParams& p, Scenario s);
CurveMethod scenario_method(Scenario s);

// p_s(N) = 1 - A_M(N)
double success_prob(const CurveFn& curve, double n_uses);

// R_N = K * p_s(N) / integral_0^N A_M(t) dt
double rate(const CurveFn& curve, const NetworkParams& p, double n_uses);

// E[T] = integral_0^N A_M(t) dt on its own (the rate denominator)
double expected_time(const CurveFn& curve, double n_uses);

struct RatePoint {
    double n_uses;
    double value;
};

struct RateMax {
    double n_opt = 0.0;
    double r_max = 0.0;
    bool edge = false;  // argmax hit the grid boundary
};

// Rate curve over a grid, via one incremental sweep of the E[T] integral.
std::vector<RatePoint> rate_curve(const CurveFn& curve, const NetworkParams& p,
                                  const std::vector<double>& n_grid);

// Grid argmax refined by golden-section search in the bracketing interval.
RateMax max_rate(const CurveFn& curve, const NetworkParams& p,
                 const std::vector<double>& n_grid);

struct RateGainResult {
    double gain = 0.0;
    RateMax mia;
    RateMax nc;
};

// g_r = max_N R_N(MIA bound) / max_N R_N(NC exact) for one user class,
// both maxima over the same grid. Sets RateMax::edge instead of failing when
// a maximum lands on the grid edge.
RateGainResult rate_gain(const NetworkParams& p, UserClass user_class,
                         const std::vector<double>& n_grid);

// Leading-order outage A_M(N) as N -> infinity for each scenario.
double outage_asymptote(const NetworkParams& p, Scenario s, double n_uses);

// Least-squares slope of log(outage) against -log(N); the diversity gain
// estimate. Requires every outage value in (0, 0.1).
double diversity_estimate(const std::vector<double>& n_grid,
                          const std::vector<double>& ps_values);

// N-window such that the scenario's asymptotic outage spans [lo, hi].
std::pair<double, double> diversity_window(const NetworkParams& p, Scenario s,
                                           double outage_hi = 1e-2, double outage_lo = 1e-6);

std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> lin_grid(double lo, double hi, int points);

}  // namespace miacomp::analytic
