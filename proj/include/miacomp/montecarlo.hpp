#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "miacomp/analytic.hpp"
#include "miacomp/params.hpp"
#include "miacomp/rng.hpp"

namespace miacomp::mc {

struct SimOptions {
    double truncation_scale = 1.0;  // multiplies the default outer radius
    int workers = 1;
    int chunk_size = 4096;  // fixed trial chunking; merge order is chunk order
};

// BS distances from the origin user, sorted ascending, each tagged with a
// spreading code. Angles never matter: received power depends on |X| only.
struct PointPattern {
    struct Point {
        double dist;
        std::uint8_t code;  // 1 or 2
    };
    std::vector<Point> points;
    double r_inner = 0.0;
    double r_outer = 0.0;
};

// One realization: per-codeword SIRs, accumulated MI rate C, decode time K/C.
struct TrialOutcome {
    std::array<double, 2> sirs{0.0, 0.0};
    int codewords = 1;
    double mi_rate = 0.0;      // C, bits per channel use
    double decode_time = 0.0;  // T_hat = K / C

    double truncated_time(double n_uses) const {
        return decode_time < n_uses ? decode_time : n_uses;
    }
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_trials = 0;
    double confidence = 0.99;
};

// PPP on the annulus [r_inner, r_outer] with i.i.d. fair code tags, sampled
// through the radial gap construction: squared distances form a rate
// intensity*pi 1D Poisson process, so points arrive already sorted and the
// Poisson count is implicit.
PointPattern sample_annulus_ppp(double intensity, double r_inner, double r_outer,
                                StreamRng& rng);

// Distance from a typical Voronoi vertex to its three equidistant BSs:
// D = sqrt(S/(pi*lambda)) with S ~ Gamma(2,1), the pushforward of f_D.
double sample_vertex_distance(const NetworkParams& p, StreamRng& rng);

// Scenario trials. Interference beyond the truncation radius enters as its
// expected value (see notes on fidelity in montecarlo.cpp); a sampled pattern
// with an empty interferer set for some codeword is resampled and counted.
TrialOutcome gu_nc_trial(const NetworkParams& p, StreamRng& rng,
                         const SimOptions& opts = {}, long* resamples = nullptr);
TrialOutcome gu_mia_trial(const NetworkParams& p, StreamRng& rng,
                          const SimOptions& opts = {}, long* resamples = nullptr);
TrialOutcome wu_nc_trial(const NetworkParams& p, StreamRng& rng,
                         const SimOptions& opts = {}, long* resamples = nullptr);
TrialOutcome wu_mia_trial(const NetworkParams& p, StreamRng& rng,
                          const SimOptions& opts = {}, long* resamples = nullptr);

// Conditional variants with the vertex distance pinned to r: the test seam
// for Thm. 2's per-distance CCDF oracles and the degeneration check.
TrialOutcome wu_mia_trial_at(const NetworkParams& p, double r, StreamRng& rng,
                             const SimOptions& opts = {}, long* resamples = nullptr);
TrialOutcome wu_nc_trial_at(const NetworkParams& p, double r, int co_interferers,
                            StreamRng& rng, const SimOptions& opts = {},
                            long* resamples = nullptr);

TrialOutcome run_trial(Scenario s, const NetworkParams& p, StreamRng& rng,
                       const SimOptions& opts = {}, long* resamples = nullptr);
std::uint64_t scenario_tag(Scenario s);

struct CcdfEstimate {
    analytic::CcdfCurve curve;
    long resamples = 0;
};

// Empirical CCDF of the decode time over t_grid, all points from one trial
// set (common random numbers: the curve is monotone by construction).
// Bit-identical output for identical (params, grid, n_trials, seed) at any
// worker count.
CcdfEstimate estimate_ccdf(Scenario s, const NetworkParams& p,
                           const std::vector<double>& t_grid, long n_trials,
                           std::uint64_t base_seed, const SimOptions& opts = {});

struct PsRateEstimate {
    Estimate ps;
    Estimate rate;
    long resamples = 0;
};

// p_s(N) as a proportion and R_N = K*ps/mean(min(N,T)) with a delta-method
// standard error from the joint moments of the indicator and truncated time.
PsRateEstimate estimate_ps_rate(Scenario s, const NetworkParams& p, double n_uses,
                                long n_trials, std::uint64_t base_seed,
                                const SimOptions& opts = {});

struct McRateCurve {
    std::vector<analytic::RatePoint> points;
    double n_opt = 0.0;
    double r_max = 0.0;
    long resamples = 0;
};

// R_N over a whole N-grid from a single trial set (sorted decode times +
// prefix sums), so a rate-gain scan costs one simulation per scenario.
McRateCurve mc_rate_curve(Scenario s, const NetworkParams& p,
                          const std::vector<double>& n_grid, long n_trials,
                          std::uint64_t base_seed, const SimOptions& opts = {});

// Proportion standard error: Wilson-corrected when either count is below 100
// (CCDF tails are rare-event proportions), plain binomial otherwise.
double proportion_std_error(long successes, long n, double z = 2.576);

}  // namespace miacomp::mc
