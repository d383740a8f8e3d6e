#include "miacomp/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

namespace miacomp::mc {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_opts(const SimOptions& opts) {
    if (!(opts.truncation_scale > 0.1))
        throw std::domain_error("SimOptions: truncation_scale must exceed 0.1");
    if (opts.workers < 1) throw std::domain_error("SimOptions: workers must be >= 1");
    if (opts.chunk_size < 1) throw std::domain_error("SimOptions: chunk_size must be >= 1");
}

void bump(long* counter) {
    if (counter) ++(*counter);
}

// Truncation radius: a fixed multiple of the typical cell scale or of the
// serving distance, whichever is larger. The mean of the discarded far field
// is added back deterministically (mean_tail), so truncation only perturbs
// the interference variance, not its mean.
double outer_radius(double lambda, double r_serving, const SimOptions& opts) {
    return opts.truncation_scale * std::max(30.0 / std::sqrt(lambda), 10.0 * r_serving);
}

// E[I] of a PPP field of the given intensity beyond r_outer under Rayleigh
// fading: 2*pi*intensity*r^(2-alpha)/(alpha-2).
double mean_tail(double intensity, double r_outer, double alpha) {
    return 2.0 * M_PI * intensity * std::pow(r_outer, 2.0 - alpha) / (alpha - 2.0);
}

struct Field {
    double interference = 0.0;
    long count = 0;
};

// Stream PPP arrivals in squared distance over (q_start, q_outer] and
// accumulate faded power. Draw order per point: gap, fading.
Field stream_field(double intensity, double q_start, double q_outer, double alpha,
                   StreamRng& rng) {
    const double gap_mean = 1.0 / (M_PI * intensity);
    Field out;
    double q = q_start;
    while (true) {
        q += rng.exponential(gap_mean);
        if (q > q_outer) break;
        out.interference += rng.exponential(1.0) * std::pow(q, -0.5 * alpha);
        ++out.count;
    }
    return out;
}

TrialOutcome nc_outcome(const NetworkParams& p, double sir) {
    TrialOutcome o;
    o.sirs = {sir, 0.0};
    o.codewords = 1;
    o.mi_rate = std::log1p(sir) / kLn2;
    o.decode_time = p.kbits / o.mi_rate;
    return o;
}

TrialOutcome mia_outcome(const NetworkParams& p, double y1, double y2) {
    TrialOutcome o;
    o.sirs = {y1, y2};
    o.codewords = 2;
    o.mi_rate = (std::log1p(y1) + std::log1p(y2)) / kLn2;
    o.decode_time = p.kbits / o.mi_rate;
    return o;
}

// Worst-case geometry at pinned vertex distance r: serving BS plus
// co_interferers co-located BSs at r, independent far field beyond r.
// Draw order: serving fade, co-located fades, far field.
TrialOutcome wu_nc_at_impl(const NetworkParams& p, double r, int co_interferers, StreamRng& rng,
                           const SimOptions& opts, long* resamples) {
    const double a = p.alpha;
    const double q = r * r;
    const double path = std::pow(q, -0.5 * a);
    while (true) {
        const double h0 = rng.exponential(1.0);
        double co = 0.0;
        for (int i = 0; i < co_interferers; ++i) co += rng.exponential(1.0);
        const double r_out = outer_radius(p.lambda, r, opts);
        const Field far = stream_field(p.lambda, q, r_out * r_out, a, rng);
        if (co_interferers == 0 && far.count == 0) {
            bump(resamples);
            continue;
        }
        const double interference = co * path + far.interference + mean_tail(p.lambda, r_out, a);
        return nc_outcome(p, h0 * path / interference);
    }
}

// Worst-case MIA at pinned r: BS1 serves codeword 1, BS2 serves codeword 2,
// BS3 (also at r) interferes with codeword 1; the far field is one
// full-intensity stream coin-split across codes. Draw order: h1 h2 h3, then
// per far point gap, code, fading.
TrialOutcome wu_mia_at_impl(const NetworkParams& p, double r, StreamRng& rng,
                            const SimOptions& opts, long* resamples) {
    const double a = p.alpha;
    const double q = r * r;
    const double path = std::pow(q, -0.5 * a);
    const double gap_mean = 1.0 / (M_PI * p.lambda);
    while (true) {
        const double h1 = rng.exponential(1.0);
        const double h2 = rng.exponential(1.0);
        const double h3 = rng.exponential(1.0);
        const double r_out = outer_radius(p.lambda, r, opts);
        const double q_out = r_out * r_out;
        double far1 = 0.0, far2 = 0.0;
        long count2 = 0;
        double qq = q;
        while (true) {
            qq += rng.exponential(gap_mean);
            if (qq > q_out) break;
            const bool code2 = (rng.next_u64() & 1ULL) != 0;
            const double pwr = rng.exponential(1.0) * std::pow(qq, -0.5 * a);
            if (code2) {
                far2 += pwr;
                ++count2;
            } else {
                far1 += pwr;
            }
        }
        if (count2 == 0) {  // codeword 2 saw no sampled interferer at all
            bump(resamples);
            continue;
        }
        const double comp = mean_tail(0.5 * p.lambda, r_out, a);
        const double y1 = h1 * path / (h3 * path + far1 + comp);
        const double y2 = h2 * path / (far2 + comp);
        return mia_outcome(p, y1, y2);
    }
}

void check_trial_inputs(const NetworkParams& p, const SimOptions& opts) {
    p.validate();
    check_opts(opts);
}

// Dispatch fixed chunks of [0, n_trials) to a worker pool. fn(c, lo, hi) must
// write only chunk-c state, so results are independent of scheduling.
template <typename Fn>
void run_chunked(long n_trials, long chunk, int workers, const Fn& fn) {
    const long n_chunks = (n_trials + chunk - 1) / chunk;
    std::atomic<long> next{0};
    auto loop = [&] {
        for (long c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
            fn(c, c * chunk, std::min(n_trials, (c + 1) * chunk));
    };
    if (workers <= 1) {
        loop();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
}

long chunk_count(long n_trials, long chunk) { return (n_trials + chunk - 1) / chunk; }

void check_estimator_inputs(const NetworkParams& p, const SimOptions& opts, long n_trials) {
    p.validate();
    check_opts(opts);
    if (n_trials <= 0) throw std::domain_error("n_trials must be positive");
}

}  // namespace

PointPattern sample_annulus_ppp(double intensity, double r_inner, double r_outer,
                                StreamRng& rng) {
    if (!(intensity > 0.0) || !(r_inner >= 0.0) || !(r_outer > r_inner))
        throw std::domain_error("sample_annulus_ppp: need intensity > 0 and 0 <= r_inner < r_outer");
    PointPattern pat;
    pat.r_inner = r_inner;
    pat.r_outer = r_outer;
    const double gap_mean = 1.0 / (M_PI * intensity);
    const double q_out = r_outer * r_outer;
    double q = r_inner * r_inner;
    while (true) {
        q += rng.exponential(gap_mean);
        if (q > q_out) break;
        const std::uint8_t code = (rng.next_u64() & 1ULL) ? std::uint8_t{2} : std::uint8_t{1};
        pat.points.push_back({std::sqrt(q), code});
    }
    return pat;
}

double sample_vertex_distance(const NetworkParams& p, StreamRng& rng) {
    p.validate();
    const double s = rng.exponential(1.0) + rng.exponential(1.0);  // Gamma(2,1)
    return std::sqrt(s / (M_PI * p.lambda));
}

TrialOutcome gu_nc_trial(const NetworkParams& p, StreamRng& rng, const SimOptions& opts,
                         long* resamples) {
    check_trial_inputs(p, opts);
    const double a = p.alpha;
    while (true) {
        const double q1 = rng.exponential(1.0 / (M_PI * p.lambda));  // nearest BS, squared
        const double h0 = rng.exponential(1.0);
        const double r_out = outer_radius(p.lambda, std::sqrt(q1), opts);
        const Field far = stream_field(p.lambda, q1, r_out * r_out, a, rng);
        if (far.count == 0) {
            bump(resamples);
            continue;
        }
        const double interference = far.interference + mean_tail(p.lambda, r_out, a);
        return nc_outcome(p, h0 * std::pow(q1, -0.5 * a) / interference);
    }
}

TrialOutcome gu_mia_trial(const NetworkParams& p, StreamRng& rng, const SimOptions& opts,
                          long* resamples) {
    check_trial_inputs(p, opts);
    const double a = p.alpha;
    const double half = 0.5 * p.lambda;
    while (true) {
        double ys[2] = {0.0, 0.0};
        bool retry = false;
        for (int c = 0; c < 2; ++c) {  // independent per-code point processes
            const double q1 = rng.exponential(1.0 / (M_PI * half));
            const double h0 = rng.exponential(1.0);
            const double r_out = outer_radius(p.lambda, std::sqrt(q1), opts);
            const Field far = stream_field(half, q1, r_out * r_out, a, rng);
            if (far.count == 0) {
                retry = true;
                break;
            }
            const double interference = far.interference + mean_tail(half, r_out, a);
            ys[c] = h0 * std::pow(q1, -0.5 * a) / interference;
        }
        if (retry) {
            bump(resamples);
            continue;
        }
        return mia_outcome(p, ys[0], ys[1]);
    }
}

TrialOutcome wu_nc_trial(const NetworkParams& p, StreamRng& rng, const SimOptions& opts,
                         long* resamples) {
    check_trial_inputs(p, opts);
    const double d = sample_vertex_distance(p, rng);
    return wu_nc_at_impl(p, d, 2, rng, opts, resamples);
}

TrialOutcome wu_mia_trial(const NetworkParams& p, StreamRng& rng, const SimOptions& opts,
                          long* resamples) {
    check_trial_inputs(p, opts);
    const double d = sample_vertex_distance(p, rng);
    return wu_mia_at_impl(p, d, rng, opts, resamples);
}

TrialOutcome wu_mia_trial_at(const NetworkParams& p, double r, StreamRng& rng,
                             const SimOptions& opts, long* resamples) {
    check_trial_inputs(p, opts);
    if (!(r > 0.0)) throw std::domain_error("wu_mia_trial_at: r must be positive");
    return wu_mia_at_impl(p, r, rng, opts, resamples);
}

TrialOutcome wu_nc_trial_at(const NetworkParams& p, double r, int co_interferers, StreamRng& rng,
                            const SimOptions& opts, long* resamples) {
    check_trial_inputs(p, opts);
    if (!(r > 0.0)) throw std::domain_error("wu_nc_trial_at: r must be positive");
    if (co_interferers < 0) throw std::domain_error("wu_nc_trial_at: co_interferers must be >= 0");
    return wu_nc_at_impl(p, r, co_interferers, rng, opts, resamples);
}

TrialOutcome run_trial(Scenario s, const NetworkParams& p, StreamRng& rng, const SimOptions& opts,
                       long* resamples) {
    if (s == kGuNc) return gu_nc_trial(p, rng, opts, resamples);
    if (s == kGuMia) return gu_mia_trial(p, rng, opts, resamples);
    if (s == kWuNc) return wu_nc_trial(p, rng, opts, resamples);
    return wu_mia_trial(p, rng, opts, resamples);
}

std::uint64_t scenario_tag(Scenario s) {
    if (s == kGuNc) return 1;
    if (s == kGuMia) return 2;
    if (s == kWuNc) return 3;
    return 4;
}

CcdfEstimate estimate_ccdf(Scenario s, const NetworkParams& p, const std::vector<double>& t_grid,
                           long n_trials, std::uint64_t base_seed, const SimOptions& opts) {
    check_estimator_inputs(p, opts, n_trials);
    if (t_grid.empty()) throw std::domain_error("estimate_ccdf: t_grid must be non-empty");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::domain_error("estimate_ccdf: t_grid must be ascending");
    const std::uint64_t tag = scenario_tag(s);
    const std::size_t m = t_grid.size();
    const long n_chunks = chunk_count(n_trials, opts.chunk_size);
    // bucket[c][k] counts chunk-c trials whose decode time exceeds exactly the
    // first k grid points; a suffix sum turns buckets into per-point counts.
    std::vector<std::vector<long>> buckets(static_cast<std::size_t>(n_chunks));
    std::vector<long> res(static_cast<std::size_t>(n_chunks), 0);
    run_chunked(n_trials, opts.chunk_size, opts.workers, [&](long c, long lo, long hi) {
        std::vector<long> local(m + 1, 0);
        long r = 0;
        for (long i = lo; i < hi; ++i) {
            StreamRng rng(derive_seed(base_seed, tag, static_cast<std::uint64_t>(i)));
            const TrialOutcome o = run_trial(s, p, rng, opts, &r);
            const std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(t_grid.begin(), t_grid.end(), o.decode_time) - t_grid.begin());
            ++local[idx];
        }
        buckets[static_cast<std::size_t>(c)] = std::move(local);
        res[static_cast<std::size_t>(c)] = r;
    });

    std::vector<long> bucket(m + 1, 0);
    long resamples = 0;
    for (long c = 0; c < n_chunks; ++c) {
        for (std::size_t k = 0; k <= m; ++k) bucket[k] += buckets[static_cast<std::size_t>(c)][k];
        resamples += res[static_cast<std::size_t>(c)];
    }
    std::vector<long> exceed(m, 0);
    long acc = 0;
    for (std::size_t j = m; j-- > 0;) {
        acc += bucket[j + 1];
        exceed[j] = acc;
    }

    CcdfEstimate out;
    out.resamples = resamples;
    out.curve.t_grid = t_grid;
    out.curve.method = analytic::CurveMethod::monte_carlo;
    out.curve.n_trials = n_trials;
    out.curve.values.resize(m);
    out.curve.std_error.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        out.curve.values[j] = static_cast<double>(exceed[j]) / static_cast<double>(n_trials);
        out.curve.std_error[j] = proportion_std_error(exceed[j], n_trials);
    }
    return out;
}

PsRateEstimate estimate_ps_rate(Scenario s, const NetworkParams& p, double n_uses, long n_trials,
                                std::uint64_t base_seed, const SimOptions& opts) {
    check_estimator_inputs(p, opts, n_trials);
    if (!(n_uses > 0.0)) throw std::domain_error("estimate_ps_rate: n_uses must be positive");
    const std::uint64_t tag = scenario_tag(s);
    struct Partial {
        long succ = 0;
        double sum_m = 0.0, sum_m2 = 0.0, sum_im = 0.0;
        long res = 0;
    };
    const long n_chunks = chunk_count(n_trials, opts.chunk_size);
    std::vector<Partial> parts(static_cast<std::size_t>(n_chunks));
    run_chunked(n_trials, opts.chunk_size, opts.workers, [&](long c, long lo, long hi) {
        Partial part;
        for (long i = lo; i < hi; ++i) {
            StreamRng rng(derive_seed(base_seed, tag, static_cast<std::uint64_t>(i)));
            const TrialOutcome o = run_trial(s, p, rng, opts, &part.res);
            const double m = o.truncated_time(n_uses);
            const bool ok = o.decode_time <= n_uses;
            part.succ += ok ? 1 : 0;
            part.sum_m += m;
            part.sum_m2 += m * m;
            part.sum_im += ok ? m : 0.0;
        }
        parts[static_cast<std::size_t>(c)] = part;
    });

    // float partials reduce in chunk order so the result is scheduling-free
    Partial tot;
    for (const Partial& part : parts) {
        tot.succ += part.succ;
        tot.sum_m += part.sum_m;
        tot.sum_m2 += part.sum_m2;
        tot.sum_im += part.sum_im;
        tot.res += part.res;
    }

    const double n = static_cast<double>(n_trials);
    const double ps = static_cast<double>(tot.succ) / n;
    const double mean_m = tot.sum_m / n;
    const double rate = p.kbits * ps / mean_m;

    PsRateEstimate out;
    out.resamples = tot.res;
    out.ps = {ps, proportion_std_error(tot.succ, n_trials), n_trials, 0.99};
    double se_rate = 0.0;
    if (n_trials > 1) {
        // delta method on R = K p / mu over the joint moments of the success
        // indicator and the truncated time
        const double var_p = ps * (1.0 - ps) / n;
        const double s2_m = std::max(0.0, (tot.sum_m2 - n * mean_m * mean_m) / (n - 1.0));
        const double cov_im = (tot.sum_im - n * ps * mean_m) / (n - 1.0);
        const double dp = p.kbits / mean_m;
        const double dm = -p.kbits * ps / (mean_m * mean_m);
        const double var_r =
            dp * dp * var_p + dm * dm * s2_m / n + 2.0 * dp * dm * cov_im / n;
        se_rate = std::sqrt(std::max(0.0, var_r));
    }
    out.rate = {rate, se_rate, n_trials, 0.99};
    return out;
}

McRateCurve mc_rate_curve(Scenario s, const NetworkParams& p, const std::vector<double>& n_grid,
                          long n_trials, std::uint64_t base_seed, const SimOptions& opts) {
    check_estimator_inputs(p, opts, n_trials);
    if (n_grid.empty()) throw std::domain_error("mc_rate_curve: n_grid must be non-empty");
    double prev = 0.0;
    for (double nu : n_grid) {
        if (!(nu > prev)) throw std::domain_error("mc_rate_curve: n_grid must be positive and increasing");
        prev = nu;
    }
    const std::uint64_t tag = scenario_tag(s);
    const long n_chunks = chunk_count(n_trials, opts.chunk_size);
    std::vector<double> times(static_cast<std::size_t>(n_trials));
    std::vector<long> res(static_cast<std::size_t>(n_chunks), 0);
    run_chunked(n_trials, opts.chunk_size, opts.workers, [&](long c, long lo, long hi) {
        long r = 0;
        for (long i = lo; i < hi; ++i) {
            StreamRng rng(derive_seed(base_seed, tag, static_cast<std::uint64_t>(i)));
            times[static_cast<std::size_t>(i)] = run_trial(s, p, rng, opts, &r).decode_time;
        }
        res[static_cast<std::size_t>(c)] = r;
    });

    long resamples = 0;
    for (long r : res) resamples += r;

    // One sorted pass gives the whole rate curve: for each N the success count
    // is a rank and E[min(T, N)] is a prefix sum plus the censored mass.
    std::sort(times.begin(), times.end());
    std::vector<double> prefix(times.size() + 1, 0.0);
    for (std::size_t i = 0; i < times.size(); ++i) prefix[i + 1] = prefix[i] + times[i];

    McRateCurve out;
    out.resamples = resamples;
    out.points.reserve(n_grid.size());
    const double n = static_cast<double>(n_trials);
    for (double nu : n_grid) {
        const std::size_t k = static_cast<std::size_t>(
            std::upper_bound(times.begin(), times.end(), nu) - times.begin());
        const double mean_t = (prefix[k] + (n - static_cast<double>(k)) * nu) / n;
        const double value = p.kbits * (static_cast<double>(k) / n) / mean_t;
        out.points.push_back({nu, value});
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.points.size(); ++i)
        if (out.points[i].value > out.points[best].value) best = i;
    out.n_opt = out.points[best].n_uses;
    out.r_max = out.points[best].value;
    return out;
}

double proportion_std_error(long successes, long n, double z) {
    if (n <= 0 || successes < 0 || successes > n)
        throw std::domain_error("proportion_std_error: need 0 <= successes <= n, n > 0");
    const double nn = static_cast<double>(n);
    if (std::min(successes, n - successes) < 100) {
        const double nt = nn + z * z;
        const double pt = (static_cast<double>(successes) + 0.5 * z * z) / nt;
        return std::sqrt(pt * (1.0 - pt) / nt);
    }
    const double ph = static_cast<double>(successes) / nn;
    return std::sqrt(ph * (1.0 - ph) / nn);
}

}  // namespace miacomp::mc
