#include "miacomp/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "miacomp/quadrature.hpp"
#include "miacomp/specfun.hpp"

namespace miacomp::analytic {

namespace {

constexpr double kLn2 = 0.6931471805599453;
// exp argument above which a CCDF is 1 to within 1e-140: the t -> 0 guard.
constexpr double kLogSirMax = 500.0;
// If a union bound puts the missing tail mass below this, the bound is 1
// to better than the 1e-8 accuracy budget and the convolution is skipped.
constexpr double kTailSkip = 1e-9;
constexpr double kConvAbsTol = 1e-12;
constexpr double kConvRelTol = 1e-10;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// SIR threshold for a single codeword spanning t uses: 2^(K/t) - 1.
double nc_threshold(const NetworkParams& p, double t) {
    return std::expm1(p.kbits * kLn2 / t);
}

// Combined threshold for two codewords at t/2 uses each: 2*(2^(K/2t) - 1).
double mia_threshold(const NetworkParams& p, double t) {
    return 2.0 * std::expm1(p.kbits * kLn2 / (2.0 * t));
}

double convolve_split(const std::function<double(double)>& f, double gamma) {
    const double mid = 0.5 * gamma;
    return quad::adaptive_simpson(f, 0.0, mid, kConvAbsTol, kConvRelTol) +
           quad::adaptive_simpson(f, mid, gamma, kConvAbsTol, kConvRelTol);
}

}  // namespace

double g_ccdf(double delta, double nu) { return 1.0 / specfun::hyp_f(delta, nu); }

double g_ccdf_deriv(double delta, double nu) {
    const double f = specfun::hyp_f(delta, nu);
    return -specfun::hyp_f_deriv(delta, nu) / (f * f);
}

double gu_nc_ccdf(const NetworkParams& p, double t) {
    p.validate();
    if (!(t > 0.0) || p.kbits * kLn2 / t > kLogSirMax) return 1.0;
    const double theta = nc_threshold(p, t);
    const double delta = p.delta();
    // 1 - G(theta) = 1 - 1/F = H/F, with no small-theta cancellation.
    const double h = specfun::hyp_h(delta, theta);
    return h / specfun::hyp_f(delta, theta);
}

double gu_mia_ccdf_bound(const NetworkParams& p, double t) {
    p.validate();
    if (!(t > 0.0) || p.kbits * kLn2 / (2.0 * t) > kLogSirMax) return 1.0;
    const double gamma = mia_threshold(p, t);
    if (gamma == 0.0) return 0.0;
    const double delta = p.delta();
    // Union bound on the complement: P(Y1 + Y2 > gamma) <= 2*G(gamma/2).
    if (2.0 * g_ccdf(delta, 0.5 * gamma) < kTailSkip) return 1.0;
    // P(Y1 + Y2 <= gamma) for i.i.d. Y with CCDF G, as
    // integral_0^gamma (G(gamma-y) - 1) G'(y) dy, written cancellation-free.
    auto integrand = [delta, gamma](double y) {
        const double hg = specfun::hyp_h(delta, gamma - y);
        const double fy = specfun::hyp_f(delta, y);
        const double fpy = specfun::hyp_f_deriv(delta, y);
        return hg / (1.0 + hg) * fpy / (fy * fy);
    };
    return clamp01(convolve_split(integrand, gamma));
}

double wu_nc_ccdf(const NetworkParams& p, double t) {
    p.validate();
    if (!(t > 0.0) || p.kbits * kLn2 / t > kLogSirMax) return 1.0;
    const double theta = nc_threshold(p, t);
    if (theta == 0.0) return 0.0;
    const double delta = p.delta();
    // Success prob is q^2 with q = 1/((1+theta) F(theta)); expand 1 - q^2 =
    // (1 - q)(1 + q) with 1 - q = (theta*F + H)/((1+theta) F), all positive.
    const double f = specfun::hyp_f(delta, theta);
    const double h = specfun::hyp_h(delta, theta);
    const double q = 1.0 / ((1.0 + theta) * f);
    const double one_minus_q = (theta * f + h) / ((1.0 + theta) * f);
    return clamp01(one_minus_q * (1.0 + q));
}

double wu_mia_ccdf_bound(const NetworkParams& p, double t) {
    p.validate();
    if (!(t > 0.0) || p.kbits * kLn2 / (2.0 * t) > kLogSirMax) return 1.0;
    const double gamma = mia_threshold(p, t);
    if (gamma == 0.0) return 0.0;
    const double delta = p.delta();
    const auto& gl = quad::GaussLaguerre::gamma_shape2();
    const std::size_t n = gl.nodes.size();

    // Union bound over the vertex-distance mixture: the conditional CCDFs are
    // exp(-(s/2) H(y)) and exp(-(s/2) H(y))/(1+y) with s ~ Gamma(2,1).
    const double hmid = specfun::hyp_h(delta, 0.5 * gamma);
    double tail = 0.0;
    for (std::size_t i = 0; i < n; ++i) tail += gl.weights[i] * std::exp(-0.5 * gl.nodes[i] * hmid);
    if (2.0 * tail < kTailSkip) return 1.0;

    // Fubini over the distance mixture: integrate in y the Gauss-Laguerre
    // average of the conditional convolution integrand. The bracket
    // 1 - exp(-x)/(1+g) is expanded as (g + (1 - exp(-x)))/(1+g) to keep it
    // exact when both x and g are small.
    auto integrand = [delta, gamma, &gl, n](double y) {
        const double hy = specfun::hyp_h(delta, y);
        const double hgy = specfun::hyp_h(delta, gamma - y);
        const double fpy = specfun::hyp_f_deriv(delta, y);
        const double g = gamma - y;
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s2 = 0.5 * gl.nodes[i];
            const double bracket = (g - std::expm1(-s2 * hgy)) / (1.0 + g);
            acc += gl.weights[i] * bracket * s2 * std::exp(-s2 * hy);
        }
        return acc * fpy;
    };
    return clamp01(convolve_split(integrand, gamma));
}

double ccdf(const NetworkParams& p, Scenario s, double t) {
    if (s == kGuNc) return gu_nc_ccdf(p, t);
    if (s == kGuMia) return gu_mia_ccdf_bound(p, t);
    if (s == kWuNc) return wu_nc_ccdf(p, t);
    return wu_mia_ccdf_bound(p, t);
}

CurveFn ccdf_fn(const NetworkParams& p, Scenario s) {
    p.validate();
    return [p, s](double t) { return ccdf(p, s, t); };
}

CurveMethod scenario_method(Scenario s) {
    return s.cooperation == Cooperation::mia ? CurveMethod::lower_bound : CurveMethod::exact;
}

double success_prob(const CurveFn& curve, double n_uses) { return clamp01(1.0 - curve(n_uses)); }

double expected_time(const CurveFn& curve, double n_uses) {
    if (!(n_uses > 0.0)) throw std::domain_error("expected_time: n_uses must be positive");
    return quad::adaptive_simpson(curve, 0.0, n_uses, 1e-10, 1e-9);
}

double rate(const CurveFn& curve, const NetworkParams& p, double n_uses) {
    p.validate();
    const double ps = success_prob(curve, n_uses);
    if (ps == 0.0) return 0.0;
    return p.kbits * ps / expected_time(curve, n_uses);
}

namespace {

// 8-point Gauss-Legendre on [-1, 1], used pairwise per grid panel. The rate
// grids are dense enough that two panels per cell reach ~1e-12 relative
// accuracy on these smooth monotone integrands.
constexpr double kGl8X[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                             0.9602898564975363};
constexpr double kGl8W[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                             0.1012285362903763};

double gl8(const CurveFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
        acc += kGl8W[i] * (f(c - h * kGl8X[i]) + f(c + h * kGl8X[i]));
    return acc * h;
}

double panel_integral(const CurveFn& f, double a, double b) {
    if (a == 0.0)  // head panel crosses the t_min guard kink: integrate adaptively
        return quad::adaptive_simpson(f, a, b, 1e-10, 1e-9);
    const double m = 0.5 * (a + b);
    return gl8(f, a, m) + gl8(f, m, b);
}

void check_grid(const std::vector<double>& n_grid) {
    if (n_grid.empty()) throw std::domain_error("rate grid must be non-empty");
    double prev = 0.0;
    for (double n : n_grid) {
        if (!(n > prev)) throw std::domain_error("rate grid must be positive and increasing");
        prev = n;
    }
}

}  // namespace

std::vector<RatePoint> rate_curve(const CurveFn& curve, const NetworkParams& p,
                                  const std::vector<double>& n_grid) {
    p.validate();
    check_grid(n_grid);
    std::vector<RatePoint> out;
    out.reserve(n_grid.size());
    double prefix = 0.0;
    double prev = 0.0;
    for (double n : n_grid) {
        prefix += panel_integral(curve, prev, n);
        out.push_back({n, p.kbits * success_prob(curve, n) / prefix});
        prev = n;
    }
    return out;
}

RateMax max_rate(const CurveFn& curve, const NetworkParams& p, const std::vector<double>& n_grid) {
    const auto pts = rate_curve(curve, p, n_grid);
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].value > pts[best].value) best = i;
    if (best == 0 || best + 1 == pts.size())
        return {pts[best].n_uses, pts[best].value, true};

    // Refine within the bracketing cells by golden-section search; the rate
    // denominator is rebuilt as a fixed base integral plus a short adaptive
    // extension so each probe costs one small quadrature.
    const double a0 = pts[best - 1].n_uses;
    const double b0 = pts[best + 1].n_uses;
    const double base = expected_time(curve, a0);
    auto value_at = [&](double nu) {
        const double et = base + quad::adaptive_simpson(curve, a0, nu, 1e-11, 1e-10);
        return p.kbits * success_prob(curve, nu) / et;
    };
    constexpr double kInvPhi = 0.6180339887498949;
    double a = a0, b = b0;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = value_at(c);
    double fd = value_at(d);
    const double tol = 1e-9 * b0;
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = value_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = value_at(d);
        }
    }
    const double n_opt = 0.5 * (a + b);
    const double refined = value_at(n_opt);
    if (refined >= pts[best].value) return {n_opt, refined, false};
    return {pts[best].n_uses, pts[best].value, false};
}

RateGainResult rate_gain(const NetworkParams& p, UserClass user_class,
                         const std::vector<double>& n_grid) {
    const Scenario nc{user_class, Cooperation::nc};
    const Scenario mia{user_class, Cooperation::mia};
    RateGainResult out;
    out.nc = max_rate(ccdf_fn(p, nc), p, n_grid);
    out.mia = max_rate(ccdf_fn(p, mia), p, n_grid);
    out.gain = out.mia.r_max / out.nc.r_max;
    return out;
}

double outage_asymptote(const NetworkParams& p, Scenario s, double n_uses) {
    p.validate();
    if (!(n_uses > 0.0)) throw std::domain_error("outage_asymptote: n_uses must be positive");
    const double delta = p.delta();
    const double ratio = delta / (1.0 - delta);
    const double kn = p.kbits * kLn2 / n_uses;
    if (s == kGuNc) return kn * ratio;
    if (s == kGuMia) return 0.5 * ratio * ratio * kn * kn;
    if (s == kWuNc) return 2.0 * kn / (1.0 - delta);
    // Worst-case MIA: the fourth moment of the vertex distance carries the
    // geometry; E[D^4] = 6/(pi*lambda)^2 cancels the density exactly.
    const double pl = M_PI * p.lambda;
    const double ed4 = 6.0 / (pl * pl);
    const double half_kn = kn / std::sqrt(2.0);
    return half_kn * half_kn * ratio * ratio * (0.5 * pl) * (0.5 * pl) * ed4;
}

double diversity_estimate(const std::vector<double>& n_grid, const std::vector<double>& ps_values) {
    if (n_grid.size() != ps_values.size() || n_grid.size() < 2)
        throw std::domain_error("diversity_estimate: need matching grids with >= 2 points");
    const std::size_t n = n_grid.size();
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double outage = 1.0 - ps_values[i];
        if (!(outage > 0.0) || !(outage < 0.1))
            throw std::domain_error("diversity_estimate: outage " + std::to_string(outage) +
                                    " outside the asymptotic regime (0, 0.1)");
        x[i] = -std::log(n_grid[i]);
        y[i] = std::log(outage);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

std::pair<double, double> diversity_window(const NetworkParams& p, Scenario s, double outage_hi,
                                           double outage_lo) {
    if (!(outage_lo > 0.0) || !(outage_hi > outage_lo) || !(outage_hi < 1.0))
        throw std::domain_error("diversity_window: need 0 < outage_lo < outage_hi < 1");
    // The asymptotes are exactly c / N^d, so c is the value at N = 1.
    const double c = outage_asymptote(p, s, 1.0);
    const double d = static_cast<double>(s.codewords());
    return {std::pow(c / outage_hi, 1.0 / d), std::pow(c / outage_lo, 1.0 / d)};
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi >= lo) || points < 1)
        throw std::domain_error("log_grid: need 0 < lo <= hi and points >= 1");
    std::vector<double> g(static_cast<std::size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    g.back() = hi;
    return g;
}

std::vector<double> lin_grid(double lo, double hi, int points) {
    if (!(hi >= lo) || points < 1)
        throw std::domain_error("lin_grid: need lo <= hi and points >= 1");
    std::vector<double> g(static_cast<std::size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + step * i;
    g.back() = hi;
    return g;
}

}  // namespace miacomp::analytic
