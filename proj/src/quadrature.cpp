#include "miacomp/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "miacomp/errors.hpp"

namespace miacomp::quad {

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    double rel_tol;
    int max_depth;
};

double simpson_panel(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic recursive adaptive Simpson with Richardson correction.  Depth
// exhaustion before the tolerance is met is reported, not papered over.
double simpson_recurse(const SimpsonState& st, double a, double b, double fa, double fm, double fb,
                       double whole, double abs_budget, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm);
    const double frm = (*st.f)(rm);
    const double left = simpson_panel(fa, flm, fm, m - a);
    const double right = simpson_panel(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    const double tol = std::max(abs_budget, st.rel_tol * std::abs(left + right));
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= st.max_depth)
        throw AccuracyError("adaptive_simpson: depth limit " + std::to_string(st.max_depth) +
                            " reached, panel error " + std::to_string(std::abs(delta) / 15.0));
    const double half = 0.5 * abs_budget;
    return simpson_recurse(st, a, m, fa, flm, fm, left, half, depth + 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, half, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double abs_tol,
                        double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    SimpsonState st{&f, rel_tol, max_depth};
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson_panel(fa, fm, fb, b - a);
    return simpson_recurse(st, a, b, fa, fm, fb, whole, abs_tol, 0);
}

GaussLaguerre GaussLaguerre::generalized(int n, double alpha) {
    // Golub-Welsch: eigen-decompose the Jacobi matrix of the generalized
    // Laguerre recurrence; weights follow from the first eigenvector rows.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) jacobi(k, k) = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) {
        const double off = std::sqrt(k * (k + alpha));
        jacobi(k, k - 1) = off;
        jacobi(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    const double mu0 = std::tgamma(alpha + 1.0);
    GaussLaguerre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = solver.eigenvalues()(k);
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v0 * v0;
    }
    return rule;
}

const GaussLaguerre& GaussLaguerre::gamma_shape2() {
    static const GaussLaguerre rule = GaussLaguerre::generalized(32, 1.0);
    return rule;
}

}  // namespace miacomp::quad
