#pragma once

#include <functional>
#include <vector>

namespace miacomp::quad {

// Adaptive Simpson on [a,b]. Local acceptance: |richardson error| <=
// max(abs_tol_local, rel_tol*|subinterval estimate|), abs budget halved per
// split. Throws AccuracyError when max_depth is exhausted before acceptance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-10, double rel_tol = 1e-9, int max_depth = 55);

// Nodes and weights for generalized Gauss-Laguerre quadrature,
// integral_0^inf x^alpha e^-x f(x) dx ~= sum w_i f(x_i),
// via the Golub-Welsch eigendecomposition of the Jacobi matrix.
struct GaussLaguerre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLaguerre& gamma_shape2();  // n=32, alpha=1: weight x e^-x
    static GaussLaguerre generalized(int n, double alpha);
};

}  // namespace miacomp::quad
