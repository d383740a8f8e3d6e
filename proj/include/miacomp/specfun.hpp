#pragma once

namespace miacomp::specfun {

// The three Gauss hypergeometric families behind every analytic formula here,
// all over nonpositive arguments -nu and parameterized by delta = 2/alpha.
// Supported domain: delta in (0.01, 0.99), nu >= 0 (std::domain_error outside).
// Relative accuracy <= 1e-10 over nu in [0, 1e6].

// F(nu) = 2F1([1,-delta]; 1-delta; -nu); F >= 1, increasing, F(0) = 1.
double hyp_f(double delta, double nu);

// H(theta) = delta*theta/(1-delta) * 2F1([1,1-delta]; 2-delta; -theta).
// Satisfies 1 + H(theta) = F(theta); computed by its own series, so the
// identity is a genuine cross-check, not a definition.
double hyp_h(double delta, double theta);

// dF/dnu = delta/(1-delta) * 2F1([2,1-delta]; 2-delta; -nu) > 0.
double hyp_f_deriv(double delta, double nu);

}  // namespace miacomp::specfun
