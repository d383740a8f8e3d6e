import math

import pytest

import miacomp as mcp


@pytest.fixture
def params():
    return mcp.NetworkParams(lam=1.0, alpha=3.0, kbits=75.0)


def test_scenarios_listed():
    assert mcp.scenarios() == ["gu-nc", "gu-mia", "wu-nc", "wu-mia"]


def test_special_function_identity():
    f = mcp.hyp_f(0.5, 1.0)
    assert f == pytest.approx(1.0 + math.pi / 4.0, rel=1e-10)
    assert 1.0 + mcp.hyp_h(0.5, 1.0) == pytest.approx(f, rel=1e-12)
    assert mcp.sir_ccdf(0.5, 1.0) == pytest.approx(1.0 / f, rel=1e-12)


def test_ccdf_curves_monotone(params):
    grid = mcp.log_grid(25.0, 1500.0, 20)
    for scenario in mcp.scenarios():
        values = mcp.ccdf_curve(params, scenario, grid)
        assert all(0.0 <= v <= 1.0 for v in values)
        assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))
        assert values[0] == pytest.approx(mcp.ccdf(params, scenario, grid[0]), rel=1e-12)


def test_cooperation_helps(params):
    n = 300.0
    assert mcp.success_prob(params, "gu-mia", n) >= mcp.success_prob(params, "gu-nc", n)
    assert mcp.success_prob(params, "wu-mia", n) >= mcp.success_prob(params, "wu-nc", n)


def test_rate_gain_shape(params):
    gain = mcp.rate_gain(params, "worst-case", mcp.log_grid(4.0, 1500.0, 120))
    assert gain["gain"] > 1.0
    assert gain["mia_n_opt"] < gain["nc_n_opt"]


def test_mc_estimates_are_deterministic(params):
    grid = [100.0, 400.0]
    a = mcp.estimate_ccdf(params, "gu-nc", grid, n_trials=2000, seed=7, workers=1)
    b = mcp.estimate_ccdf(params, "gu-nc", grid, n_trials=2000, seed=7, workers=2)
    assert a["values"] == b["values"]
    assert a["std_error"] == b["std_error"]
    assert a["resamples"] == 0


def test_mc_tracks_analytic(params):
    est = mcp.estimate_ps_rate(params, "gu-nc", 400.0, n_trials=4000, seed=11)
    exact = mcp.success_prob(params, "gu-nc", 400.0)
    assert est["ps"] == pytest.approx(exact, abs=5.0 * est["ps_std_error"])


def test_domain_errors(params):
    with pytest.raises(ValueError):
        mcp.ccdf(params, "no-such-scenario", 100.0)
    with pytest.raises(ValueError):
        mcp.hyp_f(0.5, -1.0)
