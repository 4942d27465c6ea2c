"""Smoke tests for the Python layer: imports, a few known values, and the
shape of the structured reports.  The heavy numerical validation lives in the
C++ unit and acceptance suites."""

import math

import pytest

import monopot


def test_version_and_exports():
    assert monopot.__version__ == "0.1.0"
    for name in monopot.__all__:
        assert hasattr(monopot, name), name


def test_special_function_values():
    assert monopot.sigma(2) == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert monopot.sigma(3) == pytest.approx(4.0 * math.pi, rel=1e-15)
    assert monopot.sigma(4) == pytest.approx(2.0 * math.pi**2, rel=1e-15)
    # F_2(inf) = 1, F_3(inf) = pi/4
    assert monopot.f_profile_inf(2) == pytest.approx(1.0, rel=1e-14)
    assert monopot.f_profile_inf(3) == pytest.approx(math.pi / 4.0, rel=1e-14)
    assert monopot.f_profile(2, 1.0) == pytest.approx(1.0 - 1.0 / math.sqrt(2.0), rel=1e-12)
    # finite part of Gamma at 0 is -EulerGamma
    assert monopot.fp_gamma(0.0) == pytest.approx(-0.5772156649015329, abs=1e-14)


def test_eval_potential_poisson_value():
    # A_{-1}(x0, xvec) = 2 x0 / (sigma_3 |x|^3); at (1, 0, 0) this is 1/(2 pi).
    (val,) = monopot.eval_potential(2, "A:-1", [[1.0, 0.0, 0.0]])
    assert set(val) == {"1"}
    assert val["1"] == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-14)


def test_eval_potential_rejects_bad_points():
    with pytest.raises(ValueError):
        monopot.eval_potential(2, "A:-1", [[1.0, 0.0]])  # needs m+1 coords


def test_evaluable_matrix():
    assert monopot.evaluable(2, "C:-1")
    assert monopot.evaluable(2, "C:0")
    assert not monopot.evaluable(2, "A:1")  # diverges below m=3
    assert monopot.evaluable(3, "A:1")
    assert not monopot.evaluable(3, "B:2")  # diverges below m=4
    assert monopot.evaluable(4, "B:2")


def test_symbolic_monogenicity_and_chain():
    for m in (2, 3, 4, 5, 6):
        assert monopot.symbolic_cauchy_monogenic(m)
    assert monopot.chain_term_count(3, 1) > 0


def test_fd_residual_report():
    pts = [[0.5, 1.0, 0.2], [-0.4, 0.3, 0.9], [0.7, -0.5, 0.6]]
    rep = monopot.fd_dirac_residual(2, "C:-2", pts, 1e-4)
    assert rep["points"] == 3
    assert rep["max_residual"] <= 1e-5
    assert rep["mean_residual"] <= rep["max_residual"]


def test_boundary_value_pretty():
    assert monopot.boundary_value_pretty(3, "a", -1, "plus") == "delta"
    # b_{-1}^+ is the Hilbert kernel -(2/sigma_4) r^-3 omega
    hk = monopot.boundary_value_pretty(3, "b", -1, "plus")
    assert "r^-3" in hk and "omega" in hk
    assert hk == monopot.hilbert_power_pretty(3, 0.0)
    assert "delta" in monopot.dirac_power_pretty(3, 0.0)


def test_pointwise_limit_side_factor():
    # b_0 flips sign across the boundary exactly when m is odd
    plus = monopot.pointwise_limit(3, "B:0", [1.0, 0.0, 0.0], "plus")
    minus = monopot.pointwise_limit(3, "B:0", [1.0, 0.0, 0.0], "minus")
    assert set(plus) == set(minus)
    for blade, v in plus.items():
        assert minus[blade] == pytest.approx(-v, rel=1e-15)


def test_jump_check_report_schema():
    rep = monopot.jump_check(3, 0)
    assert rep["schema"] == 1
    assert rep["m"] == 3 and rep["n"] == 0
    assert rep["applicable"] and rep["checkable"] and rep["pass"]
    assert len(rep["ladder"]) >= 3
    kinds = {row["kind"] for row in rep["rows"]}
    assert {"delta", "hilbert", "sum"} <= kinds
    for row in rep["rows"]:
        assert {"phi_id", "jump_value", "target_value", "rel_err", "pass"} <= set(row)
        assert row["pass"]


def test_jump_check_even_dimension_parity():
    rep = monopot.jump_check(2, -1)
    assert not rep["applicable"]
    assert rep["pass"]
    assert all(row["kind"] == "raw_zero" for row in rep["rows"])


def test_lemma_check():
    rows = monopot.lemma_check(3, 2)
    assert rows and all(row["pass"] for row in rows)
    exact = [row for row in rows if not row["table_level"]]
    assert exact and max(row["err"] for row in exact) <= 1e-10
