"""Smoke tests for the python package against pinned exact and numeric values."""

from fractions import Fraction

import pytest

import moonj


def test_version():
    assert moonj.__version__ == "0.1.0"


def test_expand_hexagonal_head():
    b = moonj.expand("rho", 9)
    assert len(b) == 10
    assert b[3] == 13824
    assert b[6] == -39744
    assert b[9] == Fraction(1920024, 35)
    assert all(b[n] == 0 for n in (0, 1, 2, 4, 5, 7, 8))


def test_expand_square_head():
    b = moonj.expand("i", 6)
    assert b[0] == 1728
    assert b[2] == 20736
    assert b[4] == 105984
    assert b[6] == Fraction(1594112, 5)
    assert b[1] == b[3] == b[5] == 0


def test_flat_coefficients():
    c = moonj.flat_coefficients("rho", 4)
    assert c == [0, 1, 0, 0, Fraction(-1, 6)]


def test_flat_eval_square_third():
    value = moonj.flat_eval("i", "1/3")
    assert value.imag == pytest.approx(0.0, abs=1e-15)
    assert value.real == pytest.approx(0.3830612321094436, rel=1e-12)


def test_flat_eval_symbolic_point():
    value = moonj.flat_eval("rho", "sqrt3-1")
    assert value.real == pytest.approx(0.6915920154693203, rel=1e-12)


def test_flat_eval_outside_disk():
    with pytest.raises(ArithmeticError):
        moonj.flat_eval("i", "3/5")


def test_core_strings_carry_high_precision():
    d = moonj._core.flat_eval("i", "1/3", 1000, 50)
    assert d["digits"] == 50
    assert d["re"].replace(".", "").startswith("38306123210944362881")


def test_j_eval_fixed_point():
    assert moonj.j_eval("i").real == pytest.approx(1728.0, abs=1e-9)
    assert moonj.j_eval("0.5+0.5i").real == pytest.approx(1728.0, abs=1e-9)


def test_j_eval_lower_half_plane():
    with pytest.raises(ArithmeticError):
        moonj.j_eval("0.5-0.5i")


def test_conj_rhs_exact():
    assert moonj.conj_rhs("i", "1/3") == Fraction(1906624, 225)
    assert moonj.conj_rhs("rho", "1/2") == Fraction(9261, 8)
    assert moonj.conj_rhs("i", "0") == 1728
    with pytest.raises(ValueError):
        moonj.conj_rhs("i", "sqrt3-1")


def test_verify_square_third():
    rep = moonj.verify("i", "1/3")
    assert rep["pass"] is True
    assert rep["exact_rhs"] == Fraction(1906624, 225)
    assert rep["rhs"].real == pytest.approx(1906624 / 225, rel=1e-12)
    assert rep["digits_matched"] >= 25


def test_verify_symbolic_point():
    rep = moonj.verify("rho", "sqrt3-1")
    assert rep["pass"] is True
    assert rep["exact_rhs"] is None  # populated only for rational t
    assert rep["rhs"].real == pytest.approx(1728.0, abs=1e-9)


def test_verify_pole_rejected():
    with pytest.raises(ArithmeticError):
        moonj.verify("i", "3/5")


def test_verify_exact():
    rep = moonj.verify_exact("rho", 12)
    assert rep["pass"] is True


def test_invalid_inputs():
    with pytest.raises(ValueError):
        moonj.expand("rho", -1)
    with pytest.raises(ValueError):
        moonj.expand("weierstrass", 4)
    with pytest.raises(ValueError):
        moonj.j_eval("i", digits=0)


def test_run_suite_exact():
    checks = moonj.run_suite("exact")
    assert len(checks) == 8
    assert all(c["pass"] for c in checks)
    names = {c["name"] for c in checks}
    assert "square-contour-oracle" in names
    with pytest.raises(ValueError):
        moonj.run_suite("nonsense")
