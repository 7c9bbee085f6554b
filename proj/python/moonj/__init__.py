"""Elliptic expansions of the j function at its fixed points.

Exact data is converted to :class:`fractions.Fraction`; numeric values are
truncated to python ``complex``. The underlying extension module ``_core``
keeps every value as a string at full working precision, so callers needing
more than double precision can use it directly.
"""

from fractions import Fraction

from . import _core

__version__ = _core.__version__

__all__ = [
    "expand",
    "flat_coefficients",
    "flat_eval",
    "j_eval",
    "conj_rhs",
    "verify",
    "verify_exact",
    "run_suite",
]


def _to_complex(d):
    return complex(float(d["re"]), float(d["im"]))


def expand(case_name, order):
    """Exact expansion coefficients b(0..order) for case "rho" or "i"."""
    return [Fraction(s) for s in _core.expand(case_name, order)]


def flat_coefficients(case_name, order):
    """Exact flat coordinate series coefficients through the given order."""
    return [Fraction(s) for s in _core.flat_coefficients(case_name, order)]


def flat_eval(case_name, t, terms=1000, digits=50):
    """Flat coordinate value at t ("p/q", decimal, or "sqrt3-1"), as complex."""
    return _to_complex(_core.flat_eval(case_name, str(t), terms, digits))


def j_eval(tau, digits=50):
    """j at a point of the upper half-plane given as a literal like "0.5+0.5i"."""
    return _to_complex(_core.j_eval(str(tau), digits))


def conj_rhs(case_name, t):
    """Algebraic side of the identity at rational t, as an exact Fraction."""
    return Fraction(_core.conj_rhs(case_name, str(t)))


def verify(case_name, t, digits=50, terms=1000):
    """Numeric verification at one point.

    Returns the report dict with ``lhs`` and ``rhs`` converted to complex and
    ``exact_rhs`` to a Fraction where one exists.
    """
    rep = _core.verify(case_name, str(t), digits, terms)
    rep["lhs"] = _to_complex(rep["lhs"])
    rep["rhs"] = _to_complex(rep["rhs"])
    try:
        rep["exact_rhs"] = Fraction(rep["exact_rhs"])
    except (ValueError, ZeroDivisionError):
        rep["exact_rhs"] = None
    return rep


def verify_exact(case_name, order):
    """Coefficientwise verification of the identity through the given order."""
    return _core.verify_exact(case_name, order)


def run_suite(which, digits=50, samples=0, seed=20260822):
    """Run one named check suite; returns a list of {name, pass, detail} dicts."""
    return _core.run_suite(which, digits, samples, seed)
