"""Exact special values of generalized multiple Hurwitz zeta functions.

Thin convenience layer over the compiled ``_mhz`` extension: rationals cross
the boundary as ``p/q`` strings and are lifted to :class:`fractions.Fraction`
here.
"""

from fractions import Fraction

from ._mhz import (
    bernoulli as _bernoulli,
    bernoulli_polynomial as _bernoulli_polynomial,
    hurwitz_special as _hurwitz_special,
    is_polar,
    oracle as _oracle,
    value as _value,
)

__all__ = [
    "bernoulli",
    "bernoulli_polynomial",
    "hurwitz_special",
    "is_polar",
    "oracle",
    "value",
    "zeta",
]


def _as_str_list(alpha):
    if isinstance(alpha, (str, int, Fraction)):
        alpha = [alpha]
    return [str(Fraction(a)) for a in alpha]


def value(alpha, N, variant="corrected"):
    """Full evaluation report as a dict; ``value`` entry is a Fraction."""
    report = _value(_as_str_list(alpha), list(N), variant)
    if not report["polar"]:
        report["value"] = Fraction(report["value"])
    return report


def zeta(alpha, N, variant="corrected"):
    """Just the value, as a Fraction (raises on a polar point)."""
    report = value(alpha, N, variant)
    if report["polar"]:
        raise ZeroDivisionError(f"polar point, witness {report['witness']}")
    return report["value"]


def hurwitz_special(alpha, N):
    """One-variable value at -N."""
    return Fraction(_hurwitz_special(str(Fraction(alpha)), int(N)))


def oracle(alpha, N, allow_irregular=False):
    """Independent iterated-sum evaluation at -N."""
    return Fraction(_oracle(_as_str_list(alpha), list(N), allow_irregular))


def bernoulli(m):
    """Bernoulli number B_m."""
    return Fraction(_bernoulli(int(m)))


def bernoulli_polynomial(m):
    """Ascending coefficients of B_m(x)."""
    return [Fraction(c) for c in _bernoulli_polynomial(int(m))]
