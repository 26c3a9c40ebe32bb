"""Certified high-precision reals on top of mpmath interval arithmetic.

Every non-rational quantity in the geometry modules is carried as a directed
[lo, hi] enclosure so that inequality verdicts are never artifacts of
rounding.  Precision in decimal digits comes from VALHARM_PRECISION
(default 50); a few guard digits are added internally.
"""

from __future__ import annotations

import os
from fractions import Fraction

from mpmath import iv, mp, mpf

DEFAULT_DIGITS = 50
_GUARD = 10


def precision_digits() -> int:
    raw = os.environ.get("VALHARM_PRECISION", "")
    try:
        digits = int(raw)
    except ValueError:
        digits = DEFAULT_DIGITS
    if digits <= 0:
        digits = DEFAULT_DIGITS
    return digits


def configure() -> int:
    digits = precision_digits()
    iv.dps = digits + _GUARD
    mp.dps = digits + _GUARD
    return digits


configure()


def from_fraction(q: Fraction | int):
    q = Fraction(q)
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def from_int(k: int):
    return iv.mpf(k)


def iv_from_decimal(s: str):
    """Enclosure of a decimal literal such as '1e-25'."""
    return iv.mpf(s)


def pi_iv():
    return +iv.pi


def sqrt_iv(x):
    return iv.sqrt(x)


def sqrt_of_fraction(q: Fraction):
    if q < 0:
        raise ValueError("sqrt of negative rational")
    return iv.sqrt(from_fraction(q))


def root_iv(x, k: int):
    """k-th root of a non-negative interval."""
    if x.b < 0:
        raise ValueError("root of a negative interval")
    lo = iv.mpf([max(x.a, mpf(0)), max(x.a, mpf(0))])
    hi = iv.mpf([x.b, x.b])
    if x.b == 0:
        return iv.mpf(0)
    upper = iv.exp(iv.log(hi) / k).b if x.b > 0 else mpf(0)
    lower = iv.exp(iv.log(lo) / k).a if x.a > 0 else mpf(0)
    return iv.mpf([lower, upper])


def acos_iv(x):
    """Interval arccos via atan2; input clamped to [-1, 1]."""
    one = iv.mpf(1)
    lo = min(max(x.a, mpf(-1)), mpf(1))
    hi = min(max(x.b, mpf(-1)), mpf(1))
    x = iv.mpf([lo, hi])
    y = iv.sqrt(one - x * x)
    return iv.atan2(y, x)


def atan2_iv(y, x):
    return iv.atan2(y, x)


def endpoints(x):
    return mpf(x.a), mpf(x.b)


def midpoint_float(x) -> float:
    lo, hi = endpoints(x)
    return float((lo + hi) / 2)


def width(x):
    lo, hi = endpoints(x)
    return hi - lo


def width_iv(x):
    lo, hi = endpoints(x)
    return iv.mpf(hi - lo)


def rel_width_float(x) -> float:
    lo, hi = endpoints(x)
    mid = abs(lo + hi) / 2
    if mid == 0:
        return float(hi - lo)
    return float((hi - lo) / mid)


def certainly_ge(x, y) -> bool:
    """True when x >= y holds for every pair of points in the enclosures."""
    return x.a >= y.b


def certainly_gt(x, y) -> bool:
    return x.a > y.b


def certainly_lt(x, y) -> bool:
    return x.b < y.a


def overlap(x, y) -> bool:
    return not (x.b < y.a or y.b < x.a)


def intersect(x, y):
    """Intersection of two enclosures; None when disjoint."""
    lo = max(x.a, y.a)
    hi = min(x.b, y.b)
    if lo > hi:
        return None
    return iv.mpf([lo, hi])


def contains_zero(x) -> bool:
    return x.a <= 0 <= x.b


def abs_le(x, bound) -> bool:
    """|x| <= bound certified (bound an interval or exact number)."""
    b = bound if hasattr(bound, "a") else iv.mpf(bound)
    return -b.a <= x.a and x.b <= b.a


def to_json(x) -> dict:
    digits = precision_digits()
    lo, hi = endpoints(x)
    return {"lo": mp.nstr(lo, digits, strip_zeros=False),
            "hi": mp.nstr(hi, digits, strip_zeros=False)}


def hull(xs):
    lo = min(x.a for x in xs)
    hi = max(x.b for x in xs)
    return iv.mpf([lo, hi])
