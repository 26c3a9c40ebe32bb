"""Exact rational vectors: no floating intermediates anywhere in the geometry."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[Fraction, ...]


def vec(*coords) -> Vec:
    return tuple(Fraction(c) for c in coords)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(t, a: Vec) -> Vec:
    t = Fraction(t)
    return tuple(t * x for x in a)


def vdot(a: Vec, b: Vec):
    return sum(x * y for x, y in zip(a, b))


def vcross(a: Vec, b: Vec) -> Vec:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def rot90(a: Vec) -> Vec:
    """Clockwise quarter turn; outward normal of a ccw polygon edge."""
    return (a[1], -a[0])


def norm_sq(a: Vec):
    return sum(x * x for x in a)


def is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def primitive(a) -> tuple[int, ...]:
    """Integer direction vector with coprime entries, sign of first nonzero > 0."""
    from math import lcm
    denom = 1
    for x in a:
        denom = lcm(denom, Fraction(x).denominator)
    ints = [int(Fraction(x) * denom) for x in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValueError("zero vector has no direction")
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


def primitive_signed(a) -> tuple[int, ...]:
    """Integer direction vector with coprime entries, orientation preserved."""
    from math import lcm
    denom = 1
    for x in a:
        denom = lcm(denom, Fraction(x).denominator)
    ints = [int(Fraction(x) * denom) for x in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(v // g for v in ints)


def parse_rational(s) -> Fraction:
    if isinstance(s, str):
        return Fraction(s)
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def vec_to_json(a: Vec) -> list[str]:
    return [format_rational(x) for x in a]


def vec_from_json(data) -> Vec:
    return tuple(parse_rational(x) for x in data)
