"""Zonotopes: Minkowski sums of segments, the shape projection bodies take."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property

from .polytope import Polytope
from .vectors import (Vec, vadd, vcross, vdot, vec_from_json, vec_to_json,
                      vscale, primitive)


def _canonical_generators(gens: list[Vec]) -> tuple[Vec, ...]:
    """Drop zeros, flip each segment to its lex-positive direction and merge
    positively-parallel generators ([0,a n] + [0,b n] = [0,(a+b) n])."""
    merged: dict[tuple, Vec] = {}
    for g in gens:
        g = tuple(Fraction(c) for c in g)
        if all(x == 0 for x in g):
            continue
        for x in g:
            if x != 0:
                if x < 0:
                    g = tuple(-y for y in g)
                break
        key = primitive(g)
        merged[key] = vadd(merged[key], g) if key in merged else g
    return tuple(sorted(merged.values()))


class Zonotope:
    """Sum of centered segments [-g/2, g/2] translated by center."""

    def __init__(self, generators, center=None, dim: int | None = None):
        gens = [tuple(Fraction(c) for c in g) for g in generators]
        if dim is None:
            dim = len(gens[0]) if gens else (len(center) if center else 3)
        self.dim = dim
        self.generators: tuple[Vec, ...] = _canonical_generators(gens)
        self.center: Vec = (tuple(Fraction(c) for c in center) if center is not None
                            else (Fraction(0),) * dim)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Zonotope) and self.dim == other.dim
                and self.generators == other.generators and self.center == other.center)

    def __repr__(self) -> str:
        return f"Zonotope(dim={self.dim}, generators={len(self.generators)})"

    def is_origin_symmetric(self) -> bool:
        return all(x == 0 for x in self.center)

    def support(self, u: Vec) -> Fraction:
        u = tuple(Fraction(c) for c in u)
        h = vdot(self.center, u)
        for g in self.generators:
            h += abs(vdot(g, u)) / 2
        return h

    def translate(self, x: Vec) -> "Zonotope":
        return Zonotope(self.generators, vadd(self.center, tuple(Fraction(c) for c in x)), self.dim)

    def scale(self, t) -> "Zonotope":
        t = Fraction(t)
        return Zonotope([vscale(t, g) for g in self.generators],
                        vscale(t, self.center), self.dim)

    @cached_property
    def _volume(self) -> Fraction:
        if self.dim == 2:
            return sum((abs(a[0] * b[1] - a[1] * b[0])
                        for a, b in itertools.combinations(self.generators, 2)),
                       Fraction(0))
        total = Fraction(0)
        for a, b, c in itertools.combinations(self.generators, 3):
            total += abs(vdot(a, vcross(b, c)))
        return total

    def volume(self) -> Fraction:
        return self._volume

    def total_generator_norm_sq(self) -> list[Fraction]:
        return [vdot(g, g) for g in self.generators]

    @cached_property
    def _polytope(self) -> Polytope:
        """Explicit Minkowski summation of the segments (exact hull)."""
        body = Polytope([self.center], self.dim)
        for g in self.generators:
            half = vscale(Fraction(1, 2), g)
            seg = Polytope([half, vscale(Fraction(-1, 2), g)], self.dim)
            body = body.minkowski(seg)
        return body

    def to_polytope(self) -> Polytope:
        return self._polytope

    def facet_directions(self) -> list[tuple[int, ...]]:
        """Primitive outward facet normals, one per +/- pair (3D)."""
        dirs = {}
        for a, b in itertools.combinations(self.generators, 2):
            n = vcross(a, b)
            if all(x == 0 for x in n):
                continue
            dirs[primitive(n)] = True
        return sorted(dirs)

    def projection_body(self) -> "Zonotope":
        """Projection body of this zonotope, computed per facet direction.

        The facet of Z in direction n is the 2D zonotope of the generators
        orthogonal to n with area vector sum |det(g_a, g_b, n)| * n/(n.n);
        facets come in opposite pairs +-n, so each direction contributes the
        merged generator twice.
        """
        if self.dim != 3:
            raise ValueError("projection body of a zonotope implemented for 3D")
        gens_out: list[Vec] = []
        for n in self.facet_directions():
            perp = [g for g in self.generators if vdot(g, n) == 0]
            if len(perp) < 2:
                continue
            coef = Fraction(0)
            for a, b in itertools.combinations(perp, 2):
                coef += abs(vdot(vcross(a, b), n))
            if coef == 0:
                continue
            nn = vdot(n, n)
            gens_out.append(vscale(2 * coef / nn, n))
        return Zonotope(gens_out, None, 3)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "generators": [vec_to_json(g) for g in self.generators],
            "center": vec_to_json(self.center),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Zonotope":
        return cls([vec_from_json(g) for g in data["generators"]],
                   vec_from_json(data["center"]), int(data["dim"]))
