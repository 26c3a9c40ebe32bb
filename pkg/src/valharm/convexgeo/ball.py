"""Polytopal two-sided approximations of the Euclidean unit ball.

The ball is never an exact first-class body: every occurrence resolves to an
inscribed/circumscribed polytope pair from an icosahedron subdivision
schedule, so ball-dependent quantities carry certified enclosures.  Vertices
share one power-of-two denominator (tiny integers for the hull predicates) and
sit just inside the sphere; convexity of the mesh is verified exactly, and the
outer body is the inner one scaled by a certified inradius lower bound.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .hull import orient3d, scale_to_int
from .polytope import Polytope
from .vectors import Vec, vcross, vdot, vsub


def _icosahedron() -> tuple[list[tuple[float, float, float]], list[tuple[int, int, int]]]:
    phi = (1 + math.sqrt(5)) / 2
    verts = []
    for a, b in ((1, phi), (-1, phi), (1, -phi), (-1, -phi)):
        verts.append((0.0, a, b))
        verts.append((a, b, 0.0))
        verts.append((b, 0.0, a))
    norm = math.sqrt(1 + phi * phi)
    verts = [(x / norm, y / norm, z / norm) for x, y, z in verts]
    faces = []
    for i in range(12):
        for j in range(i + 1, 12):
            for k in range(j + 1, 12):
                d = sum((verts[i][t] - verts[j][t]) ** 2 for t in range(3))
                d2 = sum((verts[j][t] - verts[k][t]) ** 2 for t in range(3))
                d3 = sum((verts[i][t] - verts[k][t]) ** 2 for t in range(3))
                if max(d, d2, d3) < 1.2:   # icosahedron edge^2 = 4/(1+phi^2) ~ 1.106
                    faces.append((i, j, k))
    assert len(faces) == 20
    return verts, faces


def _subdivide(verts, faces):
    cache: dict[tuple[int, int], int] = {}
    verts = list(verts)

    def midpoint(i, j):
        key = (min(i, j), max(i, j))
        if key in cache:
            return cache[key]
        x = tuple((verts[i][t] + verts[j][t]) / 2 for t in range(3))
        n = math.sqrt(sum(c * c for c in x))
        verts.append(tuple(c / n for c in x))
        cache[key] = len(verts) - 1
        return cache[key]

    out = []
    for i, j, k in faces:
        ij, jk, ik = midpoint(i, j), midpoint(j, k), midpoint(i, k)
        out += [(i, ij, ik), (ij, j, jk), (ik, jk, k), (ij, jk, ik)]
    return verts, out


def _orient_faces(verts, faces):
    oriented = []
    for i, j, k in faces:
        n = vcross(vsub(verts[j], verts[i]), vsub(verts[k], verts[i]))
        oriented.append((i, j, k) if vdot(n, verts[i]) > 0 else (i, k, j))
    return oriented


def _sqrt_lower(q: Fraction, bits: int = 80) -> Fraction:
    """Rational r with r <= sqrt(q), within 2^-bits relatively."""
    if q < 0:
        raise ValueError("negative value")
    if q == 0:
        return Fraction(0)
    scaled = (q.numerator << (2 * bits)) // q.denominator
    return Fraction(math.isqrt(scaled), 1 << bits)


class BallApprox:
    """Inner/outer polytope pair for the unit ball at a refinement level.

    level ell gives 20 * 4^ell inner facets; the Hausdorff gap between inner
    and outer decreases by about 4x per level.
    """

    def __init__(self, level: int):
        if level < 0:
            raise ValueError("level >= 0")
        self.level = level
        bits = 24 + 2 * level
        fverts, faces = _icosahedron()
        for _ in range(level):
            fverts, faces = _subdivide(fverts, faces)
        den = 1 << bits
        verts: list[Vec] = []
        for x, y, z in fverts:
            v = (Fraction(int(x * den), den), Fraction(int(y * den), den),
                 Fraction(int(z * den), den))
            while vdot(v, v) > 1:
                v = tuple(c * Fraction(den - 2, den) for c in v)
            verts.append(v)
        faces = _orient_faces(verts, faces)
        self.vertices: tuple[Vec, ...] = tuple(verts)
        self.faces: tuple[tuple[int, int, int], ...] = tuple(self._verify_convex(verts, faces))
        self.inradius_lo: Fraction = self._certified_inradius()

    @staticmethod
    def _verify_convex(verts, faces):
        """Exact local convexity check over every edge, with flips if needed."""
        ints = scale_to_int(verts)
        for _ in range(8):
            edge_to_faces: dict[tuple[int, int], list[int]] = {}
            for fi, (i, j, k) in enumerate(faces):
                for a, b in ((i, j), (j, k), (k, i)):
                    edge_to_faces.setdefault((min(a, b), max(a, b)), []).append(fi)
            bad = []
            for (a, b), fs in edge_to_faces.items():
                if len(fs) != 2:
                    raise AssertionError("mesh edge not shared by 2 faces")
                f1, f2 = fs
                i, j, k = faces[f1]
                other = next(v for v in faces[f2] if v not in (i, j, k))
                if orient3d(ints[i], ints[j], ints[k], ints[other]) >= 0:
                    bad.append(((a, b), f1, f2))
            if not bad:
                return faces
            faces = list(faces)
            for (a, b), f1, f2 in bad:
                quad_1 = [v for v in faces[f1] if v not in (a, b)][0]
                quad_2 = [v for v in faces[f2] if v not in (a, b)][0]
                faces[f1] = (quad_1, a, quad_2)
                faces[f2] = (quad_2, b, quad_1)
            faces = _orient_faces([verts[i] for i in range(len(verts))], faces)
        raise AssertionError("mesh convexification did not settle")

    def _certified_inradius(self) -> Fraction:
        worst = None
        for i, j, k in self.faces:
            a, b, c = self.vertices[i], self.vertices[j], self.vertices[k]
            n = vcross(vsub(b, a), vsub(c, a))
            d2 = vdot(a, n) ** 2 / vdot(n, n)
            if worst is None or d2 < worst:
                worst = d2
        r = _sqrt_lower(worst)
        assert r * r <= worst
        return r

    @property
    def facet_count(self) -> int:
        return len(self.faces)

    def inner_polytope(self) -> Polytope:
        return _inner_polytope_cached(self.level)

    def outer_polytope(self) -> Polytope:
        return _outer_polytope_cached(self.level)

    def inner_facet_vectors(self) -> list[Vec]:
        """Outward area vectors of the verified inner mesh (no hull needed)."""
        out = []
        for i, j, k in self.faces:
            a, b, c = self.vertices[i], self.vertices[j], self.vertices[k]
            w = vcross(vsub(b, a), vsub(c, a))
            out.append(tuple(x / 2 for x in w))
        return out

    def gap(self) -> Fraction:
        """Certified bound on the Hausdorff distance between inner and outer."""
        return 1 / self.inradius_lo - 1


@lru_cache(maxsize=None)
def ball_approx(level: int) -> BallApprox:
    return BallApprox(level)


@lru_cache(maxsize=None)
def _inner_polytope_cached(level: int) -> Polytope:
    ball = ball_approx(level)
    return Polytope.from_trusted(ball.vertices, ball.faces)


@lru_cache(maxsize=None)
def _outer_polytope_cached(level: int) -> Polytope:
    ball = ball_approx(level)
    r = ball.inradius_lo
    return Polytope.from_trusted([tuple(c / r for c in v) for v in ball.vertices], ball.faces)
