"""Rational polytopes in R^2 / R^3, canonicalized to their extreme points."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cached_property

from . import hull as hull_mod
from .vectors import (Vec, vadd, vcross, vdot, vec_from_json, vec_to_json,
                      vneg, vscale, vsub)


class DegenerateBodyError(ValueError):
    """Operation needs a full-dimensional body."""


def _dedupe(points: list[Vec]) -> list[Vec]:
    return sorted(set(tuple(Fraction(c) for c in p) for p in points))


def _extreme_points(points: list[Vec], rank: int) -> list[Vec]:
    if rank <= 0:
        return points[:1]
    if rank == 1:
        return [points[0], points[-1]]   # points are sorted; lex order is monotone on a line
    if len(points[0]) == 2:
        ints = hull_mod.scale_to_int(points)
        return [points[k] for k in hull_mod.hull2d(ints)]
    if rank == 2:
        # planar set in R^3: hull in exact in-plane coordinates
        a = points[0]
        e1 = next(vsub(p, a) for p in points if p != a)
        normal = next((vcross(e1, vsub(p, a)) for p in points
                       if any(x != 0 for x in vcross(e1, vsub(p, a)))))
        e2 = vcross(normal, e1)
        plane = [(vdot(vsub(p, a), e1), vdot(vsub(p, a), e2)) for p in points]
        ints = hull_mod.scale_to_int(plane)
        return [points[k] for k in hull_mod.hull2d(ints)]
    ints = hull_mod.scale_to_int(points)
    facets = hull_mod.hull3d(ints)
    keep = sorted({k for poly in facets for k in poly})
    return [points[k] for k in keep]


class Polytope:
    """Convex body given by the extreme points of its hull (exact rationals)."""

    def __init__(self, points, dim: int | None = None):
        pts = _dedupe([tuple(Fraction(c) for c in p) for p in points])
        if not pts:
            raise ValueError("a polytope needs at least one point")
        if dim is None:
            dim = len(pts[0])
        if dim not in (2, 3):
            raise ValueError("ambient dimension must be 2 or 3")
        if any(len(p) != dim for p in pts):
            raise ValueError("inconsistent point dimensions")
        self.dim = dim
        rank, _ = hull_mod.affine_rank(pts)
        self.affine_dim = rank
        self.vertices: tuple[Vec, ...] = tuple(_extreme_points(pts, rank))

    @classmethod
    def from_trusted(cls, vertices, facets) -> "Polytope":
        """Build a 3D polytope from verified data without re-running the hull.

        vertices must be exactly the extreme points and facets outward-oriented
        vertex cycles (used for convexity-checked meshes such as BallApprox).
        """
        self = cls.__new__(cls)
        self.dim = 3
        self.affine_dim = 3
        self.vertices = tuple(tuple(Fraction(c) for c in v) for v in vertices)
        self.__dict__["_hull3d_facets"] = tuple(tuple(p) for p in facets)
        return self

    # -- basic predicates -----------------------------------------------

    @property
    def degenerate(self) -> bool:
        return self.affine_dim < self.dim

    def require_full_dim(self, what: str) -> None:
        if self.degenerate:
            raise DegenerateBodyError(f"{what} needs a full-dimensional body")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polytope) and self.dim == other.dim
                and self.vertices == other.vertices)

    def __hash__(self) -> int:
        return hash((self.dim, self.vertices))

    def __repr__(self) -> str:
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, affine_dim={self.affine_dim})"

    # -- combinatorics ----------------------------------------------------

    @cached_property
    def _hull3d_facets(self) -> tuple[tuple[int, ...], ...]:
        self.require_full_dim("facet structure")
        if self.dim != 3:
            raise DegenerateBodyError("facet cycles are a 3D notion here")
        ints = hull_mod.scale_to_int(list(self.vertices))
        return tuple(tuple(poly) for poly in hull_mod.hull3d(ints))

    def facets(self) -> tuple[tuple[int, ...], ...]:
        """Vertex-index cycles of the facets, outward-oriented (3D)."""
        return self._hull3d_facets

    @cached_property
    def _cycle2d(self) -> tuple[int, ...]:
        if self.dim != 2:
            raise ValueError("2D cycle of a 3D body")
        self.require_full_dim("boundary cycle")
        ints = hull_mod.scale_to_int(list(self.vertices))
        return tuple(hull_mod.hull2d(ints))

    def boundary_cycle(self) -> tuple[int, ...]:
        return self._cycle2d

    @cached_property
    def _facet_vectors(self) -> tuple[Vec, ...]:
        """Outward area vectors: |w_f| = facet area (edge length in 2D)."""
        if self.dim == 2:
            cyc = self.boundary_cycle()
            out = []
            for t in range(len(cyc)):
                a = self.vertices[cyc[t]]
                b = self.vertices[cyc[(t + 1) % len(cyc)]]
                e = vsub(b, a)
                out.append((e[1], -e[0]))
            return tuple(out)
        out = []
        for poly in self.facets():
            w = (Fraction(0), Fraction(0), Fraction(0))
            for t in range(len(poly)):
                w = vadd(w, vcross(self.vertices[poly[t]],
                                   self.vertices[poly[(t + 1) % len(poly)]]))
            out.append(vscale(Fraction(1, 2), w))
        return tuple(out)

    def facet_area_vectors(self) -> tuple[Vec, ...]:
        return self._facet_vectors

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Undirected vertex-index edges (3D full-dimensional)."""
        seen = set()
        for poly in self.facets():
            for t in range(len(poly)):
                e = (poly[t], poly[(t + 1) % len(poly)])
                seen.add((min(e), max(e)))
        return tuple(sorted(seen))

    def edge_facet_pairs(self) -> dict[tuple[int, int], list[int]]:
        out: dict[tuple[int, int], list[int]] = {}
        for fi, poly in enumerate(self.facets()):
            for t in range(len(poly)):
                e = (poly[t], poly[(t + 1) % len(poly)])
                out.setdefault((min(e), max(e)), []).append(fi)
        for e, fs in out.items():
            if len(fs) != 2:
                raise AssertionError(f"edge {e} lies on {len(fs)} facets")
        return out

    def vertex_facet_cycles(self) -> dict[int, list[int]]:
        """Facets around each vertex, in rotational order (for normal cones)."""
        facets = self.facets()
        edge_pairs = self.edge_facet_pairs()
        by_vertex: dict[int, set[int]] = {}
        for fi, poly in enumerate(facets):
            for k in poly:
                by_vertex.setdefault(k, set()).add(fi)
        cycles: dict[int, list[int]] = {}
        for v, fset in by_vertex.items():
            adj: dict[int, list[int]] = {fi: [] for fi in fset}
            for (a, b), (f1, f2) in edge_pairs.items():
                if v in (a, b):
                    adj[f1].append(f2)
                    adj[f2].append(f1)
            start = next(iter(fset))
            cyc = [start]
            prev = None
            while True:
                nxt = [f for f in adj[cyc[-1]] if f != prev]
                prev = cyc[-1]
                if nxt[0] == start:
                    break
                cyc.append(nxt[0])
            if len(cyc) != len(fset):
                raise AssertionError("vertex facet fan is not a single cycle")
            cycles[v] = cyc
        return cycles

    # -- metric quantities -------------------------------------------------

    @cached_property
    def _volume(self) -> Fraction:
        if self.degenerate:
            return Fraction(0)
        if self.dim == 2:
            cyc = self.boundary_cycle()
            total = Fraction(0)
            for t in range(len(cyc)):
                a = self.vertices[cyc[t]]
                b = self.vertices[cyc[(t + 1) % len(cyc)]]
                total += a[0] * b[1] - a[1] * b[0]
            return total / 2
        total = Fraction(0)
        for poly in self.facets():
            a = self.vertices[poly[0]]
            for t in range(1, len(poly) - 1):
                b, c = self.vertices[poly[t]], self.vertices[poly[t + 1]]
                total += vdot(a, vcross(b, c))
        return total / 6

    def volume(self) -> Fraction:
        return self._volume

    def support(self, u: Vec) -> Fraction:
        return max(vdot(v, u) for v in self.vertices)

    def support_face(self, u: Vec) -> tuple[Vec, ...]:
        h = self.support(u)
        return tuple(v for v in self.vertices if vdot(v, u) == h)

    # -- constructions ------------------------------------------------------

    def translate(self, x: Vec) -> "Polytope":
        return Polytope([vadd(v, tuple(Fraction(c) for c in x)) for v in self.vertices], self.dim)

    def scale(self, t) -> "Polytope":
        t = Fraction(t)
        return Polytope([vscale(t, v) for v in self.vertices], self.dim)

    def negate(self) -> "Polytope":
        return Polytope([vneg(v) for v in self.vertices], self.dim)

    def minkowski(self, other: "Polytope") -> "Polytope":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in Minkowski sum")
        return Polytope([vadd(a, b) for a in self.vertices for b in other.vertices], self.dim)

    def apply_matrix(self, rows) -> "Polytope":
        rows = [tuple(Fraction(c) for c in r) for r in rows]
        return Polytope([tuple(vdot(r, v) for r in rows) for v in self.vertices], self.dim)

    # -- io -------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": [vec_to_json(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "Polytope":
        return cls([vec_from_json(v) for v in data["vertices"]], int(data["dim"]))

    # -- stock bodies ----------------------------------------------------------

    @classmethod
    def box(cls, lo, hi, dim: int = 3) -> "Polytope":
        lo, hi = Fraction(lo), Fraction(hi)
        import itertools
        pts = list(itertools.product((lo, hi), repeat=dim))
        return cls(pts, dim)

    @classmethod
    def cube(cls) -> "Polytope":
        return cls.box(0, 1, 3)

    @classmethod
    def simplex(cls) -> "Polytope":
        return cls([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)

    @classmethod
    def segment(cls, a: Vec, b: Vec) -> "Polytope":
        return cls([a, b], len(a))


def convex_hull(points, dim: int | None = None) -> Polytope:
    """Hull of rational points; lower-dimensional hulls are legal and flagged."""
    return Polytope(points, dim)


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    return p.minkowski(q)


def volume(p: Polytope) -> Fraction:
    return p.volume()


def support_function(p, u: Vec) -> Fraction:
    return p.support(tuple(Fraction(c) for c in u))


_DYADIC_BITS = 8


def random_polytope(seed: int, k: int, box=Fraction(1)) -> Polytope:
    """Hull of k seeded dyadic-rational points in [-box, box]^3.

    Deterministic for a fixed seed; resampled (deterministically) until
    full-dimensional.
    """
    if k < 4:
        raise ValueError("k >= 4 required for a full-dimensional body")
    box = Fraction(box)
    hi = int(box * (1 << _DYADIC_BITS))
    for attempt in range(64):
        rng = random.Random((seed * 1_000_003 + attempt) & 0xFFFFFFFFFFFF)
        pts = [tuple(Fraction(rng.randint(-hi, hi), 1 << _DYADIC_BITS) for _ in range(3))
               for _ in range(k)]
        p = Polytope(pts, 3)
        if not p.degenerate:
            return p
    raise RuntimeError("could not draw a full-dimensional polytope")
