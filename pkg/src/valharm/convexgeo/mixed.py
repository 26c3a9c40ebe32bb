"""Exact mixed volumes of rational polytopes and zonotopes.

The defining route is inclusion-exclusion polarization over volumes of subset
sums.  Repeated-slot and segment-slot cases dispatch to closed facet formulas
for the same value (first-variation / mixed-surface-area identities), which
keeps the verification campaigns fast; the two routes are cross-checked in the
test suite.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .hull import scale_to_int, hull2d
from .polytope import Polytope
from .vectors import Vec, vadd, vcross, vdot, vscale, vsub, primitive_signed
from .zonotope import Zonotope

Body = Polytope | Zonotope


def as_polytope(body: Body) -> Polytope:
    return body.to_polytope() if isinstance(body, Zonotope) else body


def support(body: Body, u: Vec) -> Fraction:
    return body.support(u)


def projection_body(p: Polytope) -> Zonotope:
    """Zonotope with the facet area vectors as generators, centered at 0.

    In R^2 this is the quarter-turn of the difference body: the edge normals
    scaled by edge length, which is the same area-vector recipe.
    """
    if isinstance(p, Zonotope):
        return p.projection_body()
    p.require_full_dim("projection body")
    return Zonotope(list(p.facet_area_vectors()), None, p.dim)


def _minkowski_many(bodies: list[Body]) -> Polytope:
    acc = as_polytope(bodies[0])
    for b in bodies[1:]:
        acc = acc.minkowski(as_polytope(b))
    return acc


def mixed_volume_polarization(bodies) -> Fraction:
    """(1/n!) sum over nonempty S of (-1)^{n-|S|} vol(sum_{i in S} K_i)."""
    bodies = list(bodies)
    n = bodies[0].dim if bodies else 0
    if len(bodies) != n:
        raise ValueError(f"need exactly {n} bodies, got {len(bodies)}")
    total = Fraction(0)
    for r in range(1, n + 1):
        sign = (-1) ** (n - r)
        for subset in itertools.combinations(range(n), r):
            total += sign * _minkowski_many([bodies[i] for i in subset]).volume()
    return total / factorial(n)


def _flat_area_vector(p: Polytope) -> Vec:
    """Area vector (area times unit normal) of a planar body in R^3."""
    pts = list(p.vertices)
    a = pts[0]
    w = (Fraction(0),) * 3
    e1 = next(vsub(q, a) for q in pts if q != a)
    normal = next(vcross(e1, vsub(q, a)) for q in pts
                  if any(x != 0 for x in vcross(e1, vsub(q, a))))
    e2 = vcross(normal, e1)
    plane = [(vdot(vsub(q, a), e1), vdot(vsub(q, a), e2)) for q in pts]
    ints = scale_to_int(plane)
    cyc = hull2d(ints)
    for t in range(len(cyc)):
        w = vadd(w, vcross(pts[cyc[t]], pts[cyc[(t + 1) % len(cyc)]]))
    return vscale(Fraction(1, 2), w)


def mixed_volume_repeated(a: Polytope, x: Body) -> Fraction:
    """V(A, A, X) = (1/3) sum over facets f of A of h(X, w_f)."""
    if a.degenerate:
        if a.affine_dim <= 1:
            return Fraction(0)
        w = _flat_area_vector(a)
        return (x.support(w) + x.support(tuple(-c for c in w))) / 3
    return sum((x.support(w) for w in a.facet_area_vectors()), Fraction(0)) / 3


def mixed_volume_two_segments(g1: Vec, g2: Vec, x: Body) -> Fraction:
    """V([0,g1], [0,g2], X) = (1/6)(h(X, g1 x g2) + h(X, -(g1 x g2)))."""
    w = vcross(g1, g2)
    if all(c == 0 for c in w):
        return Fraction(0)
    return (x.support(w) + x.support(tuple(-c for c in w))) / 6


def _shadow_coords(body: Polytope, b1: Vec, b2: Vec):
    return [(vdot(v, b1), vdot(v, b2)) for v in body.vertices]


def _area2(points) -> Fraction:
    if len(points) < 3:
        return Fraction(0)
    ints = scale_to_int(points)
    cyc = hull2d(ints)
    if len(cyc) < 3:
        return Fraction(0)
    total = Fraction(0)
    for t in range(len(cyc)):
        a, b = points[cyc[t]], points[cyc[(t + 1) % len(cyc)]]
        total += a[0] * b[1] - a[1] * b[0]
    return total / 2


def _hull_points2(points):
    if len(points) <= 3:
        return points
    ints = scale_to_int(points)
    return [points[k] for k in hull2d(ints)]


def _mixed_area_coords(pts_a, pts_b) -> Fraction:
    """Mixed area V_2(A, B) = (area(A+B) - area(A) - area(B)) / 2 in coords.

    Each set is reduced to its extreme points first: hull(A+B) only depends
    on them, which keeps the pairwise sum small for fine bodies.
    """
    pts_a = _hull_points2(pts_a)
    pts_b = _hull_points2(pts_b)
    sums = [(xa + xb, ya + yb) for xa, ya in pts_a for xb, yb in pts_b]
    return (_area2(sums) - _area2(pts_a) - _area2(pts_b)) / 2


def _perp_basis(g: Vec) -> tuple[Vec, Vec]:
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        b1 = vcross(g, tuple(Fraction(c) for c in axis))
        if any(x != 0 for x in b1):
            return b1, vcross(g, b1)
    raise ValueError("zero direction")


def mixed_volume_segment(p: Body, q: Body, g: Vec) -> Fraction:
    """V(P, Q, [0, g]) = |g| V_2(P|g^perp, Q|g^perp) / 3, fully rational.

    With an integer-rational basis (b1, b2) of g^perp the coordinate areas
    scale by |(b1 x b2) . g| / |g|, so |g| enters squared and no square roots
    appear.
    """
    g = tuple(Fraction(c) for c in g)
    if all(c == 0 for c in g):
        return Fraction(0)
    b1, b2 = _perp_basis(g)
    pa = _shadow_coords(as_polytope(p), b1, b2)
    pb = _shadow_coords(as_polytope(q), b1, b2)
    m = _mixed_area_coords(pa, pb)
    jac = abs(vdot(vcross(b1, b2), g))
    return vdot(g, g) * m / (3 * jac)


def mixed_volume(bodies) -> Fraction:
    """Mixed volume V(K_1, ..., K_n) of exact bodies (n = ambient dimension).

    Symmetric and Minkowski-multilinear; equals volume on the diagonal.
    Ball approximations must be resolved to their inner or outer polytope by
    the caller.
    """
    bodies = list(bodies)
    if not bodies:
        raise ValueError("no bodies")
    n = bodies[0].dim
    if any(b.dim != n for b in bodies):
        raise ValueError("ambient dimension mismatch")
    if len(bodies) != n:
        raise ValueError(f"need exactly {n} bodies for dimension {n}")
    if n == 2:
        if bodies[0] is bodies[1] or bodies[0] == bodies[1]:
            return as_polytope(bodies[0]).volume()
        s = as_polytope(bodies[0]).minkowski(as_polytope(bodies[1]))
        return (s.volume() - as_polytope(bodies[0]).volume()
                - as_polytope(bodies[1]).volume()) / 2

    # expand zonotope slots by multilinearity into their segments
    for idx, b in enumerate(bodies):
        if isinstance(b, Zonotope):
            rest = bodies[:idx] + bodies[idx + 1:]
            total = Fraction(0)
            for g in b.generators:
                total += _mixed_with_segment(rest, g)
            return total
    return _mixed_polytopes(bodies)


def _mixed_with_segment(rest: list[Body], g: Vec) -> Fraction:
    a, b = rest
    if isinstance(a, Zonotope):
        return sum((mixed_volume_two_segments(ga, g, b) for ga in a.generators), Fraction(0))
    if isinstance(b, Zonotope):
        return sum((mixed_volume_two_segments(gb, g, a) for gb in b.generators), Fraction(0))
    if a is b or a == b:
        seg = Polytope.segment((Fraction(0),) * 3, g)
        return mixed_volume_repeated(a, seg)
    return mixed_volume_segment(a, b, g)


def _mixed_polytopes(bodies: list[Polytope]) -> Fraction:
    a, b, c = bodies
    if a is b or a == b:
        return mixed_volume_repeated(a, c)
    if a is c or a == c:
        return mixed_volume_repeated(a, b)
    if b is c or b == c:
        return mixed_volume_repeated(b, a)
    segs = [(i, p) for i, p in enumerate(bodies) if p.affine_dim <= 1]
    if segs:
        i, p = segs[0]
        if p.affine_dim == 0:
            return Fraction(0)
        g = vsub(p.vertices[-1], p.vertices[0])
        rest = [bodies[j] for j in range(3) if j != i]
        return _mixed_with_segment(rest, g)
    return mixed_volume_polarization(bodies)


# -- mixed volume with a support-evaluated third body -------------------------

def _icross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _idot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


class _IntBody:
    """Integer view of a polytope: scaled vertices, primitive normals/edges."""

    def __init__(self, body: Polytope):
        self.body = body
        self.iverts = scale_to_int(list(body.vertices))
        self.normals = [primitive_signed(w) for w in body.facet_area_vectors()]
        self.edges = []
        verts = body.vertices
        for (i, j), (f1, f2) in body.edge_facet_pairs().items():
            d = primitive_signed(vsub(verts[j], verts[i]))
            self.edges.append((d, self.normals[f1], self.normals[f2]))

    def face_indices(self, u) -> list[int]:
        best = None
        out: list[int] = []
        for idx, v in enumerate(self.iverts):
            d = _idot(v, u)
            if best is None or d > best:
                best = d
                out = [idx]
            elif d == best:
                out.append(idx)
        return out


def _in_arc(u, n1, n2) -> bool:
    """u in the closed cone spanned by n1, n2 (all orthogonal to a common edge)."""
    axis = _icross(n1, n2)
    if axis == (0, 0, 0):
        return False   # merged facets: adjacent outward normals never parallel
    s1 = _idot(_icross(n1, u), axis)
    if s1 < 0:
        return False
    return _idot(_icross(u, n2), axis) >= 0


def common_normal_directions(p: Polytope, m: Polytope) -> list[tuple[int, ...]]:
    """Signed primitive facet directions of P + M whose mixed face can be
    2-dimensional: facet normals of either body plus compatible edge-pair
    cross directions."""
    ip, im = _IntBody(p), _IntBody(m)
    return _common_directions_int(ip, im)


def _common_directions_int(ip: "_IntBody", im: "_IntBody") -> list[tuple[int, ...]]:
    dirs: set[tuple[int, ...]] = set(ip.normals) | set(im.normals)
    for dp, a1, a2 in ip.edges:
        for dm, b1, b2 in im.edges:
            u = _icross(dp, dm)
            if u == (0, 0, 0):
                continue
            neg = (-u[0], -u[1], -u[2])
            for cand in (u, neg):
                if _in_arc(cand, a1, a2) and _in_arc(cand, b1, b2):
                    dirs.add(primitive_signed(cand))
    return sorted(dirs)


def mixed_volume_triple(p: Polytope, m: Polytope, support_fn) -> object:
    """V(X, P, M) = (1/3) sum_u h(X, u) V_2(F(P,u), F(M,u)).

    support_fn(u) takes a rational direction and may return exact Fractions or
    mpmath intervals; the sum is computed in whichever arithmetic it returns.
    The mixed face area weight is rational: coordinate areas divided by
    |(b1 x b2) . u| absorb the |u| normalization exactly.
    """
    from .. import intervals

    ip, im = _IntBody(p), _IntBody(m)
    exact_total = Fraction(0)
    iv_total = None
    for u in _common_directions_int(ip, im):
        fp_idx = ip.face_indices(u)
        if len(fp_idx) < 2:
            continue
        fm_idx = im.face_indices(u)
        if len(fm_idx) < 2:
            continue
        uq = tuple(Fraction(c) for c in u)
        b1, b2 = _perp_basis(uq)
        pa = [(vdot(p.vertices[k], b1), vdot(p.vertices[k], b2)) for k in fp_idx]
        pb = [(vdot(m.vertices[k], b1), vdot(m.vertices[k], b2)) for k in fm_idx]
        v2 = _mixed_area_coords(pa, pb)
        if v2 == 0:
            continue
        weight = v2 / abs(vdot(vcross(b1, b2), uq))
        h = support_fn(uq)
        if isinstance(h, Fraction):
            exact_total += h * weight
        else:
            term = h * intervals.from_fraction(weight)
            iv_total = term if iv_total is None else iv_total + term
    if iv_total is None:
        return exact_total / 3
    return (iv_total + intervals.from_fraction(exact_total)) / 3
