"""Exact convex hulls in R^2 and R^3 by gift wrapping with integer predicates.

Input rationals are rescaled per axis to integers (an invertible diagonal map,
so the face lattice is unchanged) and every geometric decision is a sign of an
integer determinant.  Facets come out as merged coplanar polygons with
outward-oriented vertex cycles, which is exactly what the volume, area-vector
and curvature formulas downstream need.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def orient2d(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient3d(a, b, c, d):
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    wx, wy, wz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    return (ux * (vy * wz - vz * wy)
            - uy * (vx * wz - vz * wx)
            + uz * (vx * wy - vy * wx))


def scale_to_int(points):
    """Per-axis integer rescaling of rational points (combinatorics preserved)."""
    dim = len(points[0])
    scales = []
    for t in range(dim):
        s = 1
        for p in points:
            s = lcm(s, Fraction(p[t]).denominator)
        scales.append(s)
    return [tuple(int(Fraction(p[t]) * scales[t]) for t in range(dim)) for p in points]


def affine_rank(points) -> tuple[int, list[int]]:
    """Affine dimension of the point set and indices of a spanning simplex."""
    if not points:
        return -1, []
    basis = [0]
    for i in range(1, len(points)):
        if points[i] != points[0]:
            basis.append(i)
            break
    if len(basis) == 1:
        return 0, basis
    if len(points[0]) == 2:
        for i in range(1, len(points)):
            if orient2d(points[basis[0]], points[basis[1]], points[i]) != 0:
                basis.append(i)
                return 2, basis
        return 1, basis
    a, b = points[basis[0]], points[basis[1]]
    for i in range(1, len(points)):
        p = points[i]
        cr = ((b[1] - a[1]) * (p[2] - a[2]) - (b[2] - a[2]) * (p[1] - a[1]),
              (b[2] - a[2]) * (p[0] - a[0]) - (b[0] - a[0]) * (p[2] - a[2]),
              (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]))
        if any(x != 0 for x in cr):
            basis.append(i)
            break
    if len(basis) == 2:
        return 1, basis
    for i in range(1, len(points)):
        if orient3d(points[basis[0]], points[basis[1]], points[basis[2]], points[i]) != 0:
            basis.append(i)
            return 3, basis
    return 2, basis


def hull2d(points) -> list[int]:
    """Indices of the extreme points in ccw order (strict monotone chain)."""
    order = sorted(range(len(points)), key=lambda k: points[k])
    uniq = []
    for k in order:
        if not uniq or points[k] != points[uniq[-1]]:
            uniq.append(k)
    if len(uniq) == 1:
        return uniq
    if len(uniq) == 2:
        return uniq

    def chain(seq):
        out = []
        for k in seq:
            while len(out) >= 2 and orient2d(points[out[-2]], points[out[-1]], points[k]) <= 0:
                out.pop()
            out.append(k)
        return out

    lower = chain(uniq)
    upper = chain(reversed(uniq))
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) < 3:   # collinear set
        return [uniq[0], uniq[-1]]
    return cycle


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _facet_polygon(points, contact, outward_check):
    """Order a coplanar contact set into an outward ccw polygon of indices."""
    a = points[contact[0]]
    e1 = None
    for k in contact[1:]:
        if points[k] != a:
            e1 = _sub(points[k], a)
            break
    normal = None
    for k in contact:
        cr = _cross3(e1, _sub(points[k], a))
        if any(x != 0 for x in cr):
            normal = cr
            break
    e2 = _cross3(normal, e1)
    plane_pts = [( _dot(_sub(points[k], a), e1), _dot(_sub(points[k], a), e2)) for k in contact]
    poly_local = hull2d(plane_pts)
    poly = [contact[t] for t in poly_local]
    if outward_check(poly):
        poly.reverse()
    return poly


class HullError(ValueError):
    pass


def hull3d(points):
    """Facets of the hull of full-dimensional integer points.

    Returns a list of facets, each a list of point indices forming an
    outward-oriented convex polygon.  Points must be deduplicated.
    """
    n = len(points)
    rank, basis = affine_rank(points)
    if rank != 3:
        raise HullError("hull3d requires an affinely 3-dimensional point set")
    # interior reference: centroid of the spanning simplex (exact rationals)
    ref = tuple(Fraction(sum(points[k][t] for k in basis), 4) for t in range(3))

    def inward(poly) -> bool:
        # True when the polygon's orientation normal points toward ref
        a = points[poly[0]]
        w = (0, 0, 0)
        for i in range(1, len(poly) - 1):
            w = tuple(x + y for x, y in zip(
                w, _cross3(_sub(points[poly[i]], a), _sub(points[poly[i + 1]], a))))
        return _dot(w, _sub(ref, a)) > 0

    def pivot(a_id, b_id, w_point, on_plane):
        """Support point of the neighbor plane around the edge line (a, b).

        w_point lies on the current supporting plane off the edge line, and
        every candidate lies strictly on one side of that plane, so rotation
        angles live in (0, pi) and are totally ordered by sidedness tests.
        The neighbor facet is the one at maximal angle: no candidate may lie
        beyond it, i.e. on the opposite side from w_point.
        """
        a, b = points[a_id], points[b_id]
        best = None
        for q in range(n):
            if on_plane(q):
                continue
            if best is None:
                best = q
                continue
            s1 = orient3d(a, b, points[best], points[q])
            if s1 == 0:
                continue
            s2 = orient3d(a, b, points[best], w_point)
            if (s1 > 0) != (s2 > 0):   # q beyond the current plane, away from w
                best = q
        if best is None:
            raise HullError("pivot found no candidate (degenerate input?)")
        return best

    def contact_set(a_id, b_id, c_id):
        a, b, c = points[a_id], points[b_id], points[c_id]
        return [k for k in range(n) if orient3d(a, b, c, points[k]) == 0]

    def plane_key(poly):
        a = points[poly[0]]
        w = (0, 0, 0)
        for i in range(1, len(poly) - 1):
            w = tuple(x + y for x, y in zip(
                w, _cross3(_sub(points[poly[i]], a), _sub(points[poly[i + 1]], a))))
        g = 0
        for v in w:
            g = gcd(g, abs(v))
        w = tuple(v // g for v in w)
        return w, _dot(w, a)

    # --- initial facet ------------------------------------------------------
    i0 = min(range(n), key=lambda k: points[k])
    v0 = points[i0]
    best1 = None
    for q in range(n):
        u = (points[q][0] - v0[0], points[q][1] - v0[1])
        if u == (0, 0):
            continue
        if best1 is None:
            best1 = q
            continue
        ub = (points[best1][0] - v0[0], points[best1][1] - v0[1])
        if ub[0] * u[1] - ub[1] * u[0] < 0:
            best1 = q
    v0z = (v0[0], v0[1], v0[2] + 1)
    contact = [k for k in range(n)
               if orient3d(v0, v0z, points[best1], points[k]) == 0]
    crank, cbasis = affine_rank([points[k] for k in contact])
    if crank == 2:
        first = _facet_polygon(points, contact, inward)
    else:
        # supporting contact is only an edge; pivot around it to a real facet.
        # The contact line passes through v0 and best1, so it is never vertical
        # and a + e_z is a reference on the supporting plane off the line.
        line = sorted(contact, key=lambda k: points[k])
        a_id, b_id = line[0], line[-1]
        a = points[a_id]
        w_point = (a[0], a[1], a[2] + 1)

        def on_line_plane(q):
            return orient3d(v0, v0z, points[best1], points[q]) == 0

        c_id = pivot(a_id, b_id, w_point, on_line_plane)
        first = _facet_polygon(points, contact_set(a_id, b_id, c_id), inward)

    facets = [first]
    seen = {plane_key(first)}
    # directed edges pending a neighbor, with their source facet
    stack = [(first[i], first[(i + 1) % len(first)], 0) for i in range(len(first))]
    edge_done = set()
    while stack:
        a_id, b_id, f_idx = stack.pop()
        ekey = (min(a_id, b_id), max(a_id, b_id))
        if ekey in edge_done:
            continue
        poly = facets[f_idx]
        key_w, key_d = plane_key(poly)

        def on_facet_plane(q, key_w=key_w, key_d=key_d):
            return _dot(key_w, points[q]) == key_d

        w_point = None
        for k in poly:
            # reference on the current plane but off the edge line
            da = _sub(points[k], points[a_id])
            db = _sub(points[b_id], points[a_id])
            if any(x != 0 for x in _cross3(da, db)):
                w_point = points[k]
                break
        c_id = pivot(a_id, b_id, w_point, on_facet_plane)
        newpoly = _facet_polygon(points, contact_set(a_id, b_id, c_id), inward)
        edge_done.add(ekey)
        key = plane_key(newpoly)
        if key in seen:
            continue
        seen.add(key)
        facets.append(newpoly)
        fi = len(facets) - 1
        for i in range(len(newpoly)):
            e = (newpoly[i], newpoly[(i + 1) % len(newpoly)])
            if (min(e), max(e)) not in edge_done:
                stack.append((e[0], e[1], fi))
    return facets
