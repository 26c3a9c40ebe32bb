"""Quermassintegrals, intrinsic volumes, Steiner points, derived projections.

W_0 is an exact rational; W_1 (surface area / 3) and W_2 (integral mean
curvature / 3, from edge lengths and exterior dihedral angles) are certified
interval reals; W_3 = kappa_3 = 4 pi / 3.  Everything ball-dependent goes
through inscribed/circumscribed BallApprox polytopes and reports enclosures.
"""

from __future__ import annotations

from fractions import Fraction

from .. import intervals
from ..intervals import (acos_iv, from_fraction, from_int, pi_iv,
                         sqrt_of_fraction)
from .ball import BallApprox, ball_approx
from .mixed import (mixed_volume, mixed_volume_repeated, mixed_volume_triple,
                    projection_body, _perp_basis, _shadow_coords,
                    _mixed_area_coords, as_polytope)
from .polytope import Polytope
from .vectors import Vec, vcross, vdot, vsub
from .zonotope import Zonotope

KAPPA = {0: Fraction(1), 1: Fraction(2)}   # kappa_2 = pi, kappa_3 = 4 pi / 3


def kappa_iv(i: int):
    if i == 0:
        return from_int(1)
    if i == 1:
        return from_int(2)
    if i == 2:
        return pi_iv()
    if i == 3:
        return pi_iv() * from_fraction(Fraction(4, 3))
    raise ValueError("kappa_i needed only for i <= 3")


def surface_area(p: Polytope):
    """Certified interval for the surface area: sum of facet area norms."""
    p.require_full_dim("surface area")
    total = from_int(0)
    for w in p.facet_area_vectors():
        total += sqrt_of_fraction(vdot(w, w))
    return total


def mean_curvature_integral(p: Polytope):
    """M(P) = (1/2) sum over edges of length * exterior dihedral angle."""
    p.require_full_dim("mean curvature")
    normals = p.facet_area_vectors()
    total = from_int(0)
    for (i, j), (f1, f2) in p.edge_facet_pairs().items():
        e = vsub(p.vertices[j], p.vertices[i])
        length = sqrt_of_fraction(vdot(e, e))
        n1, n2 = normals[f1], normals[f2]
        cosang = from_fraction(vdot(n1, n2)) / sqrt_of_fraction(vdot(n1, n1) * vdot(n2, n2))
        total += length * acos_iv(cosang)
    return total / 2


def quermassintegral(p: Polytope, i: int):
    """W_i of a full-dimensional rational polytope in R^3.

    W_0 exact rational; W_1 = S/3 and W_2 = M/3 as certified intervals;
    W_3 = 4 pi / 3.
    """
    if isinstance(p, Zonotope):
        p = p.to_polytope()
    if p.dim != 3:
        raise ValueError("quermassintegrals implemented for n = 3")
    if i == 0:
        return p.volume()
    if i == 1:
        return surface_area(p) / 3
    if i == 2:
        return mean_curvature_integral(p) / 3
    if i == 3:
        return kappa_iv(3)
    raise ValueError(f"W_{i} out of range for n = 3")


def intrinsic_volume(p: Polytope, i: int):
    """V_i(K) = binom(3, i) W_{3-i}(K) / kappa_{3-i}; V_3 exact rational."""
    if i == 3:
        return quermassintegral(p, 0)
    if i == 0:
        return Fraction(1)
    if i == 2:
        return quermassintegral(p, 1) * from_fraction(Fraction(3, 2))
    if i == 1:
        return quermassintegral(p, 2) * from_int(3) / pi_iv()
    raise ValueError(f"V_{i} out of range for n = 3")


def mixed_quermass(p, l, i: int, level: int = 2):
    """W_i(P, L) = V(P[2-i], B[i], L) for n = 3.

    i = 0 is exact rational; i >= 1 returns a certified enclosure from the
    inner/outer ball polytopes at the given refinement level.
    """
    if i == 0:
        return mixed_volume_repeated(as_polytope(p), l)
    ball = ball_approx(level)
    if i == 1:
        los, his = [], []
        for bp in (ball.inner_polytope(), ball.outer_polytope()):
            if isinstance(l, _SupportEvaluator):
                v = mixed_volume_triple(as_polytope(p), bp, l.support)
                los.append(v.a)
                his.append(v.b)
            else:
                v = mixed_volume_triple(as_polytope(p), bp, lambda u: l.support(u))
                v = from_fraction(v) if isinstance(v, Fraction) else v
                los.append(v.a)
                his.append(v.b)
        from mpmath import iv
        return iv.mpf([min(los), max(his)])
    if i == 2:
        # V(B, B, L): P drops out; facet formula over the ball mesh
        los, his = [], []
        for bp in (ball.inner_polytope(), ball.outer_polytope()):
            if isinstance(l, _SupportEvaluator):
                total = None
                for w in bp.facet_area_vectors():
                    t = l.support(w)
                    total = t if total is None else total + t
                v = total / from_int(3)
                los.append(v.a)
                his.append(v.b)
            else:
                v = from_fraction(mixed_volume_repeated(bp, l))
                los.append(v.a)
                his.append(v.b)
        from mpmath import iv
        return iv.mpf([min(los), max(his)])
    raise ValueError("mixed quermass needs 0 <= i <= 2")


def steiner_point(p: Polytope):
    """External-solid-angle-weighted vertex average, as interval coordinates."""
    p.require_full_dim("Steiner point")
    normals = p.facet_area_vectors()
    cycles = p.vertex_facet_cycles()
    coords = [from_int(0) for _ in range(3)]
    total = from_int(0)
    for v_idx, fan in cycles.items():
        omega = _normal_cone_solid_angle([normals[f] for f in fan])
        total += omega
        for t in range(3):
            coords[t] += omega * from_fraction(p.vertices[v_idx][t])
    four_pi = pi_iv() * 4
    # Gauss-Bonnet sanity: total external angle is 4 pi
    if not intervals.overlap(total, four_pi):
        raise AssertionError("external solid angles do not sum to 4 pi")
    return tuple(c / four_pi for c in coords)


def _normal_cone_solid_angle(ns: list[Vec]):
    """Solid angle of the spherical polygon spanned by ordered cone generators.

    The interior angle at generator b between the arcs to a and c is
    pi - angle(a x b, b x c), since (a x b).(b x c) = -(t1 . t2) for the arc
    tangents; the spherical excess then collapses to 2 pi - sum of the
    plane-normal angles.
    """
    k = len(ns)
    total = from_int(0)
    for t in range(k):
        a, b, c = ns[(t - 1) % k], ns[t], ns[(t + 1) % k]
        p = vcross(a, b)
        q = vcross(b, c)
        num = vdot(p, q)
        den2 = vdot(p, p) * vdot(q, q)
        if den2 == 0:
            raise AssertionError("degenerate normal cone (coplanar facets?)")
        cosang = from_fraction(num) / sqrt_of_fraction(den2)
        total += acos_iv(cosang)
    return pi_iv() * 2 - total


class _SupportEvaluator:
    """Marker base: bodies known only through certified support values."""

    def support(self, u):
        raise NotImplementedError


class Pi1Body(_SupportEvaluator):
    """First derived projection body, via h(Pi_1 P, u) = (3/pi) V(P, B, [0,u]).

    The normalization constant 3/pi is fixed by Pi_1 B = B in the limit of the
    ball refinement.  Support values are certified enclosures from the
    inner/outer ball polytopes at the chosen level.
    """

    NORMALIZATION = "3/pi"

    def __init__(self, body, level: int = 2):
        self.body = as_polytope(body)
        self.level = level
        self.ball = ball_approx(level)
        self._cache: dict[tuple, object] = {}

    def _segment_mixed(self, bp: Polytope, u: Vec) -> Fraction:
        # V(P, B_poly, [0, u]) = |u|^2 V2_coords / (3 |(b1 x b2) . u|)
        b1, b2 = _perp_basis(u)
        pa = _shadow_coords(self.body, b1, b2)
        pb = _shadow_coords(bp, b1, b2)
        m = _mixed_area_coords(pa, pb)
        jac = abs(vdot(vcross(b1, b2), u))
        return vdot(u, u) * m / (3 * jac)

    def support(self, u):
        u = tuple(Fraction(c) for c in u)
        if u in self._cache:
            return self._cache[u]
        lo = self._segment_mixed(self.ball.inner_polytope(), u)
        hi = self._segment_mixed(self.ball.outer_polytope(), u)
        from mpmath import iv
        enclosure = iv.mpf([from_fraction(lo).a, from_fraction(hi).b])
        val = enclosure * from_int(3) / pi_iv()
        self._cache[u] = val
        return val


def derived_projection(p, i: int, level: int = 2):
    """Derived projection operators: i = 2 is the projection body exactly,
    i = 1 the enclosure-backed Pi_1 support evaluator."""
    if i == 2:
        return projection_body(as_polytope(p))
    if i == 1:
        return Pi1Body(p, level)
    raise ValueError("derived projection implemented for i in {1, 2}")


def pi1_disc_decomposition(z: Zonotope) -> list[Fraction]:
    """For a zonotope, Pi_1 Z is an exact sum of discs of radius |g|/pi in the
    planes orthogonal to the generators (degree-1 Minkowski valuations are
    Minkowski additive).  Returns the squared radii pi^2 r^2 = |g|^2."""
    return [vdot(g, g) for g in z.generators]


def pi1_w2_zonotope(z: Zonotope):
    """W_2(Pi_1 Z) = sum over the discs of pi^2 r / 3, with pi r = |g|."""
    total = from_int(0)
    for g2 in pi1_disc_decomposition(z):
        total += sqrt_of_fraction(g2)   # |g| = pi r
    return total * pi_iv() / 3


def w2_zonotope_closed_form(z: Zonotope):
    """W_2 of a zonotope directly: (pi / 3) * total generator length.

    Cross-check for the generic edge/angle formula on the polytope form.
    """
    total = from_int(0)
    for g in z.generators:
        total += sqrt_of_fraction(vdot(g, g))
    return total * pi_iv() / 3
