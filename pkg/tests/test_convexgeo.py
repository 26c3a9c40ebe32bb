"""Exact geometry: hulls, volumes, projection bodies, quermassintegrals."""

import itertools
import math
from fractions import Fraction

import pytest

from valharm import intervals
from valharm.convexgeo import quermass as qm
from valharm.convexgeo.ball import ball_approx
from valharm.convexgeo.mixed import (mixed_volume, mixed_volume_polarization,
                                     mixed_volume_repeated, mixed_volume_triple,
                                     projection_body)
from valharm.convexgeo.polytope import (DegenerateBodyError, Polytope,
                                        convex_hull, random_polytope)
from valharm.convexgeo.vectors import vdot, vsub
from valharm.convexgeo.zonotope import Zonotope

CUBE = Polytope.box(0, 1, 3)


def test_convex_hull_examples():
    corners = list(itertools.product((0, 1), repeat=3))
    assert convex_hull(corners).vertices == convex_hull(
        corners + [(Fraction(1, 2),) * 3]).vertices
    seg = convex_hull([(0, 0, 0), (2, 2, 2), (1, 1, 1)])
    assert seg.degenerate and seg.affine_dim == 1
    assert seg.vertices == ((0, 0, 0), (2, 2, 2))


def test_minkowski_sum_examples():
    pt = Polytope([(Fraction(1, 2), 1, -2)], 3)
    assert CUBE.minkowski(pt) == CUBE.translate((Fraction(1, 2), 1, -2))
    assert CUBE.minkowski(CUBE) == Polytope.box(0, 2, 3)
    z = Polytope([(0, 0, 0)], 3)
    for g in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        z = z.minkowski(Polytope.segment((0, 0, 0), g))
    assert z == CUBE


def test_volume_examples():
    assert CUBE.volume() == 1
    assert Polytope.simplex().volume() == Fraction(1, 6)
    t = Fraction(5, 3)
    p = random_polytope(11, 7)
    assert p.scale(t).volume() == t ** 3 * p.volume()
    assert p.translate((1, Fraction(-7, 2), 3)).volume() == p.volume()


def test_support_function():
    assert Polytope.box(-1, 1, 3).support((1, 1, 1)) == 3
    p, q = random_polytope(4, 6), random_polytope(5, 6)
    u = (Fraction(2), Fraction(-3, 2), Fraction(1, 4))
    assert p.minkowski(q).support(u) == p.support(u) + q.support(u)
    assert p.scale(3).support(u) == 3 * p.support(u)


def test_projection_body_cube():
    pb = projection_body(CUBE)
    assert pb.to_polytope() == Polytope.box(-1, 1, 3)
    assert pb.is_origin_symmetric()
    # degree-2 homogeneity
    p = random_polytope(9, 6)
    assert set(projection_body(p.scale(2)).generators) == \
        {tuple(4 * c for c in g) for g in projection_body(p).generators}
    # translation invariance as a body
    assert projection_body(p.translate((3, -1, Fraction(1, 2)))).generators == \
        projection_body(p).generators


def test_projection_body_support_cross_checks():
    p = random_polytope(21, 8)
    pb = projection_body(p)
    ws = p.facet_area_vectors()
    import random
    rng = random.Random(2)
    for _ in range(10):
        u = tuple(Fraction(rng.randint(-40, 40), 16) for _ in range(3))
        if all(c == 0 for c in u):
            continue
        exact = sum(abs(vdot(u, w)) for w in ws) / 2
        assert pb.support(u) == exact
        # floating cross-check: |u| * area of the projected 2D hull
        nrm = math.sqrt(sum(float(c) ** 2 for c in u))
        shadow = _shadow_area_float(p, u)
        assert abs(float(exact) - nrm * shadow) <= 1e-12 * max(1.0, abs(float(exact)))


def _shadow_area_float(p, u):
    # orthonormal in-plane basis via floats (test oracle only)
    import numpy as np
    u = np.array([float(c) for c in u])
    u = u / np.linalg.norm(u)
    a = np.array([1.0, 0.0, 0.0]) if abs(u[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    b1 = np.cross(u, a); b1 /= np.linalg.norm(b1)
    b2 = np.cross(u, b1)
    pts = [(float(np.dot(b1, [float(c) for c in v])), float(np.dot(b2, [float(c) for c in v])))
           for v in p.vertices]
    pts = sorted(set(pts))

    def half(seq):
        out = []
        for q in seq:
            while len(out) >= 2 and ((out[-1][0] - out[-2][0]) * (q[1] - out[-2][1])
                                     - (out[-1][1] - out[-2][1]) * (q[0] - out[-2][0])) <= 0:
                out.pop()
            out.append(q)
        return out

    cyc = half(pts)[:-1] + half(pts[::-1])[:-1]
    area = 0.0
    for i in range(len(cyc)):
        x1, y1 = cyc[i]
        x2, y2 = cyc[(i + 1) % len(cyc)]
        area += x1 * y2 - x2 * y1
    return abs(area) / 2


def test_mixed_volume_contract():
    assert mixed_volume([CUBE, CUBE, CUBE]) == 1
    seg = Polytope.segment((0, 0, 0), (0, 0, 1))
    # derived value: coefficient extraction from the volume polynomial
    # vol(cube + t seg) = 1 + 3 t V(C, C, seg) with no higher terms
    v0 = CUBE.volume()
    v1 = CUBE.minkowski(seg).volume()
    assert v1 - v0 == 3 * mixed_volume([CUBE, CUBE, seg])
    assert mixed_volume([CUBE, CUBE, seg]) == Fraction(1, 3)
    with pytest.raises(ValueError):
        mixed_volume([CUBE, CUBE])


def test_mixed_volume_symmetry_and_multilinearity():
    ps = [random_polytope(s, 6) for s in (31, 32, 33)]
    ref = mixed_volume_polarization(ps)
    for perm in itertools.permutations(ps):
        assert mixed_volume_polarization(list(perm)) == ref
    s01 = ps[0].minkowski(ps[1])
    assert mixed_volume([s01, ps[2], ps[2]]) == \
        mixed_volume([ps[0], ps[2], ps[2]]) + mixed_volume([ps[1], ps[2], ps[2]])
    # fast paths match polarization
    assert mixed_volume([ps[0], ps[0], ps[1]]) == mixed_volume_polarization([ps[0], ps[0], ps[1]])
    z = Zonotope([(1, 0, 0), (0, 2, 0), (1, 1, 1)])
    assert mixed_volume([ps[0], ps[1], z]) == \
        mixed_volume_polarization([ps[0], ps[1], z.to_polytope()])
    assert mixed_volume_triple(ps[0], ps[1], ps[2].support) == \
        mixed_volume_polarization(ps)


def test_mixed_volume_unimodular_and_translation_invariance():
    ps = [random_polytope(s, 5) for s in (41, 42, 43)]
    ref = mixed_volume_polarization(ps)
    shear = [(1, 2, 0), (0, 1, 0), (0, 1, 1)]
    assert mixed_volume_polarization([p.apply_matrix(shear) for p in ps]) == ref
    assert mixed_volume_polarization(
        [p.translate((Fraction(9, 4), -3, Fraction(1, 7))) for p in ps]) == ref


def test_valuation_property_on_box_slabs():
    k = Polytope.box(0, 1, 3)
    l = Polytope([(x + 1, y, z) for x, y, z in itertools.product((0, 1), repeat=3)], 3)
    union = Polytope(list(k.vertices) + list(l.vertices), 3)
    inter = Polytope([(1, y, z) for y, z in itertools.product((0, 1), repeat=2)], 3)
    assert inter.degenerate
    c = random_polytope(17, 5)
    lhs = mixed_volume([union, union, c]) + mixed_volume_repeated(inter, c)
    rhs = mixed_volume([k, k, c]) + mixed_volume([l, l, c])
    assert lhs == rhs


def test_zonotope_volume_and_conversion():
    z = Zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (2, 1, 3)])
    assert z.volume() == z.to_polytope().volume()
    assert Zonotope.from_json(z.to_json()) == z
    p = random_polytope(3, 7)
    assert Polytope.from_json(p.to_json()) == p


def test_quermassintegrals_cube():
    assert qm.quermassintegral(CUBE, 0) == 1
    w1 = qm.quermassintegral(CUBE, 1)
    assert abs(intervals.midpoint_float(w1) - 2) < 1e-14
    # independent oracle: surface area from the facet triangulation
    area = sum(math.sqrt(sum(float(c) ** 2 for c in w)) for w in CUBE.facet_area_vectors())
    assert abs(intervals.midpoint_float(w1) - area / 3) < 1e-12
    w2 = qm.quermassintegral(CUBE, 2)
    assert abs(intervals.midpoint_float(w2) - math.pi) < 1e-12
    w3 = qm.quermassintegral(CUBE, 3)
    assert abs(intervals.midpoint_float(w3) - 4 * math.pi / 3) < 1e-12
    with pytest.raises(ValueError):
        qm.quermassintegral(CUBE, 4)


def test_quermass_translation_invariance():
    p = random_polytope(8, 6)
    q = p.translate((Fraction(5, 2), -1, Fraction(3, 8)))
    assert qm.quermassintegral(q, 0) == qm.quermassintegral(p, 0)
    for i in (1, 2):
        assert intervals.overlap(qm.quermassintegral(q, i), qm.quermassintegral(p, i))


def test_intrinsic_volumes_cube():
    assert qm.intrinsic_volume(CUBE, 3) == 1
    assert qm.intrinsic_volume(CUBE, 0) == 1
    assert abs(intervals.midpoint_float(qm.intrinsic_volume(CUBE, 2)) - 3) < 1e-12
    assert abs(intervals.midpoint_float(qm.intrinsic_volume(CUBE, 1)) - 3) < 1e-12


def test_mixed_quermass():
    p = random_polytope(14, 6)
    assert qm.mixed_quermass(p, p, 0) == p.volume()
    q = random_polytope(15, 6)
    # Cor. 7.2 instance at i = n-1: W_0(K, Pi L) = W_0(L, Pi K), exact
    assert qm.mixed_quermass(p, projection_body(q), 0) == \
        qm.mixed_quermass(q, projection_body(p), 0)
    # all-ball case: W_1(B, B) -> kappa_3 within the enclosure
    for level in (1, 2):
        b = ball_approx(level).inner_polytope()
        w = qm.mixed_quermass(b, b, 1, level=level)
        lo, hi = intervals.endpoints(w)
        assert float(lo) <= 4 * math.pi / 3 + 1e-12 and float(hi) >= 4 * math.pi / 3 - 0.6


def test_enclosure_soundness_and_monotonicity():
    p = random_polytope(23, 6)
    widths = []
    for level in (0, 1, 2):
        w = qm.mixed_quermass(p, p, 1, level=level)
        lo, hi = intervals.endpoints(w)
        assert lo <= hi
        assert intervals.overlap(w, qm.quermassintegral(p, 1))
        widths.append(float(hi - lo))
    assert widths[0] > widths[1] > widths[2]


def test_steiner_point():
    s = qm.steiner_point(Polytope.box(0, 1, 3))
    assert all(abs(intervals.midpoint_float(c) - 0.5) < 1e-12 for c in s)
    z = Zonotope([(1, 0, 0), (0, 1, 0), (1, 1, 1), (2, 1, 0)]).to_polytope()
    assert all(abs(intervals.midpoint_float(c)) < 1e-12 for c in qm.steiner_point(z))
    p = random_polytope(6, 7)
    shift = (Fraction(7, 4), Fraction(-2, 3), 5)
    s0 = qm.steiner_point(p)
    s1 = qm.steiner_point(p.translate(shift))
    for c0, c1, d in zip(s0, s1, shift):
        assert abs(intervals.midpoint_float(c1) - intervals.midpoint_float(c0) - float(d)) < 1e-12
    with pytest.raises(DegenerateBodyError):
        qm.steiner_point(Polytope.segment((0, 0, 0), (1, 1, 1)))


def test_ball_approx_contract():
    for level in (0, 1, 2):
        b = ball_approx(level)
        assert b.facet_count == 20 * 4 ** level
        assert all(vdot(v, v) <= 1 for v in b.vertices)
        assert 0 < b.inradius_lo < 1
    assert ball_approx(2).gap() < ball_approx(1).gap() < ball_approx(0).gap()


def test_derived_projection():
    p = random_polytope(12, 6)
    assert set(qm.derived_projection(p, 2).generators) == set(projection_body(p).generators)
    # Pi_1 homogeneity of degree 1
    e1 = qm.derived_projection(p, 1, level=1)
    e3 = qm.derived_projection(p.scale(3), 1, level=1)
    u = (Fraction(1), Fraction(2), Fraction(-1))
    a = intervals.midpoint_float(e1.support(u))
    b = intervals.midpoint_float(e3.support(u))
    assert abs(b / a - 3) < 1e-9
    # Pi_1 of the ball approximation approaches the ball
    errs = []
    for level in (1, 2):
        body = ball_approx(level).inner_polytope()
        ev = qm.Pi1Body(body, level)
        h = ev.support(u)
        nrm = math.sqrt(6)
        lo, hi = intervals.endpoints(h)
        errs.append(max(abs(float(lo) / nrm - 1), abs(float(hi) / nrm - 1)))
    assert errs[1] < errs[0]
    with pytest.raises(ValueError):
        qm.derived_projection(p, 0)


def test_pi1_zonotope_disc_route_consistent_with_evaluator():
    z = Zonotope([(1, 0, 0), (0, 2, 0), (1, 1, 1)])
    ev = qm.Pi1Body(z.to_polytope(), level=3)
    u = (Fraction(1), Fraction(1), Fraction(0))
    enc = ev.support(u)
    exact = 0.0
    for g in z.generators:
        gv = [float(c) for c in g]
        cx = [gv[1] * float(u[2]) - gv[2] * float(u[1]),
              gv[2] * float(u[0]) - gv[0] * float(u[2]),
              gv[0] * float(u[1]) - gv[1] * float(u[0])]
        exact += math.sqrt(sum(c * c for c in cx)) / math.pi
    lo, hi = intervals.endpoints(enc)
    assert float(lo) - 1e-9 <= exact <= float(hi) + 1e-9


def test_random_polytope_contract():
    p1 = random_polytope(7, 8)
    assert p1 == random_polytope(7, 8)
    assert len(p1.vertices) <= 8 and not p1.degenerate
    simplex = random_polytope(1, 4)
    assert len(simplex.vertices) == 4
    with pytest.raises(ValueError):
        random_polytope(1, 3)


def test_2d_bodies():
    sq = Polytope([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)], 2)
    assert sq.volume() == 4 and len(sq.vertices) == 4
    tri = Polytope([(0, 0), (1, 0), (0, 1)], 2)
    assert mixed_volume([sq, tri]) == (sq.minkowski(tri).volume()
                                       - sq.volume() - tri.volume()) / 2
    pb = projection_body(sq)
    # 2D projection body: rotated difference body; for the square a square
    assert pb.support((1, 0)) == 2 and pb.support((0, 1)) == 2
