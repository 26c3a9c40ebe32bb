"""Verification campaigns: randomized exact / enclosure-certified checks of
the geometric inequalities in ambient dimension 3.

Every inequality on fractional powers is decided either by comparing integer
powers of exact rationals, or by certified interval arithmetic at the
configured precision; a VIOLATION verdict requires enclosures that are
disjoint in the violating direction.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import iv

from .. import intervals
from ..convexgeo import quermass as qm
from ..convexgeo.ball import ball_approx
from ..convexgeo.mixed import mixed_volume, mixed_volume_repeated, projection_body
from ..convexgeo.polytope import Polytope, random_polytope
from ..convexgeo.zonotope import Zonotope
from .reporting import (HOLDS_CERTIFIED, HOLDS_EXACT, INCONCLUSIVE, VIOLATION,
                        ExperimentConfig, Report, Stopwatch, TrialRecord)


def _trial_body(cfg: ExperimentConfig, trial: int, tag: int, k: int | None = None) -> Polytope:
    k = k if k is not None else 5 + (trial + tag) % 5
    return random_polytope(cfg.seed * 7919 + trial * 101 + tag, k)


def _body_json(p: Polytope) -> dict:
    return p.to_json()


def _ge_verdict_exact(lhs: Fraction, rhs: Fraction) -> str:
    return HOLDS_EXACT if lhs >= rhs else VIOLATION


def _eq_verdict_exact(lhs: Fraction, rhs: Fraction) -> str:
    return HOLDS_EXACT if lhs == rhs else VIOLATION


def _ge_verdict_iv(slack, floor) -> str:
    lo, hi = intervals.endpoints(slack)
    flo, _ = intervals.endpoints(floor)
    if lo >= flo:
        return HOLDS_CERTIFIED
    if hi < flo:
        return VIOLATION
    return INCONCLUSIVE


def _eq_verdict_iv(slack, tol_scale) -> str:
    """Equality within tolerance: slack inside [-tol, tol] certifies, an
    enclosure disjoint from it is a violation, anything else inconclusive."""
    lo, hi = intervals.endpoints(slack)
    tlo, thi = intervals.endpoints(tol_scale)
    if -tlo <= lo and hi <= tlo:
        return HOLDS_CERTIFIED
    if hi < -thi or lo > thi:
        return VIOLATION
    return INCONCLUSIVE


def _root(x, k: int):
    return intervals.root_iv(x if not isinstance(x, (int, Fraction)) else intervals.from_fraction(x), k)


def _scaled_tol(cfg: ExperimentConfig, scale):
    tol = cfg.rel_tol_iv()
    s = scale if not isinstance(scale, (int, Fraction)) else intervals.from_fraction(scale)
    return tol * s


_PROBE_SHIFT = (Fraction(3, 2), Fraction(-5, 8), Fraction(7, 4))


# -- Cor. 7.2 at i = n-1 (exact) and i = 1 (enclosures) -----------------------

def verify_bivaluation_symmetry(cfg: ExperimentConfig) -> Report:
    """W_{2-i}(K, Phi_i L) = W_{2-i}(L, Phi_i K) for the projection operators."""
    cfg.validate()
    report = Report(cfg)
    with Stopwatch() as watch:
        for t in range(cfg.trials):
            p = _trial_body(cfg, t, 1)
            q = _trial_body(cfg, t, 2)
            report.records.append(_symmetry_record(cfg, t, "random", p, q))
        t = cfg.trials
        p = _trial_body(cfg, t, 1)
        report.records.append(_symmetry_record(cfg, t, "probe-equal", p, p))
        report.records.append(
            _symmetry_record(cfg, t + 1, "probe-translate", p, p.translate(_PROBE_SHIFT)))
    report.wall_time_s = watch.elapsed
    return report


def _symmetry_record(cfg, index, kind, p, q) -> TrialRecord:
    inputs = {"P": _body_json(p), "Q": _body_json(q)}
    if cfg.i == 2:
        lhs = mixed_volume([p, p, projection_body(q)])
        rhs = mixed_volume([q, q, projection_body(p)])
        return TrialRecord(index, kind, inputs, lhs, rhs, lhs - rhs,
                           _eq_verdict_exact(lhs, rhs))
    pi_q = qm.Pi1Body(q, cfg.ball_level)
    pi_p = qm.Pi1Body(p, cfg.ball_level)
    lhs = qm.mixed_quermass(p, pi_q, 1, cfg.ball_level)
    rhs = qm.mixed_quermass(q, pi_p, 1, cfg.ball_level)
    slack = lhs - rhs
    verdict = _eq_verdict_iv(slack, _scaled_tol(cfg, lhs) + intervals.width_iv(lhs)
                             + intervals.width_iv(rhs))
    return TrialRecord(index, kind, inputs, lhs, rhs, slack, verdict,
                       note="equality certified up to enclosure width")


# -- Theorem 3 for Pi (exact volumes, certified sixth roots) ------------------

def verify_bm_minkowski_valuation(cfg: ExperimentConfig) -> Report:
    """V_3(Pi(P+Q))^{1/6} >= V_3(Pi P)^{1/6} + V_3(Pi Q)^{1/6}."""
    cfg.validate()
    report = Report(cfg)
    with Stopwatch() as watch:
        for t in range(cfg.trials):
            p = _trial_body(cfg, t, 3)
            q = _trial_body(cfg, t, 4)
            report.records.append(_bm_record(cfg, t, "random", p, q))
        base = _trial_body(cfg, cfg.trials, 3)
        idx = cfg.trials
        for t_scale in (Fraction(1, 2), Fraction(1), Fraction(3)):
            q = base.scale(t_scale).translate(_PROBE_SHIFT)
            report.records.append(
                _bm_record(cfg, idx, f"probe-homothety-t={t_scale}", base, q, equality=True))
            idx += 1
    report.wall_time_s = watch.elapsed
    return report


def _bm_record(cfg, index, kind, p, q, equality=False) -> TrialRecord:
    inputs = {"P": _body_json(p), "Q": _body_json(q)}
    vol_sum = projection_body(p.minkowski(q)).volume()
    vol_p = projection_body(p).volume()
    vol_q = projection_body(q).volume()
    lhs = _root(vol_sum, 6)
    rhs = _root(vol_p, 6) + _root(vol_q, 6)
    slack = lhs - rhs
    if equality:
        verdict = _eq_verdict_iv(slack, _scaled_tol(cfg, lhs))
        note = "homothety probe: equality expected"
    else:
        verdict = _ge_verdict_iv(slack, cfg.slack_floor_iv())
        note = ""
    return TrialRecord(index, kind, inputs, lhs, rhs, slack, verdict, note)


# -- Brunn-Minkowski for intrinsic volumes ------------------------------------

def verify_intrinsic_bm(cfg: ExperimentConfig) -> Report:
    """V_i(P+Q)^{1/i} >= V_i(P)^{1/i} + V_i(Q)^{1/i}, i in {2, 3}."""
    cfg.validate()
    report = Report(cfg)
    with Stopwatch() as watch:
        for t in range(cfg.trials):
            p = _trial_body(cfg, t, 5)
            q = _trial_body(cfg, t, 6)
            report.records.append(_intrinsic_record(cfg, t, "random", p, q))
        base = _trial_body(cfg, cfg.trials, 5)
        q = base.scale(2).translate(_PROBE_SHIFT)
        report.records.append(
            _intrinsic_record(cfg, cfg.trials, "probe-homothety", base, q, equality=True))
    report.wall_time_s = watch.elapsed
    return report


def _intrinsic_vol_iv(p: Polytope, i: int):
    v = qm.intrinsic_volume(p, i)
    return intervals.from_fraction(v) if isinstance(v, Fraction) else v


def _intrinsic_record(cfg, index, kind, p, q, equality=False) -> TrialRecord:
    i = cfg.i
    inputs = {"P": _body_json(p), "Q": _body_json(q)}
    lhs = _root(_intrinsic_vol_iv(p.minkowski(q), i), i)
    rhs = _root(_intrinsic_vol_iv(p, i), i) + _root(_intrinsic_vol_iv(q, i), i)
    slack = lhs - rhs
    if equality:
        verdict = _eq_verdict_iv(slack, _scaled_tol(cfg, lhs))
        return TrialRecord(index, kind, inputs, lhs, rhs, slack, verdict,
                           note="homothety probe: equality expected")
    return TrialRecord(index, kind, inputs, lhs, rhs, slack,
                       _ge_verdict_iv(slack, cfg.slack_floor_iv()))


# -- general Minkowski inequality ----------------------------------------------

def verify_general_minkowski(cfg: ExperimentConfig) -> Report:
    """W_i(K,L)^{3-i} >= W_i(K)^{2-i} W_i(L), exact for i = 0."""
    cfg.validate()
    report = Report(cfg)
    with Stopwatch() as watch:
        for t in range(cfg.trials):
            k = _trial_body(cfg, t, 7)
            l = _trial_body(cfg, t, 8)
            report.records.append(_genmink_record(cfg, t, "random", k, l))
        base = _trial_body(cfg, cfg.trials, 7)
        report.records.append(_genmink_record(cfg, cfg.trials, "probe-equal", base, base,
                                              equality=True))
    report.wall_time_s = watch.elapsed
    return report


def _genmink_record(cfg, index, kind, k, l, equality=False) -> TrialRecord:
    inputs = {"K": _body_json(k), "L": _body_json(l)}
    if cfg.i == 0:
        lhs = mixed_volume_repeated(k, l) ** 3
        rhs = k.volume() ** 2 * l.volume()
        verdict = (_eq_verdict_exact(lhs, rhs) if equality and kind == "probe-equal"
                   else _ge_verdict_exact(lhs, rhs))
        return TrialRecord(index, kind, inputs, lhs, rhs, lhs - rhs, verdict)
    w_kl = qm.mixed_quermass(k, l, 1, cfg.ball_level)
    w_k = qm.quermassintegral(k, 1)
    w_l = qm.quermassintegral(l, 1)
    lhs = w_kl ** 2
    rhs = w_k * w_l
    slack = lhs - rhs
    return TrialRecord(index, kind, inputs, lhs, rhs, slack,
                       _ge_verdict_iv(slack, cfg.slack_floor_iv()))


# -- general Brunn-Minkowski with a fixed reference body -----------------------

def verify_general_bm(cfg: ExperimentConfig) -> Report:
    """V_1(K+L, C)^{1/2} >= V_1(K, C)^{1/2} + V_1(L, C)^{1/2} for fixed C."""
    cfg.validate()
    report = Report(cfg)
    c = _trial_body(cfg, 999_999, 9, k=7)
    report.extras["reference_body_C"] = _body_json(c)
    with Stopwatch() as watch:
        for t in range(cfg.trials):
            k = _trial_body(cfg, t, 10)
            l = _trial_body(cfg, t, 11)
            report.records.append(_genbm_record(cfg, t, "random", k, l, c))
        base = _trial_body(cfg, cfg.trials, 10)
        report.records.append(_genbm_record(cfg, cfg.trials, "probe-equal", base, base, c))
    report.wall_time_s = watch.elapsed
    return report


def _genbm_record(cfg, index, kind, k, l, c) -> TrialRecord:
    inputs = {"K": _body_json(k), "L": _body_json(l)}
    v_sum = mixed_volume_repeated(k.minkowski(l), c)
    v_k = mixed_volume_repeated(k, c)
    v_l = mixed_volume_repeated(l, c)
    lhs = _root(v_sum, 2)
    rhs = _root(v_k, 2) + _root(v_l, 2)
    slack = lhs - rhs
    if kind == "probe-equal":
        verdict = _eq_verdict_iv(slack, _scaled_tol(cfg, lhs))
        return TrialRecord(index, kind, inputs, lhs, rhs, slack, verdict,
                           note="K = L: equality expected")
    return TrialRecord(index, kind, inputs, lhs, rhs, slack,
                       _ge_verdict_iv(slack, cfg.slack_floor_iv()))


# -- Lemma 7.3(a): the proportionality constant r(Phi_i) ------------------------

def _diverse_bodies(cfg: ExperimentConfig, count: int) -> list[tuple[str, Polytope]]:
    out: list[tuple[str, Polytope]] = [
        ("cube", Polytope.box(-1, 1, 3)),
        ("box", Polytope.box(0, 1, 3).apply_matrix([(2, 0, 0), (0, 1, 0), (0, 0, 3)])),
        ("simplex", Polytope.simplex()),
        ("simplex-scaled", Polytope.simplex().scale(Fraction(5, 2))),
        ("zonotope", Zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]).to_polytope()),
    ]
    t = 0
    while len(out) < count:
        out.append((f"random-{t}", _trial_body(cfg, t, 12, k=5 + t % 6)))
        t += 1
    return out[:count]


def verify_r_constant(cfg: ExperimentConfig) -> Report:
    """Constancy of W_2(Phi_i K) / W_{3-i}(K) across diverse bodies.

    For Pi both sides come from independent closed formulas (edge/angle
    integral vs facet norms); for Pi_1 the bodies are zonotopes, where
    Pi_1 Z is an exact sum of discs.
    """
    cfg.validate()
    report = Report(cfg)
    count = max(cfg.trials, 20)
    ball = ball_approx(cfg.ball_level)
    report.extras["ball_facets"] = ball.facet_count
    ratios = []
    with Stopwatch() as watch:
        if cfg.i == 2:
            for idx, (name, body) in enumerate(_diverse_bodies(cfg, count)):
                pk = projection_body(body).to_polytope()
                num = qm.quermassintegral(pk, 2)
                den = qm.quermassintegral(body, 1)
                ratio = num / den
                ratios.append(ratio)
                report.records.append(TrialRecord(
                    idx, name, {"K": _body_json(body)}, num, den, ratio, HOLDS_CERTIFIED,
                    note="ratio W_2(Pi K) / W_1(K)"))
        else:
            for idx in range(count):
                z = _random_zonotope(cfg, idx)
                num = qm.pi1_w2_zonotope(z)
                den = qm.quermassintegral(z.to_polytope(), 2)
                ratio = num / den
                ratios.append(ratio)
                report.records.append(TrialRecord(
                    idx, f"zonotope-{idx}", {"K": z.to_json()}, num, den, ratio,
                    HOLDS_CERTIFIED, note="ratio W_2(Pi_1 Z) / W_2(Z)"))
        common = ratios[0]
        for r in ratios[1:]:
            nxt = intervals.intersect(common, r)
            if nxt is None:
                common = None
                break
            common = nxt
        if common is None:
            for rec in report.records:
                rec.verdict = VIOLATION
            report.extras["r_enclosure"] = None
        else:
            report.extras["r_enclosure"] = intervals.to_json(common)
            report.extras["r_relative_width"] = intervals.rel_width_float(common)
            report.extras["r_midpoint"] = intervals.midpoint_float(common)
        if cfg.i == 1:
            report.extras["pi1_normalization"] = qm.Pi1Body.NORMALIZATION
    report.wall_time_s = watch.elapsed
    return report


def _random_zonotope(cfg: ExperimentConfig, idx: int) -> Zonotope:
    import random
    rng = random.Random(cfg.seed * 31337 + idx)
    gens = []
    for _ in range(4 + idx % 3):
        g = tuple(Fraction(rng.randint(-16, 16), 8) for _ in range(3))
        if any(c != 0 for c in g):
            gens.append(g)
    return Zonotope(gens)


def estimate_r_constant(cfg: ExperimentConfig) -> Report:
    return verify_r_constant(cfg)


# -- Lemma 7.3(b): the isoperimetric-type upper bound ---------------------------

def _r_pi_enclosure(seed: int) -> dict:
    """Cached r(Pi) estimate; the ratio route is closed-formula, so the ball
    refinement level plays no role in its value."""
    if seed not in _R_CACHE:
        r_cfg = ExperimentConfig("r-constant", i=2, trials=20, seed=seed, ball_level=0)
        r_report = verify_r_constant(r_cfg)
        r_json = r_report.extras.get("r_enclosure")
        if r_json is None:
            raise RuntimeError("r(Pi) estimation failed; cannot verify upper bound")
        _R_CACHE[seed] = r_json
    return _R_CACHE[seed]


_R_CACHE: dict[int, dict] = {}


def verify_upbound(cfg: ExperimentConfig) -> Report:
    """W_1(K)^3 >= (kappa_3^2 / r(Pi)^3) W_0(Pi K), using the estimated r."""
    cfg.validate()
    report = Report(cfg)
    r_json = _r_pi_enclosure(cfg.seed)
    r_enc = iv.mpf([r_json["lo"], r_json["hi"]])
    report.extras["r_enclosure"] = r_json
    kappa3 = qm.kappa_iv(3)
    with Stopwatch() as watch:
        for t in range(cfg.trials):
            k = _trial_body(cfg, t, 13)
            report.records.append(_upbound_record(cfg, t, "random", k, r_enc, kappa3))
        idx = cfg.trials
        report.records.append(_upbound_record(
            cfg, idx, "probe-cube", Polytope.box(-1, 1, 3), r_enc, kappa3,
            note="strictly positive slack expected"))
        ball_body = ball_approx(cfg.ball_level).inner_polytope()
        report.records.append(_upbound_record(
            cfg, idx + 1, "probe-ball", ball_body, r_enc, kappa3,
            note="slack shrinks to zero with the ball level"))
    report.wall_time_s = watch.elapsed
    return report


def _upbound_record(cfg, index, kind, k, r_enc, kappa3, note="") -> TrialRecord:
    inputs = {"K": _body_json(k)}
    w1 = qm.quermassintegral(k, 1)
    w0_pik = projection_body(k).volume()
    lhs = w1 ** 3
    rhs = kappa3 ** 2 / r_enc ** 3 * intervals.from_fraction(w0_pik)
    slack = lhs - rhs
    return TrialRecord(index, kind, inputs, lhs, rhs, slack,
                       _ge_verdict_iv(slack, cfg.slack_floor_iv()), note)


# -- Theorem 7.4: class reduction (fully rational for Pi) -----------------------

def verify_class_reduction(cfg: ExperimentConfig) -> Report:
    """W_0(Pi K)^3 >= W_0(Pi^2 K) W_0(K)^2, with equality for the cube."""
    cfg.validate()
    report = Report(cfg)
    with Stopwatch() as watch:
        for t in range(cfg.trials):
            k = _trial_body(cfg, t, 14, k=4 + t % 4)
            report.records.append(_classred_record(cfg, t, "random", k))
        cube = Polytope.box(-1, 1, 3)
        report.records.append(_classred_record(cfg, cfg.trials, "probe-cube", cube,
                                               equality=True))
        report.records.append(_classred_record(
            cfg, cfg.trials + 1, "probe-translate",
            _trial_body(cfg, 0, 14, k=4).translate(_PROBE_SHIFT)))
    report.wall_time_s = watch.elapsed
    return report


def _classred_record(cfg, index, kind, k, equality=False) -> TrialRecord:
    inputs = {"K": _body_json(k)}
    pik = projection_body(k)
    w0_pik = pik.volume()
    w0_pi2k = pik.projection_body().volume()
    w0_k = k.volume()
    lhs = w0_pik ** 3
    rhs = w0_pi2k * w0_k ** 2
    verdict = _eq_verdict_exact(lhs, rhs) if equality else _ge_verdict_exact(lhs, rhs)
    note = "Pi^2 K homothetic to K: equality expected" if equality else ""
    return TrialRecord(index, kind, inputs, lhs, rhs, lhs - rhs, verdict, note)


CAMPAIGN_RUNNERS = {
    "bivaluation-symmetry": verify_bivaluation_symmetry,
    "bm-minkowski-valuation": verify_bm_minkowski_valuation,
    "intrinsic-bm": verify_intrinsic_bm,
    "general-minkowski": verify_general_minkowski,
    "general-bm": verify_general_bm,
    "r-constant": verify_r_constant,
    "upbound": verify_upbound,
    "class-reduction": verify_class_reduction,
}


def run_campaign(cfg: ExperimentConfig) -> Report:
    cfg.validate()
    return CAMPAIGN_RUNNERS[cfg.campaign](cfg)
