"""Acceptance suite: the criteria the package must satisfy, run end to end.

Each criterion is a function returning (ok, detail); the CLI selftest and the
pytest acceptance module both dispatch here so there is a single source of
truth for grids, trial counts and tolerances.
"""

from __future__ import annotations

import math
import time
from contextlib import contextmanager

from . import branchcalc as bc
from . import intervals
from . import weightlab as wl
from .verify.reporting import ExperimentConfig, HOLDS_EXACT, VIOLATION
from .verify.campaigns import run_campaign

FULL_TRIALS = 100
QUICK_TRIALS = 10


@contextmanager
def character_tamper():
    """Test hook: corrupt one fundamental character table entry."""
    wl._TAMPER[(5, 1)] = (3, 3)
    bc.exterior_power_multiplicity.cache_clear()
    try:
        yield
    finally:
        wl._TAMPER.clear()
        bc.exterior_power_multiplicity.cache_clear()


def _weights_grid(n: int, cap: int):
    return bc._valid_weights_up_to(n, cap)


def criterion_01(trials: int) -> tuple[bool, str]:
    """Main-theorem oracle equivalence over n in 3..7, all i, lambda_1 <= 3."""
    t0 = time.monotonic()
    checked = 0
    for n in range(3, 8):
        for lam in _weights_grid(n, 3):
            for i in range(n + 1):
                alt = bc.val_multiplicity_alternating_reduced(n, i, lam)
                cond = bc.val_multiplicity_conditions(n, i, lam)
                if alt != cond:
                    return False, f"disagreement at n={n}, i={i}, lambda={lam}: {alt} vs {cond}"
                checked += 1
    dt = time.monotonic() - t0
    return dt <= 300, f"{checked} multiplicities, zero disagreements, {dt:.1f}s (limit 300s)"


def criterion_02(trials: int) -> tuple[bool, str]:
    """Second determinantal formula equals the Freudenthal barred character."""
    checked = 0
    for n in range(3, 8):
        for lam in _weights_grid(n, 3):
            if any(x < 0 for x in lam):
                continue
            if wl.second_determinantal_character(n, lam) != wl.barred_character(n, lam):
                return False, f"character mismatch at n={n}, lambda={lam}"
            checked += 1
    return True, f"{checked} exact CharacterMap identities"


def criterion_03(trials: int) -> tuple[bool, str]:
    """E_i E_j - E_{i-1} E_{j-1} identity for n in 4..8, all admissible (i, j)."""
    checked = 0
    for n in range(4, 9):
        for i in range(math.ceil(n / 2), n + 1):
            for j in range(0, n - i + 1):
                lhs = (wl.fundamental_character(n, i) * wl.fundamental_character(n, j)
                       - wl.fundamental_character(n, i - 1) * wl.fundamental_character(n, j - 1))
                m = n // 2
                ones = n - i - j
                rhs = wl.zero_character(n)
                if 0 <= ones <= m:
                    for twos in range(0, min(j, m - ones) + 1):
                        lam = (2,) * twos + (1,) * ones + (0,) * (m - ones - twos)
                        rhs = rhs + wl.barred_character(n, lam)
                if lhs != rhs:
                    return False, f"identity fails at n={n}, i={i}, j={j}"
                checked += 1
    return True, f"{checked} exact CharacterMap identities"


def criterion_04(trials: int) -> tuple[bool, str]:
    """Equivariant-valuation dimensions reproduce the worked examples."""
    checked = 0
    for n in range(3, 8):
        m = n // 2
        for i in range(n + 1):
            if bc.equivariant_dimension(n, i, [((0,) * m, 1)]) != 1:
                return False, f"trivial module fails at n={n}, i={i}"
            checked += 1
        for i in range(1, n):
            if bc.equivariant_dimension(n, i, [((1,) + (0,) * (m - 1), 1)]) != 0:
                return False, f"standard module fails at n={n}, i={i}"
            if m >= 2 and bc.equivariant_dimension(n, i, [((1, 1) + (0,) * (m - 2), 1)]) != 0:
                return False, f"rank-2 skew module fails at n={n}, i={i}"
            for k in range(7):
                dec = wl.decompose_character(wl.symmetric_power_character(n, k))
                got = bc.equivariant_dimension(n, i, dec)
                want = k // 2 + 1 if k % 2 == 0 else (k - 1) // 2
                if got != want:
                    return False, f"sym^{k} fails at n={n}, i={i}: {got} != {want}"
                checked += 4
    return True, f"{checked} dimension values match"


def criterion_05(trials: int) -> tuple[bool, str]:
    """Branching dimension conservation and Hard Lefschetz weight sets (cap 4)."""
    checked = 0
    for n in range(4, 8):
        for lam in _weights_grid(n, 3):
            kids = bc.branch_restriction(n, lam).children
            total = sum(wl.dimension(n - 1, mu) for mu in kids)
            if total != wl.dimension(n, lam):
                return False, f"dimension leak at n={n}, lambda={lam}"
            checked += 1
    for n in range(3, 8):
        for i in range(n + 1):
            if not bc.hard_lefschetz_check(n, i, 4):
                return False, f"Lefschetz weight sets differ at n={n}, i={i}"
            checked += 1
    return True, f"{checked} exact checks"


def criterion_06(trials: int) -> tuple[bool, str]:
    """Exact symmetry V(P,P,Pi Q) = V(Q,Q,Pi P) on seeded random pairs."""
    t0 = time.monotonic()
    cfg = ExperimentConfig("bivaluation-symmetry", i=2, trials=trials, seed=20260808)
    report = run_campaign(cfg)
    counts = report.summary()
    dt = time.monotonic() - t0
    random_ok = all(r.verdict == HOLDS_EXACT for r in report.records)
    if not random_ok or counts[VIOLATION]:
        return False, f"verdicts: {counts}"
    return dt <= 600, f"{trials} random pairs + probes all holds-exact, {dt:.1f}s (limit 600s)"


def criterion_07(trials: int) -> tuple[bool, str]:
    """Certified Brunn-Minkowski for the projection body, with homothety probes."""
    cfg = ExperimentConfig("bm-minkowski-valuation", i=2, trials=trials, seed=424243,
                           rel_tol_equality="1e-25")
    report = run_campaign(cfg)
    counts = report.summary()
    if counts[VIOLATION] or counts["inconclusive-enclosure"]:
        return False, f"verdicts: {counts}"
    bound = intervals.iv_from_decimal("1e-25")
    for rec in report.records:
        if "homothety" in rec.kind:
            if not intervals.abs_le(rec.slack, bound):
                return False, f"probe {rec.kind} slack outside 1e-25"
    return True, f"{trials} certified slacks >= 0; 3 homothety probes within 1e-25"


def criterion_08(trials: int) -> tuple[bool, str]:
    """Class reduction for Pi: exact rational verdicts, cube equality probe."""
    cfg = ExperimentConfig("class-reduction", i=2, trials=trials, seed=555)
    report = run_campaign(cfg)
    counts = report.summary()
    if counts[VIOLATION] or counts["inconclusive-enclosure"] or counts["holds-certified"]:
        return False, f"non-exact verdicts: {counts}"
    cube = next(r for r in report.records if r.kind == "probe-cube")
    if cube.slack != 0:
        return False, "cube probe is not an exact equality"
    return True, f"{trials} exact verdicts, zero violations, cube probe slack 0"


def criterion_09(trials: int) -> tuple[bool, str]:
    """r(Pi) constancy across 20 diverse bodies at >= 10^4 ball facets."""
    cfg = ExperimentConfig("r-constant", i=2, trials=20, seed=99, ball_level=5)
    report = run_campaign(cfg)
    if report.extras.get("r_enclosure") is None:
        return False, "ratio enclosures have empty intersection"
    if report.extras["ball_facets"] < 10_000:
        return False, f"ball level too coarse: {report.extras['ball_facets']} facets"
    relw = report.extras["r_relative_width"]
    if relw > 1e-4:
        return False, f"common enclosure relative width {relw:.2e} > 1e-4"
    mid = report.extras["r_midpoint"]
    return True, (f"r(Pi) = {mid!r} (derived constant; relative width {relw:.1e}; "
                  f"{report.extras['ball_facets']} ball facets)")


def criterion_10(trials: int) -> tuple[bool, str]:
    """Bivaluation symmetry verdicts match the closed form over n in 3..10."""
    asymmetric = []
    for n in range(3, 11):
        for i in range(n + 1):
            by_reality = bc.bivaluation_symmetry_verdict(n, i)
            by_formula = bc.asymmetric_pair_formula(n, i)
            if (by_reality == bc.ASYMMETRIC_WITNESS) != by_formula:
                return False, f"derivations disagree at n={n}, i={i}"
            if by_formula:
                asymmetric.append((i, n))
    if asymmetric != [(3, 6), (5, 10)]:
        return False, f"asymmetric set {asymmetric} != [(3, 6), (5, 10)]"
    return True, "verdict table matches; asymmetric exactly at (3,6) and (5,10)"


CRITERIA = {
    1: ("main-theorem oracle equivalence", criterion_01),
    2: ("two-path character identity", criterion_02),
    3: ("exterior-power product identity", criterion_03),
    4: ("equivariant dimension examples", criterion_04),
    5: ("branching conservation + Hard Lefschetz", criterion_05),
    6: ("exact bivaluation symmetry (geometry)", criterion_06),
    7: ("Brunn-Minkowski for the projection body", criterion_07),
    8: ("class reduction", criterion_08),
    9: ("r(Pi) constancy", criterion_09),
    10: ("symmetry verdict table", criterion_10),
}


def run(quick: bool = False, criteria=None, trials_override=None, tamper: bool = False) -> int:
    trials = trials_override or (QUICK_TRIALS if quick else FULL_TRIALS)
    wanted = criteria or sorted(CRITERIA)
    failures = 0
    ctx = character_tamper() if tamper else _null_context()
    with ctx:
        for key in wanted:
            if key not in CRITERIA:
                print(f"[SKIP] criterion {key}: unknown")
                continue
            name, fn = CRITERIA[key]
            try:
                ok, detail = fn(trials)
            except Exception as exc:   # a broken identity may surface as an exception
                ok, detail = False, f"raised {type(exc).__name__}: {exc}"
            tag = "PASS" if ok else "FAIL"
            print(f"[{tag}] criterion {key:2d} ({name}): {detail}")
            if not ok:
                failures += 1
    return 0 if failures == 0 else 2


@contextmanager
def _null_context():
    yield
