"""Branching rules and the two independent computations of m(Val_i, lambda).

The closed-form route checks three arithmetic conditions on the highest
weight; the alternating-sum route re-runs the interlacing/induction bookkeeping
that proves them.  Both are exposed so the main theorem can be executed as an
exact integer identity over a desk-scale grid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import weightlab as wl
from .weightlab import Weight, WeightError

TWO_LIFTS = "two-lifts"
NO_LIFT = "no-lift"
PAIRED_LIFT = "paired-lift"

REAL = "real"
DUAL_PAIR = "dual-pair"

ALWAYS_SYMMETRIC_ON = "always-symmetric-O(n)"
ALWAYS_SYMMETRIC_SON = "always-symmetric-SO(n)"
ASYMMETRIC_WITNESS = "asymmetric-witness-exists"


class InternalInconsistencyError(RuntimeError):
    """The alternating sum left {0, 1}: one of the two routes is broken."""


@dataclass(frozen=True)
class BranchList:
    parent_n: int
    parent: Weight
    children: tuple[Weight, ...]

    def to_json(self) -> dict:
        return {
            "n": self.parent_n,
            "lambda": list(self.parent),
            "children": [list(c) for c in self.children],
        }


@dataclass(frozen=True)
class SigmaDescriptor:
    n: int
    i: int
    j: int
    sigma: Weight

    @property
    def sign_exponent(self) -> int:
        return sum(self.sigma) % 2

    @property
    def sign(self) -> int:
        return -1 if self.sign_exponent else 1


def star_weight(n: int, lam: Weight) -> Weight:
    """lambda* = (min(lambda_1, 2), |lambda_2|, ..., |lambda_m|)."""
    lam = wl._require_valid(n, lam)
    if not lam:
        return lam
    return (min(lam[0], 2),) + tuple(abs(x) for x in lam[1:])


@lru_cache(maxsize=None)
def _branch_weights(n: int, lam: Weight) -> tuple[Weight, ...]:
    """Interlacing children of Gamma_lam under SO(n) -> SO(n-1), n >= 3.

    Children of SO(3) live over SO(2) (single signed integers); they only feed
    the n = 3 sigma sums and are never exposed as public BranchLists.
    """
    m = n // 2
    k = (n - 1) // 2
    out: list[Weight] = []
    if n % 2 == 1:
        # mu_j in [lam_{j+1}, lam_j] for j < k; mu_k in [-lam_m, lam_m]
        ranges = [range(lam[j + 1], lam[j] + 1) for j in range(k - 1)]
        ranges.append(range(-lam[m - 1], lam[m - 1] + 1))
    else:
        # mu_j in [lam_{j+1}, lam_j] for j <= m-2; mu_{m-1} in [|lam_m|, lam_{m-1}]
        ranges = [range(lam[j + 1], lam[j] + 1) for j in range(m - 2)]
        ranges.append(range(abs(lam[m - 1]), lam[m - 2] + 1))
    for mu in itertools.product(*ranges):
        out.append(tuple(mu))
    out.sort()
    return tuple(out)


def branch_restriction(n: int, lam: Weight) -> BranchList:
    """All SO(n-1) constituents of Gamma_lam, each with multiplicity one."""
    if n < 4:
        raise ValueError(f"branch_restriction needs n >= 4, got {n}")
    lam = wl._require_valid(n, lam)
    return BranchList(n, lam, _branch_weights(n, lam))


def induced_multiplicity(n: int, sigma: Weight, lam: Weight) -> int:
    """Multiplicity of Gamma_lam in the module induced from Gamma_sigma.

    By Frobenius reciprocity this is the number of times sigma occurs in the
    restriction of Gamma_lam, which the interlacing pattern makes 0 or 1.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    lam = wl._require_valid(n, lam)
    sigma = tuple(sigma)
    if len(sigma) != (n - 1) // 2:
        raise WeightError(f"sigma must be an SO({n-1}) weight")
    if n - 1 >= 3 and not wl.validate_highest_weight(n - 1, sigma):
        raise WeightError(f"{sigma} is not a valid highest weight for SO({n-1})")
    return int(sigma in _branch_weights(n, lam))


def _induced_barred_multiplicity(n: int, sigma: Weight, lam: Weight) -> int:
    """Multiplicity of Gamma_lam in the module induced from Gamma-bar_sigma."""
    count = induced_multiplicity(n, sigma, lam)
    if (n - 1) % 2 == 0 and sigma and sigma[-1] != 0:
        count += induced_multiplicity(n, sigma[:-1] + (-sigma[-1],), lam)
    return count


@lru_cache(maxsize=None)
def enumerate_sigma_set(n: int, i: int) -> tuple[SigmaDescriptor, ...]:
    """The set P_i: non-negative SO(n-1) weights with entries <= 2 satisfying
    #(sigma,1) = n-1-i-j and #(sigma,2) <= j for some 0 <= j <= n-1-i."""
    if not (2 * i >= n and i < n):
        raise ValueError(f"enumerate_sigma_set needs n/2 <= i < n, got n={n}, i={i}")
    k = (n - 1) // 2
    out: list[SigmaDescriptor] = []
    for j in range(0, n - i):
        ones = n - 1 - i - j
        for twos in range(0, min(j, k - ones) + 1):
            if ones + twos > k:
                continue
            sigma = (2,) * twos + (1,) * ones + (0,) * (k - ones - twos)
            out.append(SigmaDescriptor(n, i, j, sigma))
    return tuple(out)


@lru_cache(maxsize=None)
def exterior_power_multiplicity(n: int, i: int, lam: Weight) -> int:
    """m(Lambda^i V_C, lambda), read off from the fundamental character."""
    if i < 0 or i > n:
        return 0
    dec = dict(wl.decompose_character(wl.fundamental_character(n, i)))
    return dec.get(lam, 0)


def primitive_form_multiplicity(n: int, i: int, j: int, lam: Weight) -> int:
    """Multiplicity of Gamma_lam in the primitive-form module of bidegree (i, j)."""
    if i < 0 or j < 0 or i + j > n - 1:
        raise ValueError(f"need i, j >= 0 with i + j <= n - 1, got {(i, j)}")
    lam = wl._require_valid(n, lam)
    k = (n - 1) // 2
    ones = n - 1 - i - j
    if ones < 0 or ones > k:
        return 0
    total = 0
    for twos in range(0, min(j, k - ones) + 1):
        sigma = (2,) * twos + (1,) * ones + (0,) * (k - ones - twos)
        total += _induced_barred_multiplicity(n, sigma, lam)
    return total


def reduce_by_lefschetz(n: int, i: int) -> int:
    """Degree at which the alternating sum is evaluated: n - i when i < n/2."""
    if not 0 <= i <= n:
        raise ValueError(f"degree {i} out of range for n={n}")
    return n - i if 2 * i < n else i


def val_multiplicity_alternating(n: int, i: int, lam: Weight) -> int:
    """m(Val_i, lambda) by the alternating sum over P_i (requires n/2 <= i <= n)."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not (2 * i >= n and i <= n):
        raise ValueError(f"alternating sum needs n/2 <= i <= n; reduce degree {i} first")
    lam = wl._require_valid(n, lam)
    total = (-1) ** (n - i) * exterior_power_multiplicity(n, i, lam)
    if i < n:
        for desc in enumerate_sigma_set(n, i):
            total += desc.sign * induced_multiplicity(n, desc.sigma, lam)
    if total not in (0, 1):
        raise InternalInconsistencyError(
            f"alternating sum gave {total} at n={n}, i={i}, lambda={lam}")
    return total


def val_multiplicity_alternating_reduced(n: int, i: int, lam: Weight) -> int:
    """Alternating-sum multiplicity with degrees i < n/2 routed through
    the Lefschetz isomorphism Val_i = Val_{n-i}."""
    return val_multiplicity_alternating(n, reduce_by_lefschetz(n, i), lam)


def val_multiplicity_conditions(n: int, i: int, lam: Weight) -> int:
    """1 iff lambda satisfies the three closed-form conditions for Val_i."""
    if not 0 <= i <= n:
        raise ValueError(f"degree {i} out of range for n={n}")
    lam = wl._require_valid(n, lam)
    cutoff = min(i, n - i)
    if any(lam[j] != 0 for j in range(cutoff, len(lam))):      # (i)
        return 0
    if any(abs(x) == 1 for x in lam):                          # (ii)
        return 0
    if len(lam) >= 2 and abs(lam[1]) > 2:                      # (iii)
        return 0
    return 1


def _valid_weights_up_to(n: int, cap: int) -> list[Weight]:
    m = n // 2
    out: list[Weight] = []

    def extend(partial: list[int]) -> None:
        if len(partial) == m:
            out.append(tuple(partial))
            return
        hi = partial[-1] if partial else cap
        last = len(partial) == m - 1
        for v in range(hi, -1, -1):
            extend(partial + [v])
            if last and n % 2 == 0 and v != 0:
                extend(partial + [-v])

    extend([])
    return sorted(out)


def enumerate_val_weights(n: int, i: int, cap: int) -> list[Weight]:
    """All highest weights of Val_i with lambda_1 <= cap, lexicographic order."""
    if cap < 0:
        raise ValueError("cap >= 0 required")
    return [lam for lam in _valid_weights_up_to(n, cap)
            if val_multiplicity_conditions(n, i, lam) == 1]


@dataclass(frozen=True)
class OnLift:
    """How Gamma_lam relates to restrictions of irreducible O(n) modules."""

    kind: str                      # TWO_LIFTS or PAIRED_LIFT
    partner: Weight | None = None  # the paired weight lambda' when kind == PAIRED_LIFT

    @property
    def lifts_individually(self) -> bool:
        # PAIRED_LIFT means Gamma_lam alone is not such a restriction (NO_LIFT
        # as a single module); only the pair {lam, lam'} restricts.
        return self.kind == TWO_LIFTS


def on_lift_classification(n: int, lam: Weight) -> OnLift:
    lam = wl._require_valid(n, lam)
    if n % 2 == 1 or lam[-1] == 0:
        return OnLift(TWO_LIFTS)
    return OnLift(PAIRED_LIFT, lam[:-1] + (-lam[-1],))


@dataclass(frozen=True)
class Reality:
    kind: str                      # REAL or DUAL_PAIR
    partner: Weight | None = None


def reality_classification(n: int, lam: Weight) -> Reality:
    lam = wl._require_valid(n, lam)
    if n % 4 != 2 or lam[-1] == 0:
        return Reality(REAL)
    return Reality(DUAL_PAIR, lam[:-1] + (-lam[-1],))


def asymmetric_pair_formula(n: int, i: int) -> bool:
    """Closed form: the asymmetric bidegrees are exactly (i, n) = (2k+1, 4k+2)."""
    return n % 4 == 2 and 2 * i == n


def bivaluation_symmetry_verdict(n: int, i: int, cap: int = 4) -> str:
    """Symmetry verdict for SO(n)-invariant bidegree-(i,i) bivaluations.

    Derived from reality of the constituents of Val_i: a dual pair among them
    yields an asymmetric witness; otherwise every SO(n)-invariant bivaluation
    of bidegree (i,i) is symmetric.  O(n)-invariant ones are always symmetric
    (ALWAYS_SYMMETRIC_ON describes that unconditional column).
    """
    if not 0 <= i <= n:
        raise ValueError(f"degree {i} out of range for n={n}")
    weights = enumerate_val_weights(n, i, cap)
    has_pair = any(reality_classification(n, lam).kind == DUAL_PAIR for lam in weights)
    return ASYMMETRIC_WITNESS if has_pair else ALWAYS_SYMMETRIC_SON


def hard_lefschetz_check(n: int, i: int, cap: int) -> bool:
    """Weight sets of Val_i and Val_{n-i} coincide (capped at lambda_1 <= cap)."""
    return enumerate_val_weights(n, i, cap) == enumerate_val_weights(n, n - i, cap)


def equivariant_dimension(n: int, i: int, constituents) -> int:
    """dim of the space of degree-i equivariant valuations with values in Gamma.

    constituents: the decomposition of Gamma as an iterable of weights or of
    (weight, multiplicity) pairs, e.g. weightlab.decompose_character output.
    Each constituent contributes via the highest weight of its dual.
    """
    total = 0
    for item in constituents:
        if item and isinstance(item[0], tuple):
            mu, mult = item
        else:
            mu, mult = tuple(item), 1
        total += mult * val_multiplicity_conditions(n, i, wl.dual_weight(n, mu))
    return total


def multiplicity_record(n: int, i: int, lam: Weight) -> dict:
    """JSON record comparing the two multiplicity computations."""
    lam = wl._require_valid(n, lam)
    cond = val_multiplicity_conditions(n, i, lam)
    alt = val_multiplicity_alternating_reduced(n, i, lam)
    return {
        "n": n,
        "i": i,
        "lambda": list(lam),
        "mult_conditions": cond,
        "mult_alternating": alt,
    }
