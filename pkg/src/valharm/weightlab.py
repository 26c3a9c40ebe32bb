"""Highest-weight combinatorics and character arithmetic for SO(n), n >= 3.

Irreducible representations are indexed by m-tuples of integers, m = n // 2,
non-increasing and non-negative for odd n (type B_m) and non-increasing with a
possibly negative last entry for even n (type D_m).  Characters are stored as
sparse maps from weight-lattice points to integer multiplicities, which makes
the ring operations (direct sum = pointwise sum, tensor product = lattice
convolution) exact and trivially correct at the ranks used here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

Weight = tuple[int, ...]


class WeightError(ValueError):
    """Invalid highest weight (wrong length or ordering constraints broken)."""


class GroupMismatchError(ValueError):
    """Character arithmetic attempted across different groups."""


class NotACharacterError(ValueError):
    """decompose_character received a virtual (signed) character."""


@dataclass(frozen=True)
class GroupTag:
    """Ambient dimension n with derived rank and Cartan family."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")

    @property
    def rank(self) -> int:
        return self.n // 2

    @property
    def family(self) -> str:
        return "B" if self.n % 2 == 1 else "D"


def validate_highest_weight(n: int, entries: Weight) -> bool:
    """True iff entries is a valid highest weight for SO(n).

    Raises WeightError when the tuple length differs from n // 2; the value
    conditions (non-increasing, sign constraint on the last entry) are what
    the boolean reports.
    """
    m = GroupTag(n).rank
    entries = tuple(entries)
    if len(entries) != m:
        raise WeightError(f"SO({n}) weights have {m} entries, got {len(entries)}")
    if any(not isinstance(e, int) for e in entries):
        return False
    if n == 2:
        return True
    if n % 2 == 1:
        return all(entries[j] >= entries[j + 1] for j in range(m - 1)) and entries[-1] >= 0
    if m == 1:
        return True
    head_ok = all(entries[j] >= entries[j + 1] for j in range(m - 2))
    return head_ok and entries[m - 2] >= abs(entries[m - 1])


def _require_valid(n: int, lam: Weight) -> Weight:
    lam = tuple(lam)
    if not validate_highest_weight(n, lam):
        raise WeightError(f"{lam} is not a valid highest weight for SO({n})")
    return lam


def dual_weight(n: int, lam: Weight) -> Weight:
    """Highest weight of the dual module: negate the last entry iff n = 2 mod 4."""
    lam = _require_valid(n, lam)
    if n % 4 == 2 and lam[-1] != 0:
        return lam[:-1] + (-lam[-1],)
    return lam


# -- Weyl group machinery ---------------------------------------------------

def is_dominant(n: int, w: Weight) -> bool:
    if n == 2:
        return True
    m = n // 2
    if n % 2 == 1:
        return all(w[j] >= w[j + 1] for j in range(m - 1)) and w[-1] >= 0
    if m == 1:
        return True
    return all(w[j] >= w[j + 1] for j in range(m - 2)) and w[m - 2] >= abs(w[m - 1])


def dominant_representative(n: int, w: Weight) -> Weight:
    """The dominant weight in the Weyl orbit of w."""
    if n == 2:
        return tuple(w)
    mags = sorted((abs(x) for x in w), reverse=True)
    if n % 2 == 1:
        return tuple(mags)
    negatives = sum(1 for x in w if x < 0)
    if 0 not in mags and negatives % 2 == 1:
        mags[-1] = -mags[-1]
    return tuple(mags)


def weyl_orbit(n: int, w: Weight) -> frozenset[Weight]:
    """All images of w under coordinate permutations and sign changes.

    Type B allows every sign pattern, type D only an even number of flips
    (odd patterns are reachable anyway whenever some entry vanishes).
    """
    if n == 2:
        return frozenset({tuple(w)})
    even_only = n % 2 == 0
    out: set[Weight] = set()
    for perm in set(itertools.permutations(w)):
        nonzero = [j for j, x in enumerate(perm) if x != 0]
        has_zero = len(nonzero) < len(perm)
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            if even_only and not has_zero and signs.count(-1) % 2 == 1:
                continue
            v = list(perm)
            for j, s in zip(nonzero, signs):
                v[j] = s * v[j]
            out.add(tuple(v))
    return frozenset(out)


@lru_cache(maxsize=None)
def _positive_roots(n: int) -> tuple[Weight, ...]:
    m = n // 2
    roots: list[Weight] = []

    def e(i: int, j: int, sj: int) -> Weight:
        v = [0] * m
        v[i] += 1
        if j >= 0:
            v[j] += sj
        return tuple(v)

    for i in range(m):
        for j in range(i + 1, m):
            roots.append(e(i, j, -1))
            roots.append(e(i, j, +1))
    if n % 2 == 1:
        for i in range(m):
            roots.append(e(i, -1, 0))
    return tuple(roots)


def _two_rho(n: int) -> Weight:
    m = n // 2
    if n % 2 == 1:
        return tuple(2 * (m - i) + 1 for i in range(1, m + 1))
    return tuple(2 * (m - i) for i in range(1, m + 1))


def _dot(a: Weight, b: Weight) -> int:
    return sum(x * y for x, y in zip(a, b))


def _in_positive_root_cone(n: int, diff: Weight) -> int | None:
    """Height of diff as a non-negative integer combination of simple roots.

    Returns None when diff is not in the cone.  Used both as the dominance
    filter and to give Freudenthal its processing order.
    """
    m = n // 2
    prefix = list(itertools.accumulate(diff))
    if n % 2 == 1 or n == 2:
        if any(p < 0 for p in prefix):
            return None
        return sum(prefix)
    if any(p < 0 for p in prefix[: m - 2]):
        return None
    if prefix[m - 1] % 2 != 0 or prefix[m - 1] < 0:
        return None
    c_last = prefix[m - 1] // 2
    c_prev = prefix[m - 2] - c_last
    if c_prev < 0:
        return None
    return sum(prefix[: m - 2]) + c_prev + c_last


def _dominant_weights_below(n: int, lam: Weight) -> list[tuple[Weight, int]]:
    """All dominant mu with lam - mu in the positive root cone, with heights."""
    m = n // 2
    top = lam[0] if m else 0
    found: list[tuple[Weight, int]] = []

    def extend(partial: list[int]) -> None:
        if len(partial) == m:
            for cand in ([tuple(partial)] if (n % 2 == 1 or partial[-1] == 0)
                         else [tuple(partial), tuple(partial[:-1] + [-partial[-1]])]):
                diff = tuple(a - b for a, b in zip(lam, cand))
                h = _in_positive_root_cone(n, diff)
                if h is not None:
                    found.append((cand, h))
            return
        lo, hi = 0, (partial[-1] if partial else top)
        for v in range(hi, lo - 1, -1):
            extend(partial + [v])

    if m == 0:
        return [((), 0)]
    extend([])
    found.sort(key=lambda t: (t[1], t[0]))
    return found


@lru_cache(maxsize=None)
def _freudenthal_dominant(n: int, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    """Multiplicities of the dominant weights of Gamma_lam (Freudenthal)."""
    if n == 2:
        return ((lam, 1),)
    roots = _positive_roots(n)
    two_rho = _two_rho(n)
    lam_norm = _dot(lam, lam)
    table: dict[Weight, int] = {}
    for mu, height in _dominant_weights_below(n, lam):
        if height == 0:
            table[mu] = 1
            continue
        num = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, alpha))
                if _dot(nu, nu) > lam_norm:
                    break
                mult = table.get(dominant_representative(n, nu), 0)
                if mult:
                    num += mult * _dot(nu, alpha)
                k += 1
        num *= 2
        # denominator (lam+rho, lam+rho) - (mu+rho, mu+rho) via difference of squares
        den = _dot(tuple(a + b + r for a, b, r in zip(lam, mu, two_rho)),
                   tuple(a - b for a, b in zip(lam, mu)))
        if den <= 0 or num % den != 0:
            raise AssertionError(f"Freudenthal inconsistency at {lam=}, {mu=}")
        table[mu] = num // den
    return tuple(sorted(table.items()))


# -- CharacterMap ------------------------------------------------------------

class CharacterMap:
    """Sparse weight-multiplicity map; the computational form of a character.

    Supports signed (virtual) multiplicities as intermediate values; only
    decompose_character insists on a genuine character.
    """

    __slots__ = ("group", "_support")

    def __init__(self, group: GroupTag, support: dict[Weight, int]):
        self.group = group
        self._support = {w: int(c) for w, c in support.items() if c != 0}

    @property
    def support(self) -> dict[Weight, int]:
        return dict(self._support)

    def multiplicity(self, w: Weight) -> int:
        return self._support.get(tuple(w), 0)

    def mass(self) -> int:
        return sum(self._support.values())

    def is_virtual(self) -> bool:
        return any(c < 0 for c in self._support.values())

    def is_zero(self) -> bool:
        return not self._support

    def _check(self, other: "CharacterMap") -> None:
        if self.group != other.group:
            raise GroupMismatchError(f"{self.group} vs {other.group}")

    def __add__(self, other: "CharacterMap") -> "CharacterMap":
        self._check(other)
        out = dict(self._support)
        for w, c in other._support.items():
            out[w] = out.get(w, 0) + c
        return CharacterMap(self.group, out)

    def __sub__(self, other: "CharacterMap") -> "CharacterMap":
        self._check(other)
        out = dict(self._support)
        for w, c in other._support.items():
            out[w] = out.get(w, 0) - c
        return CharacterMap(self.group, out)

    def __mul__(self, other: "CharacterMap") -> "CharacterMap":
        self._check(other)
        out: dict[Weight, int] = {}
        for w1, c1 in self._support.items():
            for w2, c2 in other._support.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                out[w] = out.get(w, 0) + c1 * c2
        return CharacterMap(self.group, out)

    def scaled(self, c: int) -> "CharacterMap":
        return CharacterMap(self.group, {w: c * v for w, v in self._support.items()})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CharacterMap) and self.group == other.group
                and self._support == other._support)

    def __hash__(self) -> int:
        return hash((self.group, frozenset(self._support.items())))

    def __repr__(self) -> str:
        return f"CharacterMap(SO({self.group.n}), {len(self._support)} weights, mass {self.mass()})"

    def restrict(self) -> "CharacterMap":
        """Restriction to SO(n-1) as a character of the smaller torus.

        For odd n the maximal torus is unchanged (same rank), so the map is
        reinterpreted; for even n the rank drops and fibers over the last
        coordinate are summed.
        """
        n = self.group.n
        if n < 3:
            raise ValueError("cannot restrict below SO(2)")
        child = GroupTag(n - 1)
        if n % 2 == 1:
            return CharacterMap(child, dict(self._support))
        out: dict[Weight, int] = {}
        for w, c in self._support.items():
            v = w[:-1]
            out[v] = out.get(v, 0) + c
        return CharacterMap(child, out)

    def to_json(self) -> dict:
        return {
            "n": self.group.n,
            "support": [[list(w), c] for w, c in sorted(self._support.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharacterMap":
        return cls(GroupTag(int(data["n"])),
                   {tuple(int(x) for x in w): int(c) for w, c in data["support"]})


def char_sum(a: CharacterMap, b: CharacterMap) -> CharacterMap:
    return a + b


def char_product(a: CharacterMap, b: CharacterMap) -> CharacterMap:
    return a * b


def zero_character(n: int) -> CharacterMap:
    return CharacterMap(GroupTag(n), {})


def trivial_character(n: int) -> CharacterMap:
    return CharacterMap(GroupTag(n), {(0,) * (n // 2): 1})


# test harness hook: maps (n, i) -> extra weight injected into E_i (see cli selftest)
_TAMPER: dict[tuple[int, int], Weight] = {}


@lru_cache(maxsize=None)
def _fundamental_character_cached(n: int, i: int) -> CharacterMap:
    group = GroupTag(n)
    m = group.rank
    if i < 0 or i > n:
        return CharacterMap(group, {})
    basis: list[Weight] = []
    for j in range(m):
        v = [0] * m
        v[j] = 1
        basis.append(tuple(v))
        basis.append(tuple(-x for x in v))
    if n % 2 == 1:
        basis.append((0,) * m)
    out: dict[Weight, int] = {}
    for subset in itertools.combinations(range(n), i):
        w = tuple(sum(basis[j][t] for j in subset) for t in range(m))
        out[w] = out.get(w, 0) + 1
    return CharacterMap(group, out)


def fundamental_character(n: int, i: int) -> CharacterMap:
    """Character E_i of the exterior power of the standard representation.

    E_i = 0 for i < 0 or i > n; E_0 = E_n = 1.
    """
    c = _fundamental_character_cached(n, i)
    extra = _TAMPER.get((n, i))
    if extra is not None:
        c = c + CharacterMap(c.group, {extra: 1})
    return c


@lru_cache(maxsize=None)
def _irreducible_character_cached(n: int, lam: Weight) -> CharacterMap:
    out: dict[Weight, int] = {}
    for mu, mult in _freudenthal_dominant(n, lam):
        for w in weyl_orbit(n, mu):
            out[w] = mult
    return CharacterMap(GroupTag(n), out)


def irreducible_character(n: int, lam: Weight) -> CharacterMap:
    """Full weight-multiplicity map of Gamma_lam via the Freudenthal recursion."""
    return _irreducible_character_cached(n, _require_valid(n, lam))


def dimension(n: int, lam: Weight) -> int:
    """Weyl dimension formula for Gamma_lam (independent of the character tables)."""
    lam = _require_valid(n, lam)
    m = n // 2
    if n == 2:
        return 1
    if n % 2 == 1:
        l = [2 * lam[i] + 2 * (m - i) - 1 for i in range(m)]   # doubled lam + rho
        r = [2 * (m - i) - 1 for i in range(m)]
    else:
        l = [lam[i] + (m - i - 1) for i in range(m)]
        r = [m - i - 1 for i in range(m)]
    val = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            val *= Fraction(l[i] ** 2 - l[j] ** 2, r[i] ** 2 - r[j] ** 2)
    if n % 2 == 1:
        for i in range(m):
            val *= Fraction(l[i], r[i])
    if val.denominator != 1 or val <= 0:
        raise AssertionError(f"dimension formula failed for {lam}")
    return int(val)


def conjugate_partition(lam: Weight, s: int) -> Weight:
    """mu_j = #{k : lam_k >= j} for j = 1..s; padding beyond lam_1 adds zeros."""
    lam = tuple(lam)
    top = max(lam) if lam else 0
    if s < top:
        raise WeightError(f"conjugate length s={s} below lambda_1={top}")
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, s + 1))


def barred_character(n: int, lam: Weight) -> CharacterMap:
    """char of Gamma-bar: Gamma_lam + Gamma_lam' for even n with lam_{n/2} != 0."""
    lam = _require_valid(n, lam)
    if any(x < 0 for x in lam):
        raise WeightError("barred modules take non-negative weights")
    c = irreducible_character(n, lam)
    if n % 2 == 0 and lam[-1] != 0:
        c = c + irreducible_character(n, lam[:-1] + (-lam[-1],))
    return c


def second_determinantal_character(n: int, lam: Weight, s: int | None = None) -> CharacterMap:
    """char Gamma-bar_lam as the s x s determinant in the E_i.

    Row i is (E_{mu_i-i+1}, E_{mu_i-i+2}+E_{mu_i-i}, ..., E_{mu_i-i+s}+E_{mu_i-i-s+2})
    with mu the conjugate of lam.  The value is independent of s >= lambda_1.
    """
    lam = _require_valid(n, lam)
    if any(x < 0 for x in lam):
        raise WeightError("the determinantal formula takes non-negative weights")
    if s is None:
        s = max(lam[0] if lam else 0, 2)
    mu = conjugate_partition(lam, s)

    def entry(i: int, j: int) -> CharacterMap:
        # 1-indexed row/column
        base = mu[i - 1] - i
        if j == 1:
            return fundamental_character(n, base + 1)
        return fundamental_character(n, base + j) + fundamental_character(n, base - j + 2)

    matrix = [[entry(i, j) for j in range(1, s + 1)] for i in range(1, s + 1)]
    total = zero_character(n)
    for perm in itertools.permutations(range(s)):
        sign = _perm_sign(perm)
        term = trivial_character(n)
        for i in range(s):
            term = term * matrix[i][perm[i]]
        total = total + term.scaled(sign)
    return total


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def decompose_character(c: CharacterMap) -> list[tuple[Weight, int]]:
    """Write a genuine character as a sum of irreducibles.

    Greedy subtraction at the lexicographically maximal dominant weight of the
    remaining support (last entry compared by value).  Raises NotACharacterError
    on virtual input.
    """
    n = c.group.n
    remaining = dict(c._support)
    out: list[tuple[Weight, int]] = []
    while remaining:
        dominant = [w for w in remaining if is_dominant(n, w)]
        if not dominant:
            raise NotACharacterError("support has no dominant weight left")
        top = max(dominant)
        mult = remaining[top]
        if mult < 0:
            raise NotACharacterError(f"negative multiplicity {mult} at {top}")
        for w, k in irreducible_character(n, top)._support.items():
            new = remaining.get(w, 0) - mult * k
            if new:
                remaining[w] = new
            else:
                remaining.pop(w, None)
        out.append((top, mult))
    out.sort(reverse=True)
    return out


def symmetric_power_character(n: int, k: int) -> CharacterMap:
    """Character of Sym^k of the standard representation."""
    if k < 0:
        raise ValueError("k >= 0 required")
    group = GroupTag(n)
    m = group.rank
    basis: list[Weight] = []
    for j in range(m):
        v = [0] * m
        v[j] = 1
        basis.append(tuple(v))
        basis.append(tuple(-x for x in v))
    if n % 2 == 1:
        basis.append((0,) * m)
    out: dict[Weight, int] = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        w = tuple(sum(basis[j][t] for j in combo) for t in range(m))
        out[w] = out.get(w, 0) + 1
    return CharacterMap(group, out)


def weight_to_json(n: int, lam: Weight) -> dict:
    return {"n": n, "lambda": list(lam)}


def weight_from_json(data: dict) -> tuple[int, Weight]:
    n = int(data["n"])
    lam = tuple(int(x) for x in data["lambda"])
    return n, _require_valid(n, lam)


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
