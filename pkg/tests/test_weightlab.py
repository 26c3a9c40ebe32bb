"""Character arithmetic: frozen examples plus algebraic properties."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from valharm import weightlab as wl


def test_validate_highest_weight():
    assert wl.validate_highest_weight(5, (2, 1)) is True
    assert wl.validate_highest_weight(6, (2, 2, -2)) is True
    assert wl.validate_highest_weight(5, (1, -1)) is False
    assert wl.validate_highest_weight(6, (1, 2, 0)) is False
    with pytest.raises(wl.WeightError):
        wl.validate_highest_weight(5, (1, 0, 0))


def test_conjugate_partition():
    assert wl.conjugate_partition((2, 2, 1, 0), 3) == (3, 2, 0)
    assert wl.conjugate_partition((0, 0, 0), 1) == (0,)
    assert wl.conjugate_partition((2, 2), 2) == (2, 2)
    assert wl.conjugate_partition((2, 2), 4) == (2, 2, 0, 0)
    with pytest.raises(wl.WeightError):
        wl.conjugate_partition((3, 1), 2)


def test_fundamental_character_examples():
    e1 = wl.fundamental_character(5, 1)
    assert e1.support == {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1, (0, 0): 1}
    assert wl.fundamental_character(6, 0).support == {(0, 0, 0): 1}
    assert wl.fundamental_character(5, 7).is_zero()
    assert wl.fundamental_character(5, -1).is_zero()


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_fundamental_reflection_and_mass(n):
    for i in range(n + 1):
        ei = wl.fundamental_character(n, i)
        assert ei == wl.fundamental_character(n, n - i)
        assert ei.mass() == wl.binomial(n, i)


def test_char_sum():
    e1 = wl.fundamental_character(5, 1)
    assert wl.char_sum(e1, wl.zero_character(5)) == e1
    doubled = wl.char_sum(e1, e1)
    assert all(v == 2 for v in doubled.support.values())
    # mass additivity against the Weyl dimension oracle
    a = wl.irreducible_character(5, (2, 0))
    b = wl.irreducible_character(5, (1, 1))
    assert wl.char_sum(a, b).mass() == wl.dimension(5, (2, 0)) + wl.dimension(5, (1, 1))
    with pytest.raises(wl.GroupMismatchError):
        wl.char_sum(e1, wl.fundamental_character(6, 1))


def test_char_product():
    e1 = wl.fundamental_character(5, 1)
    assert wl.char_product(e1, wl.trivial_character(5)) == e1
    sq = wl.char_product(e1, e1)
    assert sq.mass() == 25
    assert wl.decompose_character(sq) == [((2, 0), 1), ((1, 1), 1), ((0, 0), 1)]


def test_irreducible_character_examples():
    assert wl.irreducible_character(5, (0, 0)).support == {(0, 0): 1}
    assert wl.irreducible_character(5, (1, 0)) == wl.fundamental_character(5, 1)
    split = wl.char_sum(wl.irreducible_character(6, (1, 1, 1)),
                        wl.irreducible_character(6, (1, 1, -1)))
    assert split == wl.fundamental_character(6, 3)


def test_dimension_examples():
    assert wl.dimension(5, (0, 0)) == 1
    assert wl.dimension(5, (1, 0)) == 5
    # Lambda^2 of C^5: brute-force subset count as the independent oracle
    assert wl.dimension(5, (1, 1)) == len(list(itertools.combinations(range(5), 2)))
    assert wl.dimension(3, (7,)) == 15
    assert wl.dimension(6, (1, 1, -1)) == 10


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_mass_equals_dimension(n):
    m = n // 2
    seen = 0
    for lam in itertools.product(range(3, -1, -1), repeat=m):
        try:
            ok = wl.validate_highest_weight(n, lam)
        except wl.WeightError:
            continue
        if not ok or lam[0] > 3:
            continue
        assert wl.irreducible_character(n, lam).mass() == wl.dimension(n, lam)
        seen += 1
    assert seen > 0


def test_barred_character():
    assert wl.barred_character(5, (2, 0)) == wl.irreducible_character(5, (2, 0))
    assert wl.barred_character(6, (1, 1, 1)) == wl.fundamental_character(6, 3)
    assert wl.barred_character(6, (2, 0, 0)) == wl.irreducible_character(6, (2, 0, 0))
    with pytest.raises(wl.WeightError):
        wl.barred_character(6, (2, 2, -2))


def test_second_determinantal_examples():
    assert wl.second_determinantal_character(5, (1, 0)) == wl.fundamental_character(5, 1)
    assert wl.second_determinantal_character(7, (1, 0, 0)) == wl.fundamental_character(7, 1)
    assert wl.second_determinantal_character(5, (1, 1)) == wl.fundamental_character(5, 2)
    assert wl.second_determinantal_character(5, (2, 2)) == wl.barred_character(5, (2, 2))
    assert wl.second_determinantal_character(4, (2, 2)) == wl.barred_character(4, (2, 2))


@pytest.mark.parametrize("lam", [(2, 2), (3, 1), (2, 0)])
def test_padding_invariance(lam):
    base = wl.second_determinantal_character(5, lam, s=max(lam[0], 1))
    for s in range(max(lam[0], 1) + 1, max(lam[0], 1) + 4):
        assert wl.second_determinantal_character(5, lam, s=s) == base


def test_decompose_idempotent_and_virtual_error():
    c = wl.irreducible_character(6, (2, 0, 0))
    assert wl.decompose_character(c) == [((2, 0, 0), 1)]
    virtual = wl.zero_character(5) - wl.irreducible_character(5, (1, 0))
    with pytest.raises(wl.NotACharacterError):
        wl.decompose_character(virtual)


def test_symmetric_power():
    assert wl.symmetric_power_character(5, 0) == wl.trivial_character(5)
    assert wl.symmetric_power_character(5, 1) == wl.fundamental_character(5, 1)
    s2 = wl.symmetric_power_character(5, 2)
    assert s2.mass() == 15
    assert wl.decompose_character(s2) == [((2, 0), 1), ((0, 0), 1)]
    for n in (4, 6):
        k = 3
        m = n // 2
        dec = wl.decompose_character(wl.symmetric_power_character(n, k))
        assert dec == [((k - 2 * j,) + (0,) * (m - 1), 1) for j in range(k // 2 + 1)]


def _orbit_preserved(c: wl.CharacterMap) -> bool:
    n = c.group.n
    for w, mult in list(c.support.items())[:12]:
        for img in list(wl.weyl_orbit(n, w))[:8]:
            if c.multiplicity(img) != mult:
                return False
    return True


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 7), st.data())
def test_weyl_invariance_of_products(n, data):
    m = n // 2
    i = data.draw(st.integers(0, n))
    j = data.draw(st.integers(0, n))
    c = wl.char_product(wl.fundamental_character(n, i), wl.fundamental_character(n, j))
    assert _orbit_preserved(c)


def _random_valid_weight(data, n, cap=3):
    m = n // 2
    entries = sorted(data.draw(st.lists(st.integers(0, cap), min_size=m, max_size=m)),
                     reverse=True)
    if n % 2 == 0 and entries[-1] != 0 and data.draw(st.booleans()):
        entries[-1] = -entries[-1]
    return tuple(entries)


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 6), st.data())
def test_decompose_round_trip(n, data):
    picks = [_random_valid_weight(data, n) for _ in range(data.draw(st.integers(1, 3)))]
    total = wl.zero_character(n)
    expected: dict = {}
    for lam in picks:
        total = total + wl.irreducible_character(n, lam)
        expected[lam] = expected.get(lam, 0) + 1
    assert dict(wl.decompose_character(total)) == expected


def test_weight_json_round_trip():
    n, lam = wl.weight_from_json(wl.weight_to_json(6, (2, 2, -2)))
    assert (n, lam) == (6, (2, 2, -2))
    c = wl.irreducible_character(5, (2, 1))
    assert wl.CharacterMap.from_json(c.to_json()) == c


def test_restriction_of_characters():
    # SO(4) standard restricted to SO(3): standard + trivial
    r = wl.fundamental_character(4, 1).restrict()
    assert wl.decompose_character(r) == [((1,), 1), ((0,), 1)]
    # odd -> even keeps the torus: supports agree
    c = wl.irreducible_character(5, (1, 1))
    assert c.restrict().support == c.support
