"""Branching and the two multiplicity computations."""

import pytest

from valharm import branchcalc as bc
from valharm import weightlab as wl


def test_branch_restriction_examples():
    assert bc.branch_restriction(5, (1, 0)).children == ((0, 0), (1, 0))
    assert bc.branch_restriction(6, (0, 0, 0)).children == ((0, 0),)
    assert bc.branch_restriction(4, (1, -1)).children == ((1,),)
    with pytest.raises(ValueError):
        bc.branch_restriction(3, (1,))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_branch_dimension_conservation(n):
    for lam in bc._valid_weights_up_to(n, 2):
        kids = bc.branch_restriction(n, lam).children
        assert sum(wl.dimension(n - 1, mu) for mu in kids) == wl.dimension(n, lam)


def test_induced_multiplicity_examples():
    assert bc.induced_multiplicity(5, (0, 0), (0, 0)) == 1
    assert bc.induced_multiplicity(5, (1, 0), (1, 0)) == 1
    assert bc.induced_multiplicity(5, (2, 0), (1, 0)) == 0
    with pytest.raises(wl.WeightError):
        bc.induced_multiplicity(5, (1,), (1, 0))


def test_frobenius_against_character_route():
    # multiplicity of sigma under restriction == coefficient in the
    # decomposition of the restricted character
    for n, lam in [(4, (2, 1)), (5, (2, 2)), (6, (2, 1, -1)), (5, (3, 1))]:
        restricted = wl.irreducible_character(n, lam).restrict()
        by_chars = dict(wl.decompose_character(restricted))
        kids = bc.branch_restriction(n, lam).children
        assert sorted(by_chars) == sorted(set(kids))
        assert all(v == 1 for v in by_chars.values())
        for sigma in by_chars:
            assert bc.induced_multiplicity(n, sigma, lam) == 1


def test_enumerate_sigma_set():
    assert [d.sigma for d in bc.enumerate_sigma_set(4, 3)] == [(0,)]
    assert [d.sigma for d in bc.enumerate_sigma_set(5, 4)] == [(0, 0)]
    descs = bc.enumerate_sigma_set(5, 3)
    assert sorted(d.sigma for d in descs) == [(0, 0), (1, 0), (2, 0)]
    signs = {d.sigma: d.sign for d in descs}
    assert signs == {(0, 0): 1, (1, 0): -1, (2, 0): 1}
    with pytest.raises(ValueError):
        bc.enumerate_sigma_set(5, 2)
    # the sigma sets used by the alternating sum never need barred splitting
    for n in range(3, 9):
        for i in range((n + 1) // 2, n):
            for d in bc.enumerate_sigma_set(n, i):
                assert d.sigma[-1] == 0 or (n - 1) % 2 == 1


def test_primitive_form_multiplicity():
    for n, i in [(5, 3), (6, 4), (7, 5)]:
        m = n // 2
        triv = (0,) * m
        for j in range(0, n - i):
            expected = 1 if j == n - 1 - i else 0
            assert bc.primitive_form_multiplicity(n, i, j, triv) == expected
    # splitting case reachable below the Lefschetz range: sigma = (1, 1) over SO(4)
    assert bc.primitive_form_multiplicity(5, 1, 1, (1, 1)) == \
        bc.induced_multiplicity(5, (1, 1), (1, 1)) + bc.induced_multiplicity(5, (1, -1), (1, 1))


def test_val_multiplicity_examples():
    assert bc.val_multiplicity_alternating(4, 2, (2, 2)) == 1
    assert bc.val_multiplicity_alternating(4, 2, (2, 1)) == 0
    assert bc.val_multiplicity_alternating_reduced(5, 2, (0, 0)) == 1
    assert bc.val_multiplicity_conditions(6, 3, (2, 2, -2)) == 1
    assert bc.val_multiplicity_conditions(5, 2, (3, 0)) == 1
    assert bc.val_multiplicity_conditions(5, 2, (3, 1)) == 0
    for n in (4, 5, 6):
        m = n // 2
        assert bc.val_multiplicity_conditions(n, 0, (0,) * m) == 1
        assert bc.val_multiplicity_conditions(n, 0, (2,) + (0,) * (m - 1)) == 0
    with pytest.raises(ValueError):
        bc.val_multiplicity_alternating(5, 1, (0, 0))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_main_theorem_small_grid(n):
    for lam in bc._valid_weights_up_to(n, 2):
        for i in range(n + 1):
            assert (bc.val_multiplicity_alternating_reduced(n, i, lam)
                    == bc.val_multiplicity_conditions(n, i, lam)), (n, i, lam)


def test_reduce_by_lefschetz():
    assert bc.reduce_by_lefschetz(5, 1) == 4
    assert bc.reduce_by_lefschetz(6, 3) == 3
    assert bc.reduce_by_lefschetz(7, 5) == 5
    assert bc.reduce_by_lefschetz(4, 0) == 4


def test_enumerate_val_weights():
    assert bc.enumerate_val_weights(4, 1, 3) == [(0, 0), (2, 0), (3, 0)]
    assert bc.enumerate_val_weights(4, 2, 2) == [(0, 0), (2, -2), (2, 0), (2, 2)]
    assert bc.enumerate_val_weights(7, 0, 5) == [(0, 0, 0)]
    # never emits duplicates
    ws = bc.enumerate_val_weights(6, 3, 4)
    assert len(ws) == len(set(ws))


def test_condition_set_closed_under_dualization():
    for n in (4, 6, 8, 10):
        for i in range(n + 1):
            for lam in bc.enumerate_val_weights(n, i, 3):
                assert bc.val_multiplicity_conditions(n, i, wl.dual_weight(n, lam)) == 1


def test_on_lift_classification():
    assert bc.on_lift_classification(5, (2, 0)).kind == bc.TWO_LIFTS
    paired = bc.on_lift_classification(6, (2, 2, 2))
    assert paired.kind == bc.PAIRED_LIFT and paired.partner == (2, 2, -2)
    assert not paired.lifts_individually
    assert bc.on_lift_classification(6, (2, 0, 0)).kind == bc.TWO_LIFTS


def test_reality_classification():
    assert bc.reality_classification(5, (3, 1)).kind == bc.REAL
    dp = bc.reality_classification(6, (2, 2, 2))
    assert dp.kind == bc.DUAL_PAIR and dp.partner == (2, 2, -2)
    assert bc.reality_classification(8, (2, 2, 2, 2)).kind == bc.REAL


def test_bivaluation_symmetry_verdicts():
    assert bc.bivaluation_symmetry_verdict(6, 3) == bc.ASYMMETRIC_WITNESS
    assert bc.bivaluation_symmetry_verdict(6, 2) == bc.ALWAYS_SYMMETRIC_SON
    for i in range(6):
        assert bc.bivaluation_symmetry_verdict(5, i) == bc.ALWAYS_SYMMETRIC_SON


def test_hard_lefschetz_check():
    assert bc.hard_lefschetz_check(5, 2, 4)
    assert bc.hard_lefschetz_check(6, 1, 4)
    assert bc.hard_lefschetz_check(7, 0, 4)


def test_equivariant_dimension_examples():
    assert bc.equivariant_dimension(5, 2, [((0, 0), 1)]) == 1
    assert bc.equivariant_dimension(5, 2, [((1, 0), 1)]) == 0
    dec = wl.decompose_character(wl.symmetric_power_character(5, 2))
    assert bc.equivariant_dimension(5, 2, dec) == 2
    assert bc.equivariant_dimension(5, 2, [((1, 1), 1)]) == 0
    # bare-weight form also accepted
    assert bc.equivariant_dimension(5, 2, [(0, 0), (2, 0)]) == 2


def test_multiplicity_record():
    rec = bc.multiplicity_record(6, 3, (2, 2, -2))
    assert rec == {"n": 6, "i": 3, "lambda": [2, 2, -2],
                   "mult_conditions": 1, "mult_alternating": 1}
