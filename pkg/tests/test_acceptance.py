"""Acceptance suite: every criterion at its stated scale and tolerance.

Each test emits one pass/fail line outside the capture (visible in any pytest
run); the CLI selftest runs the same criterion functions.
"""

from valharm import selftest


def _run(capfd, key: int, trials: int = selftest.FULL_TRIALS):
    name, fn = selftest.CRITERIA[key]
    ok, detail = fn(trials)
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {key:2d} ({name}): {detail}"
    with capfd.disabled():
        print(line, flush=True)
    assert ok, f"criterion {key} ({name}): {detail}"


def test_criterion_01_main_theorem_oracle_equivalence(capfd):
    _run(capfd, 1)


def test_criterion_02_two_path_character_identity(capfd):
    _run(capfd, 2)


def test_criterion_03_exterior_power_product_identity(capfd):
    _run(capfd, 3)


def test_criterion_04_equivariant_dimension_examples(capfd):
    _run(capfd, 4)


def test_criterion_05_branching_and_hard_lefschetz(capfd):
    _run(capfd, 5)


def test_criterion_06_exact_geometric_symmetry(capfd):
    _run(capfd, 6)


def test_criterion_07_projection_body_brunn_minkowski(capfd):
    _run(capfd, 7)


def test_criterion_08_class_reduction(capfd):
    _run(capfd, 8)


def test_criterion_09_r_constant(capfd):
    _run(capfd, 9)


def test_criterion_10_symmetry_verdict_table(capfd):
    _run(capfd, 10)
