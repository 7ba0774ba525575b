import random

import pytest

from splitorders.dvr import hermite_normal_form, rational_valuation
from splitorders.exponent import ExponentMatrix, has_containing_maximal
from splitorders.fuzz import (
    CHECKS,
    FuzzConfig,
    box_scan_points,
    cycle_scan_feasible,
    minimize_failing_matrix,
    path_scan_hull,
    random_change_of_basis,
    random_exponent_matrix,
    random_triangular_form,
    random_unit_matrix,
    run_fuzz,
)


def test_config_validation():
    with pytest.raises(ValueError):
        FuzzConfig(trials=0)
    with pytest.raises(ValueError):
        FuzzConfig(entry_min=3, entry_max=-3)
    with pytest.raises(ValueError):
        FuzzConfig(n_min=1)
    with pytest.raises(ValueError):
        FuzzConfig(n_min=3, n_max=2)
    with pytest.raises(ValueError):
        FuzzConfig(n_max=7)


def test_small_run_passes_and_is_deterministic():
    config = FuzzConfig(trials=60, seed=9)
    first = run_fuzz(config)
    second = run_fuzz(config)
    assert first.ok
    assert first == second
    assert first.summary_lines() == second.summary_lines()


def test_different_seeds_draw_different_inputs():
    rng_a = random.Random(1)
    rng_b = random.Random(2)
    a = [random_exponent_matrix(rng_a, 3, -3, 5) for _ in range(8)]
    b = [random_exponent_matrix(rng_b, 3, -3, 5) for _ in range(8)]
    assert a != b


def test_check_names_unique_and_reported():
    names = [name for name, _ in CHECKS]
    assert len(names) == len(set(names))
    report = run_fuzz(FuzzConfig(trials=30, seed=3))
    assert [r.name for r in report.results] == names
    assert all(r.trials > 0 for r in report.results)


def test_generator_ranges():
    rng = random.Random(17)
    for _ in range(50):
        nu = random_exponent_matrix(rng, 4, -3, 5)
        for i in range(4):
            assert nu.entries[i][i] == 0
            for j in range(4):
                if i != j:
                    assert -3 <= nu.entries[i][j] <= 5


def test_unit_generator_lands_in_the_unit_group():
    rng = random.Random(19)
    for p in (2, 3, 5):
        for _ in range(25):
            U = random_unit_matrix(rng, 3, p)
            assert U.is_integral()
            assert rational_valuation(U.det(), p) == 0


def test_change_of_basis_is_invertible():
    rng = random.Random(23)
    for _ in range(25):
        g = random_change_of_basis(rng, 3, 2)
        assert g.det() != 0


def test_triangular_generator_is_canonical():
    rng = random.Random(29)
    for _ in range(40):
        H = random_triangular_form(rng, 3, 2)
        form, _ = hermite_normal_form(H)
        assert form.matrix == H


def test_referees_agree_with_library_on_a_known_case():
    nu = ExponentMatrix([[0, 0, 2], [3, 0, 1], [3, 2, 0]])
    assert cycle_scan_feasible(nu.entries)
    assert path_scan_hull(nu.entries) == [[0, 0, 1], [3, 0, 1], [3, 2, 0]]
    assert len(box_scan_points(nu.entries)) == 13


def test_minimizer_shrinks_to_a_single_entry():
    start = ExponentMatrix([[0, 3, -5], [2, 0, 4], [1, -2, 0]])
    failing = lambda m: not has_containing_maximal(m)
    assert failing(start)
    small = minimize_failing_matrix(start, failing)
    assert failing(small)
    assert small == ExponentMatrix([[0, 0, -1], [0, 0, 0], [0, 0, 0]])


def test_minimizer_keeps_the_input_when_nothing_shrinks():
    start = ExponentMatrix([[0, -1], [0, 0]])
    failing = lambda m: not has_containing_maximal(m)
    assert minimize_failing_matrix(start, failing) == start
