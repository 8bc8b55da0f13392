import pytest
from hypothesis import given, settings, strategies as st

from greedycert.errors import FeasibilityError
from greedycert.instances import (
    dominated_singleton_instance,
    overlap_cycle_instance,
    random_coverage_instance,
)
from greedycert.matroids import UniformStringMatroid, enumerate_feasible_strings
from greedycert.valuations import (
    TabulatedSetFunction,
    Valuation,
    WeightedCoverage,
    check_submodular_monotone,
    rho,
    string_extension,
)


def test_normalization_shifts_raw_values():
    f = Valuation(lambda seq: 5.0 + len(seq))
    assert f(()) == 0.0
    assert f((1,)) == 1.0
    assert f.raw_empty_value == 5.0


def test_rho_at_empty_is_the_singleton_value():
    inst = overlap_cycle_instance()
    for a in inst.matroid.actions:
        assert rho(inst.valuation, inst.matroid, (), a) == inst.valuation((a,))


def test_rho_golden_values():
    i1 = overlap_cycle_instance()
    assert rho(i1.valuation, i1.matroid, (0,), 1) == 1.0
    i2 = dominated_singleton_instance()
    assert rho(i2.valuation, i2.matroid, (1,), 0) == 0.0


def test_rho_rejects_infeasible_pairs():
    inst = overlap_cycle_instance()
    with pytest.raises(FeasibilityError):
        rho(inst.valuation, inst.matroid, (0,), 0)  # repetition forbidden
    with pytest.raises(FeasibilityError):
        rho(inst.valuation, inst.matroid, (0, 1), 2)  # rank reached


def test_weighted_coverage_values():
    cov = WeightedCoverage([1, 1, 1], [[0, 1], [1, 2], [0, 2]])
    assert cov([0]) == 2.0
    assert cov([0, 1]) == 3.0
    assert cov([]) == 0.0


def test_weighted_coverage_validation():
    with pytest.raises(ValueError):
        WeightedCoverage([-1.0], [[0]])
    with pytest.raises(ValueError):
        WeightedCoverage([1.0], [[3]])


def test_tabulated_function_missing_key():
    f = TabulatedSetFunction({(): 0.0, (0,): 1.0})
    assert f([0]) == 1.0
    with pytest.raises(ValueError):
        f([1])


def test_string_extension_golden_and_empty():
    inst = overlap_cycle_instance()
    assert inst.valuation((0, 1)) == 3.0
    assert inst.valuation(()) == 0.0


@settings(deadline=None)
@given(st.integers(0, 50), st.permutations([0, 1, 2]))
def test_string_extension_permutation_invariance(seed, order):
    inst = random_coverage_instance(seed, n_sets=3, universe_size=5, rank=3)
    assert inst.valuation(tuple(order)) == inst.valuation((0, 1, 2))


def test_gains_match_direct_differences():
    inst = dominated_singleton_instance()
    f = inst.valuation
    assert f.gains((1,), [0, 2]) == [f((1, 0)) - f((1,)), f((1, 2)) - f((1,))]


def test_exhaustive_check_passes_on_golden_instances():
    for inst in (overlap_cycle_instance(), dominated_singleton_instance()):
        report = check_submodular_monotone(inst.valuation, inst.matroid)
        assert report.ok
        assert report.monotone_checked > 0 and report.dimret_checked > 0


def test_quadratic_length_violates_diminishing_returns():
    f = Valuation(lambda seq: float(len(seq)) ** 2)
    report = check_submodular_monotone(f, UniformStringMatroid(2, 3))
    assert report.dimret_violations
    assert not report.monotone_violations


def test_strictly_decreasing_function_violates_monotonicity():
    f = Valuation(lambda seq: -float(len(seq)))
    report = check_submodular_monotone(f, UniformStringMatroid(2, 2))
    assert report.monotone_violations


def test_sampled_check_counts_and_passes():
    inst = random_coverage_instance(3, n_sets=6, universe_size=6, rank=3)
    report = check_submodular_monotone(inst.valuation, inst.matroid, n_samples=500, seed=1)
    assert report.dimret_checked == 500
    assert report.ok


def test_empty_gain_dominates_all_gains():
    # rho_a(A) <= rho_a(()) for every feasible (A, a) on submodular instances
    for seed in range(10):
        inst = random_coverage_instance(seed, n_sets=5, universe_size=5, rank=3)
        f, m = inst.valuation, inst.matroid
        for prefix in enumerate_feasible_strings(m):
            for a in m.feasible_actions(prefix):
                assert rho(f, m, prefix, a) <= rho(f, m, (), a) + 1e-9
