import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boselex.combinatorics import (
    count_configurations_exact,
    enumerate_configurations,
    ln_count_total,
    stirling_entropy,
)
from boselex.errors import DomainError, OracleTooLargeError

from oracles import brute_configurations, ln_binom_by_sum

LN_C_1999_1000 = 1381.5748463569201132  # mpmath, 40 digits, truncated


@pytest.mark.parametrize("n, g, expected", [(2, 2, 3), (0, 5, 1), (3, 2, 4), (2, 3, 6)])
def test_count_examples(n, g, expected):
    assert count_configurations_exact(n, g) == expected


def test_count_rejects_zero_degeneracy():
    with pytest.raises(DomainError):
        count_configurations_exact(3, 0)


def test_count_is_exact_for_huge_arguments():
    assert count_configurations_exact(500, 500) == math.comb(999, 500)


def test_enumerate_worked_example():
    assert enumerate_configurations(2, 2) == [(0, 2), (1, 1), (2, 0)]


def test_enumerate_small_cases():
    assert enumerate_configurations(0, 3) == [(0, 0, 0)]
    six = enumerate_configurations(2, 3)
    assert len(six) == 6 == count_configurations_exact(2, 3)
    assert six == brute_configurations(2, 3)


def test_enumerate_guard():
    with pytest.raises(OracleTooLargeError):
        enumerate_configurations(30, 30)


@pytest.mark.parametrize("n, g", [(n, g) for n in range(0, 7) for g in range(1, 5)])
def test_enumeration_matches_brute_force(n, g):
    assert enumerate_configurations(n, g) == brute_configurations(n, g)


def test_ln_count_examples():
    assert ln_count_total([(2, 2)]) == pytest.approx(math.log(3), rel=1e-15)
    assert ln_count_total([(0, 9)]) == 0.0
    assert ln_count_total([(1000, 1000)]) == pytest.approx(LN_C_1999_1000, rel=1e-13)
    assert ln_binom_by_sum(1000, 1000) == pytest.approx(LN_C_1999_1000, rel=1e-13)


@pytest.mark.parametrize("n, g", [(0, 1), (5, 3), (20, 44), (40, 24), (31, 33)])
def test_exact_and_lgamma_paths_agree(n, g):
    exact = ln_count_total([(n, g)], method="exact")
    lg = ln_count_total([(n, g)], method="lgamma")
    assert lg == pytest.approx(exact, rel=1e-12, abs=1e-12)
    assert exact == pytest.approx(ln_binom_by_sum(n, g), rel=1e-12, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5000), st.integers(1, 5000)), min_size=1, max_size=8))
def test_product_law(stats):
    whole = ln_count_total(stats)
    parts = math.fsum(ln_count_total([s]) for s in stats)
    assert whole == pytest.approx(parts, rel=1e-12, abs=1e-12)


def test_stirling_examples():
    assert stirling_entropy([(2, 2)]) == pytest.approx(4 * math.log(2), rel=1e-15)
    assert stirling_entropy([(0, 10)]) == 0.0
    assert stirling_entropy([(1000, 1000)]) == pytest.approx(2000 * math.log(2), rel=1e-15)
    assert stirling_entropy([]) == 0.0


def test_stirling_convergence():
    errors = []
    for k in range(1, 7):
        n = 10**k
        exact = ln_count_total([(n, n)])
        errors.append(abs(stirling_entropy([(n, n)]) - exact) / exact)
    assert all(a > b for a, b in zip(errors, errors[1:]))
    assert errors[2] < 0.005
    assert errors[2] == pytest.approx(0.0034160398732, rel=1e-6)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_stirling_monotone(n, g):
    base = stirling_entropy([(n, g)])
    assert stirling_entropy([(n + 1, g)]) > base
    assert stirling_entropy([(n, g + 1)]) > base


def test_stirling_overshoots_exact_at_small_arguments():
    # the approximation exceeds ln C in the small-argument regime
    assert stirling_entropy([(2, 2)]) > ln_count_total([(2, 2)])
