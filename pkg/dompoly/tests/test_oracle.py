import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dompoly.core import VertexSet, is_dominating
from dompoly.oracle import (OracleBudgetExceeded, OracleLimits, count_row, dominating_masks, enumerate_dominating,
                            oracle_count, oracle_polynomial, popcount)
from dompoly.recurrence import count, polynomial


def test_oracle_count_examples():
    assert oracle_count(7, 3) == 14
    assert oracle_count(16, 6) == 56
    assert oracle_count(9, 9) == 1


def test_oracle_polynomial_examples():
    assert str(oracle_polynomial(4)) == 'x^4 + 4x^3 + 6x^2'
    assert str(oracle_polynomial(5)) == 'x^5 + 5x^4 + 10x^3 + 5x^2'
    assert str(oracle_polynomial(3)) == 'x^3 + 3x^2 + 3x'


@pytest.mark.parametrize('n', range(3, 15))
def test_count_row_matches_recurrence(n):
    assert count_row(n) == polynomial(n).coeffs


def test_enumerate_examples():
    assert enumerate_dominating(5, 2).to_lists() == [[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]]
    assert len(enumerate_dominating(4, 1)) == 0
    assert enumerate_dominating(6, 6).to_lists() == [[1, 2, 3, 4, 5, 6]]
    assert len(enumerate_dominating(6, 0)) == 0


def test_enumerate_matches_count():
    for n in range(3, 11):
        for i in range(n + 1):
            assert len(enumerate_dominating(n, i)) == count(n, i)


def test_partitioned_count_agrees():
    assert count_row(15, workers=4, chunk=1000) == count_row(15)
    assert count_row(9, chunk=7) == count_row(9)


@given(st.integers(3, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1))))
def test_mask_predicate_matches_core(case):
    n, mask = case
    verdict = dominating_masks(np.array([mask], dtype=np.uint64), n)[0]
    assert bool(verdict) == is_dominating(n, VertexSet.from_mask(mask, n))


def test_popcount():
    masks = np.array([0, 1, 0b1011, (1 << 40) - 1, (1 << 63) | 1], dtype=np.uint64)
    assert list(popcount(masks)) == [0, 1, 3, 40, 2]


def test_argument_checks():
    with pytest.raises(ValueError):
        oracle_count(2, 1)
    with pytest.raises(ValueError):
        oracle_count(5, 6)
    with pytest.raises(ValueError):
        enumerate_dominating(5, -1)


def test_budget():
    with pytest.raises(OracleBudgetExceeded) as e:
        count_row(12, limits=OracleLimits(max_subsets=1000))
    assert e.value.estimate == 4096
    assert e.value.budget == 1000

    with pytest.raises(OracleBudgetExceeded):
        enumerate_dominating(16, 8, limits=OracleLimits(max_subsets=100))

    with pytest.raises(OracleBudgetExceeded):
        oracle_count(25, 10)


def test_limits_from_env():
    assert OracleLimits.from_env({}) == OracleLimits()
    assert OracleLimits.from_env({'DOMPOLY_ORACLE_BUDGET': '5000'}).max_subsets == 5000
    with pytest.raises(ValueError):
        OracleLimits.from_env({'DOMPOLY_ORACLE_BUDGET': 'lots'})
    with pytest.raises(ValueError):
        OracleLimits(max_n=40)
