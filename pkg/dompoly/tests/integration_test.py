"""
End-to-end checks of every source of d(C_n, i) against the others: the recurrence table,
the published table, the exhaustive oracle, the explicit families, the generating
function and the coefficient identities.

The oracle runs take a few seconds; run this module directly to see timings.
"""

import time

import pytest

from dompoly.core import rotate
from dompoly.data import BASE_TOTALS, get_reference_table
from dompoly.families import build_family
from dompoly.genfunc import compare_with_table, expand, gf_coefficient
from dompoly.identities import check_all
from dompoly.oracle import count_row, enumerate_dominating
from dompoly.recurrence import build_table, count, evaluate, total_count


def test_reference_table():
    table = build_table(16)
    for n, row in get_reference_table().items():
        assert tuple(table[n, j] for j in range(1, n + 1)) == row, 'row {}'.format(n)


def test_oracle_counts(n_max=18, workers=1):
    for n in range(3, n_max + 1):
        row = count_row(n, workers=workers)
        for i in range(n + 1):
            assert row[i] == count(n, i), 'C_{} with {} vertices'.format(n, i)


def test_oracle_sets(n_max=13):
    for n in range(3, n_max + 1):
        for i in range(n + 1):
            assert build_family(n, i).label_sets() == enumerate_dominating(n, i).label_sets(), \
                'C_{} with {} vertices'.format(n, i)


def test_generating_function(n_max=30):
    assert compare_with_table(expand(n_max), build_table(n_max)) == []
    for n in range(4, n_max + 1):
        for i in range(n + 1):
            assert gf_coefficient(n, i) == count(n, i)


def test_identities(n_max=200):
    checks = check_all(n_max)
    assert len(checks) == 11
    for check in checks:
        assert check.passed, str(check)

    assert count(13, 11) == 78
    assert count(12, 9) == 208
    assert sum(count(i, 3) for i in range(3, 10)) == 54
    column = [count(n, 5) for n in range(5, 16)]
    assert max(column) == count(10, 5) == 102


def test_totals(n_max=200):
    for n, value in BASE_TOTALS.items():
        assert total_count(n) == value
    for n in range(4, n_max + 1):
        assert total_count(n) == total_count(n - 1) + total_count(n - 2) + total_count(n - 3)
        assert total_count(n) == evaluate(n, 1)


@pytest.mark.parametrize('n', range(3, 13))
def test_rotation_closure(n):
    for i in range(n + 1):
        for family in (build_family(n, i), enumerate_dominating(n, i)):
            members = set(family.members)
            assert all(rotate(s, 1) in members for s in members), 'C_{} with {} vertices'.format(n, i)


if __name__ == '__main__':
    for name, check in [('reference table', test_reference_table),
                        ('oracle counts', test_oracle_counts),
                        ('oracle sets', test_oracle_sets),
                        ('generating function', test_generating_function),
                        ('identities', test_identities),
                        ('totals', test_totals)]:
        start = time.time()
        check()
        print('{}: {:.2f} s'.format(name, time.time() - start))
