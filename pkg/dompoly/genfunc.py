"""
Coefficients of the bivariate generating function

    f(u, v) = sum over n >= 4 of d(C_n, i) u^n v^i = P(u, v) / (1 - uv - u^2 v - u^3 v)

The series is expanded by reading the denominator as a recurrence: the coefficient of
u^n v^i minus the coefficients of u^{n-k} v^{i-1} (k = 1, 2, 3) equals the coefficient of
u^n v^i in the numerator P, and every coefficient with n < 4 is zero.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from dompoly.data import BASE_ROWS

logger = logging.getLogger(__name__)

FIRST_ORDER = 4

# Numerator u^4 v^2 (6 + 4v + v^2 + 3u + 4uv + uv^2 + u^2 + 3u^2 v + u^2 v^2) as printed,
# keyed by (power of u, power of v).
PUBLISHED_NUMERATOR = {
    (4, 2): 6, (4, 3): 4, (4, 4): 1,
    (5, 2): 3, (5, 3): 4, (5, 4): 1,
    (6, 2): 1, (6, 3): 3, (6, 4): 1,
}


def numerator_from_base_rows():
    """
    Substitutes the rows of C_1, C_2 and C_3 into the three shifted sums: for n >= 4 the
    recurrence terms d(C_{n-k}, i-1) with n-k <= 3 fall outside the series and are what the
    numerator has to supply.

    :return: dict mapping (n, i) to the numerator coefficient of u^n v^i (nonzero terms only)
    """
    result = {}
    for n in range(FIRST_ORDER, FIRST_ORDER + 3):
        for i in range(1, n + 1):
            value = 0
            for k in (1, 2, 3):
                m = n - k
                if m in BASE_ROWS and 0 <= i - 1 <= m:
                    value += BASE_ROWS[m][i - 1]
            if value:
                result[(n, i)] = value
    return result


NUMERATOR = numerator_from_base_rows()


def published_differences():
    """
    :return: sorted (n, i, printed, derived) for every numerator coefficient of u^n v^i where
        PUBLISHED_NUMERATOR and NUMERATOR disagree
    """
    keys = sorted(set(NUMERATOR) | set(PUBLISHED_NUMERATOR))
    return [(n, i, PUBLISHED_NUMERATOR.get((n, i), 0), NUMERATOR.get((n, i), 0)) for n, i in keys
            if PUBLISHED_NUMERATOR.get((n, i), 0) != NUMERATOR.get((n, i), 0)]


@dataclass(frozen=True)
class BivariateSeries:
    """
    f(u, v) truncated at u^n_max. rows[n][i] is the coefficient of u^n v^i for
    4 <= n <= n_max and 0 <= i <= n.
    """

    n_max: int
    rows: Dict[int, Tuple[int, ...]]

    def coefficient(self, n, i):
        if n > self.n_max:
            raise ValueError('series is truncated at u^{}, asked for u^{}'.format(self.n_max, n))
        if n < FIRST_ORDER or i < 0 or i > n:
            return 0
        return self.rows[n][i]

    def row_sum(self, n):
        """
        :return: coefficient of u^n in f(u, 1)
        """
        if n < FIRST_ORDER:
            return 0
        return sum(self.rows[n])


def expand(n_max, numerator=None):
    """
    :param n_max: highest power of u to keep, at least 4
    :param numerator: dict (n, i) -> coefficient of P (defaults to NUMERATOR)
    :return: BivariateSeries of P / (1 - uv - u^2 v - u^3 v)
    """
    if n_max < FIRST_ORDER:
        raise ValueError('the series starts at u^{}; n_max must be at least {}, got {}'.format(
            FIRST_ORDER, FIRST_ORDER, n_max))
    numerator = NUMERATOR if numerator is None else numerator

    rows = {}

    def get(m, j):
        if m < FIRST_ORDER or not 0 <= j <= m:
            return 0
        return rows[m][j]

    for n in range(FIRST_ORDER, n_max + 1):
        rows[n] = tuple(get(n - 1, i - 1) + get(n - 2, i - 1) + get(n - 3, i - 1) + numerator.get((n, i), 0)
                        for i in range(n + 1))

    logger.debug('Expanded generating function to u^%d', n_max)
    return BivariateSeries(n_max, rows)


def gf_coefficient(n, i):
    """
    :param n: power of u, at least 4
    :param i: power of v
    :return: coefficient of u^n v^i in f(u, v)
    """
    if n < FIRST_ORDER:
        raise ValueError('f(u, v) has no terms below u^{}, got n={}'.format(FIRST_ORDER, n))
    if i < 0 or i > n:
        return 0
    return expand(n).coefficient(n, i)


def compare_with_table(series, table):
    """
    :param series: a BivariateSeries
    :param table: a DominationTable covering rows up to series.n_max
    :return: list of (n, i, series value, table value) wherever the two disagree
    """
    table = table.extended(series.n_max)
    discrepancies = []
    for n in range(FIRST_ORDER, series.n_max + 1):
        for i in range(n + 1):
            expected = table[n, i]
            actual = series.coefficient(n, i)
            if actual != expected:
                discrepancies.append((n, i, actual, expected))
    if discrepancies:
        logger.warning('Generating function disagrees with the table at %d coefficients, first %s',
                       len(discrepancies), discrepancies[0])
    return discrepancies
