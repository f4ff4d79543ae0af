"""
Counts of dominating sets of cycles by the three-term recurrence

    d(C_n, i) = d(C_{n-1}, i-1) + d(C_{n-2}, i-1) + d(C_{n-3}, i-1),   n >= 4,

started from the rows of C_1, C_2 and C_3. Counts are Python ints, so they never
overflow; S_n grows roughly like 1.839^n and passes 2^64 near n = 95.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from dompoly.core import gamma_cycle
from dompoly.data import BASE_ROWS

logger = logging.getLogger(__name__)

# d(C_n, i) and S_n are plain ints
Count = int

CACHE_HEADER = 'DOMPOLY-TABLE v1 n_max={}'


class CacheFormatError(ValueError):
    """Raised when a table cache file is malformed or inconsistent."""


def window(n):
    """
    :param n: order of the cycle
    :return: (low, high) such that d(C_n, i) > 0 exactly when low <= i <= high
    """
    return gamma_cycle(n), n


def _next_row(rows, n):
    def get(m, j):
        row = rows[m]
        return row[j] if 0 <= j < len(row) else 0

    return (0,) + tuple(get(n - 1, i - 1) + get(n - 2, i - 1) + get(n - 3, i - 1)
                        for i in range(1, n + 1))


class DominationTable:
    """
    Rows d(C_n, i) for n = 1..n_max, each a tuple indexed by i = 0..n with explicit zeros.
    A table is never modified; extended() returns a new table that shares the old rows.
    """

    def __init__(self, rows):
        """
        :param rows: list whose entry n (for n >= 1) is the tuple of counts of C_n; entry 0
            is unused
        """
        self._rows = rows

    @property
    def n_max(self):
        return len(self._rows) - 1

    @property
    def rows(self):
        """
        :return: dict mapping n to its row
        """
        return {n: self._rows[n] for n in range(1, len(self._rows))}

    def row(self, n):
        if not 1 <= n <= self.n_max:
            raise IndexError('row {} is outside 1..{}'.format(n, self.n_max))
        return self._rows[n]

    def __getitem__(self, key):
        n, i = key
        row = self.row(n)
        if i < 0:
            raise IndexError('cardinality must be nonnegative, got {}'.format(i))
        return row[i] if i <= n else 0

    def total(self, n):
        return sum(self.row(n))

    def extended(self, n_max):
        """
        :param n_max: order of the largest cycle required
        :return: a table with rows 1..n_max; only rows beyond the current n_max are computed
        """
        if n_max <= self.n_max:
            return self

        logger.debug('Extending domination table from n=%d to n=%d', self.n_max, n_max)
        rows = list(self._rows)
        for n in range(len(rows), n_max + 1):
            if n in BASE_ROWS:
                rows.append(BASE_ROWS[n])
            else:
                rows.append(_next_row(rows, n))
        return DominationTable(rows)

    def check(self):
        """
        Asserts the window law, the unit diagonal and the base rows.
        """
        for n in range(1, self.n_max + 1):
            row = self._rows[n]
            assert len(row) == n + 1, 'row {} has length {}'.format(n, len(row))
            low, high = window(n)
            for i, value in enumerate(row):
                assert value >= 0, 'negative count at ({}, {})'.format(n, i)
                assert (value == 0) == (i < low or i > high), \
                    'window law fails at ({}, {}): {}'.format(n, i, value)
            assert row[n] == 1, 'd(C_{0}, {0}) = {1}'.format(n, row[n])
            if n in BASE_ROWS:
                assert row == BASE_ROWS[n], 'base row {} is {}'.format(n, row)


def build_table(n_max):
    """
    :param n_max: order of the largest cycle, at least 1
    :return: DominationTable with rows 1..n_max
    """
    if n_max < 1:
        raise ValueError('n_max must be at least 1, got {}'.format(n_max))
    return DominationTable([()]).extended(n_max)


_shared_table = DominationTable([()]).extended(3)
_shared_lock = threading.Lock()


def get_table(n_max):
    """
    :param n_max: order of the largest cycle required
    :return: a process-wide table covering at least rows 1..n_max
    """
    global _shared_table
    table = _shared_table
    if table.n_max >= n_max:
        return table
    with _shared_lock:
        if _shared_table.n_max < n_max:
            _shared_table = _shared_table.extended(n_max)
        return _shared_table


def count(n, i):
    """
    :param n: order of the cycle, at least 1
    :param i: cardinality, at least 0
    :return: d(C_n, i), which is 0 outside the window ceil(n/3) <= i <= n
    """
    if n < 1:
        raise ValueError('cycle order must be positive, got {}'.format(n))
    if i < 0:
        raise ValueError('cardinality must be nonnegative, got {}'.format(i))
    if i > n:
        return 0
    return get_table(n)[n, i]


def total_count(n):
    """
    :param n: order of the cycle, at least 1
    :return: S_n, the number of dominating sets of C_n of any size
    """
    if n < 1:
        raise ValueError('cycle order must be positive, got {}'.format(n))
    return get_table(n).total(n)


@dataclass(frozen=True)
class DominationPolynomial:
    """
    D(C_n, x) as its coefficient vector, coeffs[i] = d(C_n, i) for i = 0..n.
    """

    n: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.n + 1:
            raise ValueError('D(C_{}, x) needs {} coefficients, got {}'.format(
                self.n, self.n + 1, len(coeffs)))
        if any(c < 0 for c in coeffs):
            raise ValueError('coefficients must be nonnegative: {}'.format(coeffs))
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def degree(self):
        nonzero = [i for i, c in enumerate(self.coeffs) if c]
        return nonzero[-1] if nonzero else None

    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def terms(self):
        """
        :return: (power, coefficient) pairs with nonzero coefficient, highest power first
        """
        return [(i, c) for i, c in reversed(list(enumerate(self.coeffs))) if c]

    def __str__(self):
        parts = []
        for i, c in self.terms():
            coefficient = '' if c == 1 and i > 0 else str(c)
            if i == 0:
                parts.append(coefficient)
            elif i == 1:
                parts.append('{}x'.format(coefficient))
            else:
                parts.append('{}x^{}'.format(coefficient, i))
        return ' + '.join(parts) if parts else '0'

    def to_latex(self):
        parts = []
        for i, c in self.terms():
            coefficient = '' if c == 1 and i > 0 else str(c)
            if i == 0:
                parts.append(coefficient)
            elif i == 1:
                parts.append('{}x'.format(coefficient))
            else:
                parts.append('{}x^{{{}}}'.format(coefficient, i))
        return '+'.join(parts) if parts else '0'


def polynomial(n):
    """
    :param n: order of the cycle, at least 1
    :return: DominationPolynomial of C_n
    """
    if n < 1:
        raise ValueError('cycle order must be positive, got {}'.format(n))
    return DominationPolynomial(n, get_table(n).row(n))


def evaluate(n, x):
    """
    :return: D(C_n, x) for an integer or rational x
    """
    if isinstance(x, float):
        x = Fraction(x)
    return polynomial(n)(x)


def save_table(table, path):
    """
    Writes the table in the versioned cache format: a header line, then one line of
    space-separated decimal counts (i = 0..n) per n.
    """
    lines = [CACHE_HEADER.format(table.n_max)]
    for n in range(1, table.n_max + 1):
        lines.append(' '.join(str(c) for c in table.row(n)))
    with open(path, 'w', newline='\n') as f:
        f.write('\n'.join(lines) + '\n')
    logger.info('Wrote table cache %s (n_max=%d)', path, table.n_max)


def load_table(path):
    """
    :param path: a file written by save_table
    :return: the DominationTable it holds, after checking its rows against the recurrence
    """
    with open(path) as f:
        lines = f.read().splitlines()

    if not lines:
        raise CacheFormatError('{} is empty'.format(path))

    header = lines[0].strip()
    prefix = CACHE_HEADER.format('')
    if not header.startswith(prefix):
        raise CacheFormatError('{}: unrecognised header {!r}'.format(path, header))
    try:
        n_max = int(header[len(prefix):])
    except ValueError:
        raise CacheFormatError('{}: bad n_max in header {!r}'.format(path, header))

    body = lines[1:]
    if len(body) != n_max:
        raise CacheFormatError('{}: header says {} rows, found {}'.format(path, n_max, len(body)))

    rows = [()]
    for n, line in enumerate(body, start=1):
        try:
            row = tuple(int(x) for x in line.split())
        except ValueError:
            raise CacheFormatError('{}: row {} is not a list of integers'.format(path, n))
        if len(row) != n + 1:
            raise CacheFormatError('{}: row {} has {} entries, expected {}'.format(
                path, n, len(row), n + 1))
        if n in BASE_ROWS:
            expected = BASE_ROWS[n]
        else:
            expected = _next_row(rows, n)
        if row != expected:
            raise CacheFormatError('{}: row {} does not satisfy the recurrence'.format(path, n))
        rows.append(row)

    logger.info('Loaded table cache %s (n_max=%d)', path, n_max)
    return DominationTable(rows)
