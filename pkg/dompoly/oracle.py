"""
Brute-force ground truth: every subset of the vertices of C_n is an n-bit mask, and a mask
dominates when it covers all n bits together with its two cyclic rotations by one.

Nothing here uses the recurrence or the family construction.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from dompoly.core import Family, VertexSet
from dompoly.recurrence import DominationPolynomial

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 24
DEFAULT_MAX_SUBSETS = 2 ** 32
DEFAULT_CHUNK = 2 ** 20

# count_row materialises every mask below 2^n with np.arange, chunk by chunk; 2^32 is the
# most it will walk through
MASK_BITS = 32

_POPCOUNT16 = np.array([bin(v).count('1') for v in range(1 << 16)], dtype=np.int64)
_LOW16 = np.uint64(0xFFFF)


class OracleBudgetExceeded(Exception):
    def __init__(self, n, i, estimate, budget, reason=None):
        if reason is None:
            reason = 'examining {} subsets exceeds the budget of {}'.format(estimate, budget)
        what = 'C_{}'.format(n) if i is None else 'C_{} with {} vertices'.format(n, i)
        super().__init__('oracle for {}: {}'.format(what, reason))
        self.n = n
        self.i = i
        self.estimate = estimate
        self.budget = budget


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = DEFAULT_MAX_N
    max_subsets: int = DEFAULT_MAX_SUBSETS

    def __post_init__(self):
        if not 3 <= self.max_n <= MASK_BITS:
            raise ValueError('max_n must be between 3 and {}, got {}'.format(MASK_BITS, self.max_n))
        if self.max_subsets < 1:
            raise ValueError('max_subsets must be positive, got {}'.format(self.max_subsets))

    @classmethod
    def from_env(cls, environ=None):
        """
        :param environ: mapping to read (defaults to os.environ)
        :return: default limits, with max_subsets taken from DOMPOLY_ORACLE_BUDGET if set
        """
        environ = os.environ if environ is None else environ
        value = environ.get('DOMPOLY_ORACLE_BUDGET')
        if value is None or not value.strip():
            return cls()
        try:
            budget = int(value)
        except ValueError:
            raise ValueError('DOMPOLY_ORACLE_BUDGET must be an integer, got {!r}'.format(value))
        return cls(max_subsets=budget)

    def check(self, n, i, estimate):
        if n > self.max_n:
            raise OracleBudgetExceeded(n, i, estimate, self.max_subsets,
                                       reason='n={} exceeds the oracle limit max_n={}'.format(n, self.max_n))
        if estimate > self.max_subsets:
            raise OracleBudgetExceeded(n, i, estimate, self.max_subsets)


def _check_arguments(n, i=None):
    if n < 3:
        raise ValueError('the oracle needs a simple cycle, got n={}'.format(n))
    if i is not None and not 0 <= i <= n:
        raise ValueError('cardinality {} is outside 0..{}'.format(i, n))


def dominating_masks(masks, n):
    """
    :param masks: uint64 array of n-bit masks
    :param n: order of the cycle
    :return: boolean array, True where the mask is a dominating set of C_n
    """
    full = np.uint64((1 << n) - 1)
    one = np.uint64(1)
    back = np.uint64(n - 1)
    left = ((masks << one) | (masks >> back)) & full
    right = ((masks >> one) | (masks << back)) & full
    return (masks | left | right) == full


def popcount(masks):
    result = _POPCOUNT16[(masks & _LOW16).astype(np.intp)]
    for shift in (16, 32, 48):
        result = result + _POPCOUNT16[((masks >> np.uint64(shift)) & _LOW16).astype(np.intp)]
    return result


def _count_range(n, start, stop):
    masks = np.arange(start, stop, dtype=np.uint64)
    sizes = popcount(masks[dominating_masks(masks, n)])
    return np.bincount(sizes, minlength=n + 1), stop - start


def count_row(n, limits=None, workers=1, chunk=DEFAULT_CHUNK):
    """
    :param n: order of the cycle, 3 <= n <= limits.max_n
    :param limits: OracleLimits (defaults to OracleLimits())
    :param workers: number of threads sharing the mask ranges
    :param chunk: number of masks per range
    :return: tuple of d(C_n, i) for i = 0..n, counted over all 2^n subsets
    """
    _check_arguments(n)
    limits = limits or OracleLimits()
    limits.check(n, None, 1 << n)
    return _count_row(n, workers, chunk)


@functools.lru_cache(maxsize=None)
def _count_row(n, workers, chunk):
    total = 1 << n
    ranges = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]
    logger.debug('Oracle: C_%d, %d subsets in %d ranges on %d workers', n, total, len(ranges), workers)

    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(lambda r: _count_range(n, *r), ranges))
    else:
        parts = [_count_range(n, *r) for r in ranges]

    histogram = [0] * (n + 1)
    examined = 0
    for counts, size in parts:
        examined += size
        for i, c in enumerate(counts[:n + 1]):
            histogram[i] += int(c)
    assert examined == total, 'examined {} subsets of C_{}, expected {}'.format(examined, n, total)
    return tuple(histogram)


def oracle_count(n, i, limits=None, workers=1):
    """
    :return: number of dominating sets of C_n with i vertices, counted without storing them
    """
    _check_arguments(n, i)
    return count_row(n, limits=limits, workers=workers)[i]


def oracle_polynomial(n, limits=None, workers=1):
    """
    :return: DominationPolynomial of C_n computed by exhaustion
    """
    return DominationPolynomial(n, count_row(n, limits=limits, workers=workers))


def enumerate_dominating(n, i, limits=None):
    """
    :param n: order of the cycle, 3 <= n <= limits.max_n
    :param i: cardinality, 0 <= i <= n
    :return: Family of all i-subsets of 1..n that dominate C_n, in lexicographic order
    """
    _check_arguments(n, i)
    limits = limits or OracleLimits()
    limits.check(n, i, math.comb(n, i))

    # combinations() yields label tuples in lexicographic order; filtering keeps it
    combos = list(itertools.combinations(range(1, n + 1), i))
    masks = np.fromiter((sum(1 << (v - 1) for v in c) for c in combos), dtype=np.uint64, count=len(combos))
    keep = dominating_masks(masks, n)
    members = tuple(VertexSet(c, n) for c, k in zip(combos, keep) if k)
    return Family(n, i, members)
