"""
Explicit construction of the family of dominating sets of C_n with i vertices from the
families of C_{n-1}, C_{n-2} and C_{n-3} with i-1 vertices.

Which of the three parent families are empty depends only on (n, i) and picks one of
five cases:

    (i)   only C_{n-3} nonempty          n = 3k, i = k       three progressions
    (ii)  only C_{n-1} nonempty          i = n               the full vertex set
    (iii) C_{n-1} empty, others not      n = 3k+2, i = k+1   shifted progressions + stream 3
    (iv)  C_{n-3} empty, others not      i = n-1             all (n-1)-subsets
    (v)   all three nonempty                                 streams 1, 2 and 3

where each parent X yields exactly one child:

    stream 1 (X from C_{n-1}):  X + {n}
    stream 2 (X from C_{n-2}):  X + {n}    if n-2 or n-3 is in X and X does not dominate C_{n-1}
                                X + {n-1}  otherwise
    stream 3 (X from C_{n-3}):  X + {n-2}  if 1 is in X
                                X + {n-1}  if 2 is in X but 1 is not
                                X + {n}    otherwise

Every candidate is checked with the domination predicate, the streams must not overlap,
and the result must have exactly d(C_n, i) members, so any disagreement between these
rules and the predicate raises ConstructionError instead of returning a wrong family.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from dompoly.core import Family, VertexSet, gamma_cycle, is_dominating, make_graph, rotate
from dompoly.recurrence import count

logger = logging.getLogger(__name__)

DEFAULT_SIZE_GUARD = 10 ** 6


class FamilySizeError(Exception):
    def __init__(self, n, i, size, guard):
        super().__init__('family of C_{} with {} vertices has {} members, above the guard of {}'
                         ' (override with force)'.format(n, i, size, guard))
        self.n = n
        self.i = i
        self.size = size
        self.guard = guard


class ConstructionError(Exception):
    def __init__(self, message, n, i, candidates=(), report=None):
        super().__init__('C_{}^{}: {}'.format(n, i, message))
        self.n = n
        self.i = i
        self.candidates = tuple(candidates)
        self.report = report


@dataclass(frozen=True)
class FamilyReport:
    n: int
    i: int
    constructed_count: int
    expected_count: int
    all_dominating: bool
    all_distinct: bool
    rotation_closed: bool
    case: Optional[str] = None
    error: Optional[str] = None

    @property
    def passed(self):
        return (self.error is None
                and self.constructed_count == self.expected_count
                and self.all_dominating and self.all_distinct and self.rotation_closed)

    def to_dict(self):
        return {
            'n': self.n,
            'i': self.i,
            'case': self.case,
            'constructed_count': str(self.constructed_count),
            'expected_count': str(self.expected_count),
            'all_dominating': self.all_dominating,
            'all_distinct': self.all_distinct,
            'rotation_closed': self.rotation_closed,
            'error': self.error,
            'pass': self.passed,
        }


def _in_window(n, i):
    return n >= 1 and gamma_cycle(n) <= i <= n


def _family(n, i, labels):
    return Family(n, i, tuple(sorted(VertexSet.from_labels(s, n) for s in labels)))


def base_family(n, i):
    """
    :param n: 1, 2 or 3
    :param i: cardinality
    :return: the family of C_n with i vertices (for n = 1, 2 the formal families whose sizes
        match the base rows of the table)
    """
    if not 1 <= n <= 3:
        raise ValueError('base families exist for n = 1, 2, 3 only, got {}'.format(n))
    if not 0 <= i <= n:
        return Family(n, i, ())
    # every nonempty subset of at most three vertices dominates C_1, C_2 and C_3
    return _family(n, i, itertools.combinations(range(1, n + 1), i) if i > 0 else ())


def theorem_case(n, i):
    """
    :param n: order of the cycle, at least 4
    :param i: cardinality inside the window of C_n
    :return: 'i'..'v', the construction case selected by which of the families of
        C_{n-1}, C_{n-2}, C_{n-3} with i-1 vertices are nonempty
    """
    pattern = tuple(_in_window(n - k, i - 1) for k in (1, 2, 3))
    cases = {
        (False, False, True): 'i',
        (True, False, False): 'ii',
        (False, True, True): 'iii',
        (True, True, False): 'iv',
        (True, True, True): 'v',
    }
    if pattern not in cases:
        raise ConstructionError('parent emptiness pattern {} is impossible'.format(pattern), n, i)
    return cases[pattern]


def _progressions(n):
    # {1,4,...}, {2,5,...}, {3,6,...} inside 1..n
    return [list(range(r, n + 1, 3)) for r in (1, 2, 3)]


def _first_stream(n, parents):
    return [x.add(n, n) for x in parents]


def _second_stream(n, parents, grandparents):
    # grandparents: label sets of the family of C_{n-1} with the same cardinality
    result = []
    for x in parents:
        if (n - 2 in x or n - 3 in x) and x.members not in grandparents:
            result.append(x.add(n, n))
        else:
            result.append(x.add(n - 1, n))
    return result


def _third_stream(n, parents):
    result = []
    for x in parents:
        if 1 in x:
            result.append(x.add(n - 2, n))
        elif 2 in x:
            result.append(x.add(n - 1, n))
        else:
            result.append(x.add(n, n))
    return result


def _validated(n, i, case, streams):
    seen = set()
    candidates = [s for stream in streams for s in stream]
    for index, stream in enumerate(streams):
        for s in stream:
            if len(s) != i:
                raise ConstructionError('stream {} produced {} with {} vertices'.format(
                    index + 1, s, len(s)), n, i, candidates)
            if not is_dominating(n, s):
                raise ConstructionError('stream {} produced {}, which does not dominate'.format(
                    index + 1, s), n, i, candidates)
            if s in seen:
                raise ConstructionError('{} produced twice (streams overlap)'.format(s),
                                        n, i, candidates)
            seen.add(s)

    expected = count(n, i)
    if len(seen) != expected:
        raise ConstructionError('case ({}) produced {} sets, expected {}'.format(
            case, len(seen), expected), n, i, candidates)
    return Family(n, i, tuple(sorted(seen)))


@functools.lru_cache(maxsize=None)
def _construct(n, i):
    if not _in_window(n, i):
        return Family(n, i, ())
    if n <= 3:
        return base_family(n, i)

    case = theorem_case(n, i)
    logger.debug('Constructing C_%d^%d by case (%s)', n, i, case)

    if case == 'i':
        streams = [[VertexSet.from_labels(p, n) for p in _progressions(n)]]
    elif case == 'ii':
        streams = [[VertexSet(tuple(range(1, n + 1)), n)]]
    elif case == 'iii':
        k = (n - 2) // 3
        first, second, third = _progressions(3 * k)
        shifted = [first + [n - 1], second + [n], third + [n]]
        streams = [[VertexSet.from_labels(p, n) for p in shifted],
                   _third_stream(n, _construct(n - 3, i - 1))]
    elif case == 'iv':
        streams = [[VertexSet.from_labels(s, n) for s in itertools.combinations(range(1, n + 1), n - 1)]]
    else:
        grandparents = _construct(n - 1, i - 1).label_sets()
        streams = [_first_stream(n, _construct(n - 1, i - 1)),
                   _second_stream(n, _construct(n - 2, i - 1), grandparents),
                   _third_stream(n, _construct(n - 3, i - 1))]

    return _validated(n, i, case, streams)


def build_family(n, i, size_guard=DEFAULT_SIZE_GUARD, force=False):
    """
    :param n: order of the cycle, at least 1
    :param i: cardinality
    :param size_guard: refuse to materialise families with more members than this
    :param force: build regardless of size_guard
    :return: Family of dominating sets of C_n with i vertices (empty outside the window)
    """
    if n < 1:
        raise ValueError('cycle order must be positive, got {}'.format(n))
    if not _in_window(n, i):
        return Family(n, i, ())
    size = count(n, i)
    if not force and size > size_guard:
        raise FamilySizeError(n, i, size, size_guard)
    return _construct(n, i)


def clear_cache():
    _construct.cache_clear()


def _rotation_closed(n, members):
    member_set = set(members)
    return all(rotate(s, 1) in member_set for s in members)


def verify_family(n, i, size_guard=DEFAULT_SIZE_GUARD, force=False):
    """
    Builds the family and checks it against the count from the recurrence, an independent
    domination check on the networkx cycle graph, distinctness and closure under rotation.

    :return: FamilyReport (construction failures and size-guard refusals are reported, not raised)
    """
    if n < 3:
        raise ValueError('verification needs a simple cycle, got n={}'.format(n))

    expected = count(n, i) if i >= 0 else 0
    case = theorem_case(n, i) if n >= 4 and _in_window(n, i) else None
    error = None
    try:
        members = build_family(n, i, size_guard=size_guard, force=force).members
    except ConstructionError as e:
        members = e.candidates
        error = str(e)
    except FamilySizeError as e:
        members = ()
        error = str(e)

    graph = make_graph(n)
    report = FamilyReport(
        n=n,
        i=i,
        constructed_count=len(set(members)),
        expected_count=expected,
        all_dominating=all(len(s) == i and nx.is_dominating_set(graph, s.members) for s in members),
        all_distinct=len(set(members)) == len(members),
        rotation_closed=_rotation_closed(n, members),
        case=case,
        error=error,
    )
    if not report.passed:
        logger.warning('Family C_%d^%d failed verification: %s', n, i, report)
    return report
