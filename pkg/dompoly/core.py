"""
Vertex sets of the cycle C_n and the domination predicate.

Vertices are labelled 1..n and the edges are (1,2), (2,3), ..., (n-1,n), (n,1). All
input and output uses these 1-based labels; bit v-1 of a mask stands for label v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

import networkx as nx


class CycleOrderError(ValueError):
    """Raised when an operation needs a simple cycle (n >= 3) but gets a smaller order."""


def _check_simple(n):
    if n < 3:
        raise CycleOrderError('C_{} is not a simple graph; n must be at least 3'.format(n))


@dataclass(frozen=True, order=True)
class VertexSet:
    """
    A canonical subset of the vertices of C_n: distinct labels in strictly increasing order.
    Ordering of VertexSets of the same cycle is lexicographic on the labels.
    """

    members: Tuple[int, ...]
    n: int

    def __post_init__(self):
        members = tuple(self.members)
        if self.n < 1:
            raise ValueError('cycle order must be positive, got {}'.format(self.n))
        for v in members:
            if not 1 <= v <= self.n:
                raise ValueError('label {} is outside 1..{}'.format(v, self.n))
        for a, b in zip(members, members[1:]):
            if a >= b:
                raise ValueError('labels must be strictly increasing: {}'.format(members))
        object.__setattr__(self, 'members', members)

    @classmethod
    def from_labels(cls, labels: Iterable[int], n: int) -> VertexSet:
        return cls(tuple(sorted(set(labels))), n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> VertexSet:
        return cls(tuple(v + 1 for v in range(n) if mask >> v & 1), n)

    def to_mask(self) -> int:
        mask = 0
        for v in self.members:
            mask |= 1 << (v - 1)
        return mask

    def with_ambient(self, n: int) -> VertexSet:
        """
        :param n: order of another cycle
        :return: the same labels read as a subset of C_n (fails if a label exceeds n)
        """
        return VertexSet(self.members, n)

    def add(self, label: int, n: int = None) -> VertexSet:
        """
        :param label: vertex to add
        :param n: ambient order of the result (defaults to this set's order)
        """
        return VertexSet.from_labels(self.members + (label,), self.n if n is None else n)

    def issubset(self, other: VertexSet) -> bool:
        return set(self.members) <= set(other.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, label):
        return label in self.members

    def __str__(self):
        return '{' + ','.join(str(v) for v in self.members) + '}'


def gamma_cycle(n):
    """
    :param n: order of the cycle
    :return: domination number of C_n, which is ceil(n/3)
    """
    if n < 1:
        raise ValueError('cycle order must be positive, got {}'.format(n))
    return -(-n // 3)


def _closed_cover(mask, n):
    full = (1 << n) - 1
    left = ((mask << 1) | (mask >> (n - 1))) & full
    right = ((mask >> 1) | (mask << (n - 1))) & full
    return mask | left | right


def is_dominating(n, s):
    """
    :param n: order of the cycle, at least 3
    :param s: VertexSet with ambient order n
    :return: True if every vertex outside s has a cyclic neighbour in s
    """
    _check_simple(n)
    if s.n != n:
        raise ValueError('vertex set {} belongs to C_{}, not C_{}'.format(s, s.n, n))
    return _closed_cover(s.to_mask(), n) == (1 << n) - 1


def rotate(s, k):
    """
    :param s: a VertexSet
    :param k: number of steps around the cycle (any integer)
    :return: image of s under v -> ((v - 1 + k) mod n) + 1, in canonical form
    """
    n = s.n
    return VertexSet.from_labels((((v - 1 + k) % n) + 1 for v in s.members), n)


def make_graph(n):
    """
    :param n: order of the cycle, at least 3
    :return: networkx cycle graph with nodes 1..n
    """
    _check_simple(n)
    return nx.cycle_graph(range(1, n + 1))


def cyclic_gaps(s):
    """
    :param s: a VertexSet
    :return: distances from each member to the next one around the cycle
    """
    members = s.members
    if not members:
        return ()
    gaps = [b - a for a, b in zip(members, members[1:])]
    gaps.append(s.n - members[-1] + members[0])
    return tuple(gaps)


def satisfies_gap_law(s):
    """
    A nonempty set dominates C_n (n >= 3) exactly when consecutive members are at most
    three apart around the cycle.
    """
    gaps = cyclic_gaps(s)
    return bool(gaps) and max(gaps) <= 3


@dataclass(frozen=True)
class Family:
    """
    Dominating sets of C_n with i vertices, sorted lexicographically.
    """

    n: int
    i: int
    members: Tuple[VertexSet, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s):
        return s in self.members

    def label_sets(self):
        """
        :return: set of label tuples, for comparing families of different cycles
        """
        return {s.members for s in self.members}

    def to_lists(self):
        return [list(s.members) for s in self.members]
