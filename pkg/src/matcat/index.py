"""
The countable index space (the naturals) with the Cantor pairing bijection,
and decidable descriptors for the index sets the construction produces.

Descriptors are closed under the two operations objects need, products and
diagonals transported through :func:`pair`, so membership is decided by
structural recursion.  ``Union`` is an extra descriptor used by coproducts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import isqrt
from typing import Iterator, Union as _U

from matcat.errors import MembershipError

#: the base point used for the unit object
STAR = 0


def pair(x: int, y: int) -> int:
    """Cantor pairing ``(x + y)(x + y + 1)/2 + y``."""
    if x < 0 or y < 0:
        raise ValueError("pair is defined on naturals")
    s = x + y
    return s * (s + 1) // 2 + y


def unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("unpair is defined on naturals")
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


class IndexSet:
    """Decidable, enumerable subset of the naturals."""

    is_finite: bool = True

    def member(self, i: int) -> bool:
        raise NotImplementedError

    def __contains__(self, i) -> bool:
        return isinstance(i, int) and i >= 0 and self.member(i)

    def members(self) -> tuple[int, ...]:
        """All members in increasing order; finite sets only."""
        raise ValueError("%r is infinite" % (self,))

    def __iter__(self) -> Iterator[int]:
        if self.is_finite:
            return iter(self.members())
        return (i for i in itertools.count() if self.member(i))

    def size(self) -> int:
        return len(self.members())

    def enumerate_upto(self, n: int) -> list[int]:
        return list(itertools.islice(iter(self), n))


@dataclass(frozen=True)
class Empty(IndexSet):
    def member(self, i):
        return False

    def members(self):
        return ()


@dataclass(frozen=True)
class Singleton(IndexSet):
    value: int

    def member(self, i):
        return i == self.value

    def members(self):
        return (self.value,)


@dataclass(frozen=True)
class FiniteSet(IndexSet):
    items: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(sorted(set(self.items))))

    @cached_property
    def _set(self):
        return frozenset(self.items)

    def member(self, i):
        return i in self._set

    def members(self):
        return self.items


@dataclass(frozen=True)
class AllNaturals(IndexSet):
    is_finite = False

    def member(self, i):
        return i >= 0


@dataclass(frozen=True)
class PairImage(IndexSet):
    """``pair(A x B)``."""

    left: IndexSet
    right: IndexSet

    @property
    def is_finite(self):
        a, b = self.left, self.right
        if a.is_finite and b.is_finite:
            return True
        # a product with an empty factor is empty
        return (a.is_finite and not a.members()) or (b.is_finite and not b.members())

    def member(self, i):
        x, y = unpair(i)
        return self.left.member(x) and self.right.member(y)

    def members(self):
        if not self.is_finite:
            return super().members()
        a, b = self.left, self.right
        if (a.is_finite and not a.members()) or (b.is_finite and not b.members()):
            return ()
        return tuple(sorted(pair(x, y) for x in a.members() for y in b.members()))


@dataclass(frozen=True)
class DiagImage(IndexSet):
    """``pair({(x, x) : x in A})``."""

    base: IndexSet

    @property
    def is_finite(self):
        return self.base.is_finite

    def member(self, i):
        x, y = unpair(i)
        return x == y and self.base.member(x)

    def members(self):
        if not self.is_finite:
            return super().members()
        return tuple(sorted(pair(x, x) for x in self.base.members()))

    def __iter__(self):
        if self.is_finite:
            return iter(self.members())
        # pair(x, x) is increasing in x
        return (pair(x, x) for x in self.base)


@dataclass(frozen=True)
class Union(IndexSet):
    parts: tuple[IndexSet, ...]

    @property
    def is_finite(self):
        return all(p.is_finite for p in self.parts)

    def member(self, i):
        return any(p.member(i) for p in self.parts)

    def members(self):
        if not self.is_finite:
            return super().members()
        return tuple(sorted(set().union(*(p.members() for p in self.parts))))


def finite_set(items) -> IndexSet:
    items = sorted(set(items))
    if not items:
        return Empty()
    if len(items) == 1:
        return Singleton(items[0])
    return FiniteSet(tuple(items))


def member(S: IndexSet, i: int) -> bool:
    return i in S


def enumerate_upto(S: IndexSet, n: int) -> list[int]:
    return S.enumerate_upto(n)


def disjoint(A: IndexSet, B: IndexSet, scan: int = 200) -> bool:
    """Exact for finite sets; for infinite ones, checks the first ``scan`` members of each."""
    if A.is_finite:
        return not any(B.member(i) for i in A.members())
    if B.is_finite:
        return not any(A.member(i) for i in B.members())
    return (not any(B.member(i) for i in A.enumerate_upto(scan))
            and not any(A.member(i) for i in B.enumerate_upto(scan)))


Shape = _U[IndexSet, tuple]


def shape_index_set(shape: Shape) -> IndexSet:
    """Index set realized by a nested 2-tuple shape whose leaves are index sets."""
    if isinstance(shape, tuple):
        left, right = shape
        return PairImage(shape_index_set(left), shape_index_set(right))
    return shape


def decode_word_index(z: int, shape: Shape) -> tuple[int, ...]:
    """Unpair ``z`` following the tree ``shape``; components in frontier order."""
    if not shape_index_set(shape).member(z):
        raise MembershipError("%d is not a member of %r" % (z, shape))
    return _decode(z, shape)


def _decode(z, shape):
    if isinstance(shape, tuple):
        x, y = unpair(z)
        return _decode(x, shape[0]) + _decode(y, shape[1])
    return (z,)
