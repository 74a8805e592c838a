from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from matcat.errors import MembershipError
from matcat.index import (
    AllNaturals, DiagImage, Empty, FiniteSet, PairImage, Singleton, Union, decode_word_index,
    disjoint, enumerate_upto, finite_set, member, pair, unpair)
from oracle import cantor_pair_by_walk


def test_pair_values():
    assert pair(0, 0) == 0
    assert pair(1, 1) == 4
    assert unpair(8) == (1, 2)


def test_pair_agrees_with_diagonal_walk():
    for x in range(12):
        for y in range(12):
            assert pair(x, y) == cantor_pair_by_walk(x, y)


def test_pair_is_bijective_on_grid():
    seen = {}
    for x in range(201):
        for y in range(201):
            z = pair(x, y)
            assert unpair(z) == (x, y)
            assert z not in seen
            seen[z] = (x, y)


@given(st.integers(0, 10 ** 30))
def test_pair_after_unpair(z):
    assert pair(*unpair(z)) == z


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        pair(-1, 0)
    with pytest.raises(ValueError):
        unpair(-3)


def test_membership_by_descriptor():
    assert member(DiagImage(AllNaturals()), pair(3, 3))
    assert not member(DiagImage(AllNaturals()), pair(3, 4))
    assert not member(PairImage(Singleton(1), Singleton(2)), pair(1, 3))
    assert member(PairImage(Singleton(1), Singleton(2)), pair(1, 2))
    assert not member(Empty(), 0)
    assert not member(AllNaturals(), -1)
    assert not member(AllNaturals(), "3")


def test_enumerate_upto():
    assert enumerate_upto(PairImage(FiniteSet((0, 1)), Singleton(0)), 5) == [pair(0, 0), pair(1, 0)]
    assert enumerate_upto(AllNaturals(), 3) == [0, 1, 2]
    assert enumerate_upto(DiagImage(AllNaturals()), 4) == [0, 4, 12, 24]
    assert enumerate_upto(PairImage(AllNaturals(), Singleton(0)), 3) == [0, 1, 3]


def test_infinite_enumeration_is_increasing():
    for s in (PairImage(AllNaturals(), FiniteSet((1, 4))), DiagImage(AllNaturals()),
              Union((Singleton(7), DiagImage(AllNaturals())))):
        got = enumerate_upto(s, 40)
        assert got == sorted(set(got))
        assert all(member(s, z) for z in got)


def test_finite_set_normalizes():
    assert finite_set([]) == Empty()
    assert finite_set([3, 3]) == Singleton(3)
    assert FiniteSet((5, 1, 5)).members() == (1, 5)


def test_product_with_empty_factor_is_finite():
    s = PairImage(AllNaturals(), Empty())
    assert s.is_finite
    assert s.members() == ()


def test_disjoint_products():
    a, b, c = FiniteSet((0, 2)), FiniteSet((1, 3)), FiniteSet((0, 5))
    assert disjoint(PairImage(a, c), PairImage(b, c))
    assert not disjoint(PairImage(a, c), PairImage(a, Singleton(5)))
    assert disjoint(PairImage(a, AllNaturals()), PairImage(b, AllNaturals()))


@given(st.sets(st.integers(0, 30), max_size=6))
def test_diagonal_inside_square(items):
    A = finite_set(items)
    for z in DiagImage(A).members():
        assert member(PairImage(A, A), z)
        x, y = unpair(z)
        assert x == y


def test_decode_word_index():
    f, g, h = AllNaturals(), AllNaturals(), AllNaturals()
    assert decode_word_index(pair(2, 7), (f, g)) == (2, 7)
    assert decode_word_index(pair(pair(1, 2), 3), ((f, g), h)) == (1, 2, 3)
    assert decode_word_index(pair(1, pair(2, 3)), (f, (g, h))) == (1, 2, 3)


def test_decode_rejects_non_members():
    with pytest.raises(MembershipError):
        decode_word_index(pair(1, 2), (Singleton(1), Singleton(3)))
