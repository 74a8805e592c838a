from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matcat.base import (
    UNIT, GradedMorphism, GradedObject, GradedVect, PlainVect, add_c, coev_c, compose_c,
    dual_mor, eval_c, identity_c, make_base, random_morphism, scale_c, tensor_c, zero_c)
from matcat.errors import GradingError, ShapeError, UsageError
from oracle import as_entries, braid_closed_form

G = GradedObject.from_grades


def one_by_one(a, v):
    return GradedMorphism(a, a, {0: {0: v}})


# objects -------------------------------------------------------------------

def test_tensor_convolves_degrees():
    assert G({1: 1}).tensor(G({-1: 1})).grades == {0: 1}
    assert G({0: 2}).tensor(G({0: 2})).grades == {0: 4}


def test_unit_is_strict():
    a = GradedObject((1, -2, 0))
    assert a.tensor(UNIT) == a
    assert UNIT.tensor(a) == a


def test_from_grades_drops_empty_degrees():
    a = G({2: 0, 1: 2})
    assert a.grades == {1: 2}
    assert a.dim_at(2) == 0


def test_dual_reflects():
    assert G({1: 1}).dual() == G({-1: 1})
    assert GradedObject((2, -1)).dual().degrees == (-2, 1)


degrees = st.lists(st.integers(-2, 2), max_size=3).map(tuple)


@given(degrees, degrees, degrees)
def test_tensor_associative_on_objects(a, b, c):
    a, b, c = GradedObject(a), GradedObject(b), GradedObject(c)
    assert a.tensor(b).tensor(c) == a.tensor(b.tensor(c))


# morphisms -----------------------------------------------------------------

def test_scalar_composition_and_kronecker():
    a = G({0: 1})
    assert compose_c(one_by_one(a, 3), one_by_one(a, 2)) == one_by_one(a, 6)
    assert tensor_c(one_by_one(a, 2), one_by_one(a, 3)) == one_by_one(a, 6)


def test_identity_and_zero_are_neutral_and_absorbing():
    rng = random.Random(1)
    a, b = GradedObject((0, 1)), GradedObject((1, 0, 1))
    f = random_morphism(rng, a, b)
    assert compose_c(identity_c(b), f) == f
    assert compose_c(zero_c(b, a), f) == zero_c(a, a)
    assert add_c(f, zero_c(a, b)) == f
    assert add_c(f, scale_c(Fraction(-1), f)).is_zero
    assert tensor_c(f, zero_c(a, a)).is_zero


def test_composition_bilinear():
    rng = random.Random(2)
    a, b, c = GradedObject((0, 1)), GradedObject((1, 1)), GradedObject((0, 1, 1))
    f, g, h = random_morphism(rng, a, b), random_morphism(rng, a, b), random_morphism(rng, b, c)
    assert compose_c(h, add_c(f, g)) == add_c(compose_c(h, f), compose_c(h, g))


def test_shape_errors():
    a, b = GradedObject((0,)), GradedObject((0, 0))
    with pytest.raises(ShapeError):
        compose_c(identity_c(a), identity_c(b))
    with pytest.raises(ShapeError):
        add_c(identity_c(a), identity_c(b))


def test_degree_violating_entry_is_rejected():
    with pytest.raises(GradingError):
        GradedMorphism(GradedObject((0,)), GradedObject((1,)), {0: {0: 1}})


def test_blocks_view_is_per_degree():
    a = GradedObject((0, 1, 0))
    f = GradedMorphism.from_blocks(a, a, {0: [[1, 2], [3, 4]], 1: [[5]]})
    assert f.blocks == {0: ((1, 2), (3, 4)), 1: ((5,),)}
    assert f.entry(2, 0) == 3


@given(st.lists(st.integers(-2, 2), min_size=1, max_size=2).map(tuple),
       st.lists(st.integers(-2, 2), min_size=1, max_size=2).map(tuple),
       st.integers(0, 10 ** 6))
def test_tensor_functorial(a, b, seed):
    rng = random.Random(seed)
    a, b = GradedObject(a), GradedObject(b)
    f, f2 = random_morphism(rng, a, a), random_morphism(rng, a, a)
    g, g2 = random_morphism(rng, b, b), random_morphism(rng, b, b)
    assert compose_c(tensor_c(f2, g2), tensor_c(f, g)) == tensor_c(compose_c(f2, f), compose_c(g2, g))


# braiding and twist -------------------------------------------------------------

def test_braid_of_degree_one_lines():
    assert GradedVect(2).braid(G({1: 1}), G({1: 1})) == one_by_one(G({1: 1}).tensor(G({1: 1})), 2)


def test_braid_matches_closed_form():
    base = GradedVect(3)
    a, b = GradedObject((1, -2)), GradedObject((0, 2, -1))
    assert as_entries(base.braid(a, b)) == braid_closed_form(3, a.degrees, b.degrees)


def test_twist_values():
    base = GradedVect(2)
    assert base.twist(G({1: 1})) == one_by_one(G({1: 1}), 2)
    assert base.twist(G({2: 1})) == one_by_one(G({2: 1}), 16)
    assert base.twist(UNIT) == identity_c(UNIT)


@given(st.lists(st.integers(-2, 2), max_size=2).map(tuple),
       st.lists(st.integers(-2, 2), max_size=2).map(tuple),
       st.lists(st.integers(-2, 2), max_size=2).map(tuple),
       st.sampled_from([1, 2, 3, -1, Fraction(1, 2)]))
def test_hexagons_and_balance(a, b, c, q):
    base = GradedVect(q)
    a, b, c = GradedObject(a), GradedObject(b), GradedObject(c)
    br = base.braid
    assert br(a, b.tensor(c)) == compose_c(tensor_c(identity_c(b), br(a, c)), tensor_c(br(a, b), identity_c(c)))
    assert br(a.tensor(b), c) == compose_c(tensor_c(br(a, c), identity_c(b)), tensor_c(identity_c(a), br(b, c)))
    bal = compose_c(br(b, a), compose_c(br(a, b), tensor_c(base.twist(a), base.twist(b))))
    assert base.twist(a.tensor(b)) == bal
    assert base.twist(a.dual()) == dual_mor(base.twist(a))
    assert compose_c(br(a, b, inverse=True), br(a, b)) == identity_c(a.tensor(b))


def test_braid_with_unit_is_identity():
    a = GradedObject((1, 2))
    assert GradedVect(2).braid(a, UNIT) == identity_c(a)


@pytest.mark.parametrize("a", [GradedObject(()), UNIT, G({0: 2}), GradedObject((2, -1))])
def test_zigzags(a):
    ia, iad = identity_c(a), identity_c(a.dual())
    assert compose_c(tensor_c(eval_c(a), iad), tensor_c(iad, coev_c(a))) == iad
    assert compose_c(tensor_c(ia, eval_c(a)), tensor_c(coev_c(a), ia)) == ia


def test_eval_of_line_is_unit_pairing():
    e = eval_c(G({1: 1}))
    assert e.src == G({-1: 1}).tensor(G({1: 1}))
    assert e.blocks == {0: ((1,),)}


def test_zigzag_on_two_dim_degree_zero_is_identity_matrix():
    a = G({0: 2})
    iad = identity_c(a.dual())
    z = compose_c(tensor_c(eval_c(a), iad), tensor_c(iad, coev_c(a)))
    assert z.blocks == {0: ((1, 0), (0, 1))}


def test_symmetric_control(plain):
    a, b = GradedObject((0, 0)), GradedObject((0,))
    assert compose_c(plain.braid(b, a), plain.braid(a, b)) == identity_c(a.tensor(b))
    assert plain.is_symmetric
    with pytest.raises(GradingError):
        plain.braid(GradedObject((1,)), b)


def test_nontrivial_instance_is_not_symmetric():
    base = GradedVect(2)
    a = G({1: 1})
    assert not base.is_symmetric
    assert compose_c(base.braid(a, a), base.braid(a, a)) != identity_c(a.tensor(a))


def test_q_zero_is_a_usage_error():
    with pytest.raises(UsageError):
        GradedVect(0)
    with pytest.raises(UsageError):
        make_base("complex", 2)


def test_probe_objects_count():
    assert len(GradedVect(2).objects(2, 2)) == 31
    assert len(PlainVect().objects(2, 2)) == 3
