from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from matcat.category import (
    UNIT_OBJECT, Family, TensorObject, assoc, equal_on_rows, mat_compose, mat_id, mat_scale, units)
from matcat.base import GradedVect, GradedObject
from matcat.coherence import (
    UNIT_LEAF, Leaf, Node, TypedMor, coherence_iso, doteq, doteq_difference, frontier, realize,
    typed, typed_id, word, word_shape)
from matcat.errors import CoherenceError, ShapeError
from matcat.index import decode_word_index, pair
from matcat.suites import random_family, random_mat, random_word


def fam(seed, size=2):
    return random_family(random.Random(seed), GradedVect(2), 2, 2, size)


def rows(obj, n=25):
    return obj.index_set.enumerate_upto(n)


def test_realize_and_frontier():
    f, g = fam(1), fam(2)
    w = word(f, None, (g, f))
    assert realize(w) == TensorObject(TensorObject(f, UNIT_OBJECT), TensorObject(g, f))
    assert frontier(w) == (f, g, f)
    assert realize(UNIT_LEAF) == UNIT_OBJECT
    assert word() == UNIT_LEAF


def test_word_shape_decodes_components():
    f = Family.of({3: GradedObject((0,))})
    g = Family.of({5: GradedObject((1,))})
    w = word(f, (g, f))
    z = pair(3, pair(5, 3))
    assert decode_word_index(z, word_shape(w)) == (3, 5, 3)


def test_iso_of_word_with_itself_is_identity():
    f, g, h = fam(3), fam(4), fam(5)
    w = word(f, None, (g, h))
    assert equal_on_rows(coherence_iso(w, w).mor, mat_id(realize(w)), rows(realize(w)))


def test_iso_removing_right_unit_is_right_unitor():
    f = fam(6)
    iso = coherence_iso(Node(Leaf(f), UNIT_LEAF), Leaf(f))
    assert equal_on_rows(iso.mor, units(f, "right"))


def test_iso_reassociating_is_associator():
    f, g, h = fam(7), fam(8), fam(9)
    iso = coherence_iso(word(f, g, h), word(f, (g, h)))
    assert equal_on_rows(iso.mor, assoc(f, g, h))


def test_generator_log_is_filled():
    f, g, h = fam(7), fam(8), fam(9)
    log = []
    coherence_iso(word(None, f, (g, h)), word(f, g, h), log)
    assert [s[0] for s in log] == ["L", "A^-1"]


def test_different_frontiers_have_no_iso():
    f, g = fam(10), fam(11)
    with pytest.raises(CoherenceError):
        coherence_iso(word(f, g), word(g, f))
    with pytest.raises(CoherenceError):
        coherence_iso(word(f, None), word(f, f))


@given(st.integers(0, 10 ** 6))
def test_isos_compose_along_chains(seed):
    rng = random.Random(seed)
    leaves = [fam(rng.random(), 1) for _ in range(rng.randint(1, 3))]
    a, b, c = (random_word(rng, leaves) for _ in range(3))
    chain = mat_compose(coherence_iso(b, c).mor, coherence_iso(a, b).mor)
    assert equal_on_rows(chain, coherence_iso(a, c).mor, rows(realize(a), 10))
    back = mat_compose(coherence_iso(b, a).mor, coherence_iso(a, b).mor)
    assert equal_on_rows(back, mat_id(realize(a)), rows(realize(a), 10))


def test_typed_rejects_wrong_words():
    f, g = fam(12), fam(13)
    with pytest.raises(ShapeError):
        TypedMor(word(f, g), Leaf(f), mat_id(f))
    assert typed(mat_id(f)).dom_word == Leaf(f)


def test_doteq_up_to_associator():
    f, g, h = fam(14), fam(15), fam(16)
    F = random_mat(random.Random(17), f, g)
    lhs = typed(F).tensor(typed_id(word(g, h)))
    rhs = TypedMor(word(f, g, h), word(g, g, h),
                   mat_compose(assoc(g, g, h, inverse=True), mat_compose(lhs.mor, assoc(f, g, h))))
    assert doteq(lhs, rhs, rows(rhs.mor.dom))


def test_doteq_detects_scaling():
    f, g = fam(18), fam(19)
    F = typed(random_mat(random.Random(20), f, g))
    G = typed(mat_scale(2, F.mor))
    d = doteq_difference(F, G, rows(f))
    assert d is not None and d.row in f.index_set
    assert doteq(F, F, rows(f))


def test_doteq_with_unit_words():
    f = fam(21)
    F = TypedMor(Node(UNIT_LEAF, Leaf(f)), Leaf(f), units(f, "left"))
    assert doteq(F, typed_id(Leaf(f)), rows(f))
