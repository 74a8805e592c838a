from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matcat.base import UNIT, GradedMorphism, GradedObject, GradedVect, PlainVect, identity_c
from matcat.category import (
    UNIT_OBJECT, ConstantFamily, DualObject, Family, MatMorphism, TensorObject, assoc,
    braid_m, coev_m, copair, coproduct, embed_mor, embed_obj, equal_on_rows, eval_m,
    first_difference, from_rows, mat_add, mat_compose, mat_id, mat_scale, mat_zero,
    naturals_family, restrict, tensor_mor_m, twist_m, unembed_mor, units)
from matcat.errors import DisjointnessError, DualityObstruction, MembershipError, ShapeError
from matcat.index import AllNaturals, PairImage, Singleton, pair
from matcat.suites import random_family, random_mat, zigzag_difference

LINE = GradedObject((1,))
Z = GradedObject((0,))


def scalar(v, a=Z):
    return GradedMorphism(a, a, {0: {0: v}})


def fam(seed, size=2):
    return random_family(random.Random(seed), GradedVect(2), 2, 2, size)


def test_singleton_chain_multiplies():
    f, g, h = Family.of({1: Z}), Family.of({2: Z}), Family.of({3: Z})
    F = from_rows(f, g, {1: {2: scalar(2)}})
    G = from_rows(g, h, {2: {3: scalar(3)}})
    assert mat_compose(G, F).entry(1, 3) == scalar(6)


def test_identity_rows_are_singletons():
    f = fam(1, 3)
    for x in f.index_set.members():
        assert dict(mat_id(f).row(x)) == {x: identity_c(f.fiber(x))}


def test_identity_laws_and_inverse():
    f, g = fam(2, 3), fam(3, 3)
    F = random_mat(random.Random(4), f, g)
    assert equal_on_rows(mat_compose(F, mat_id(f)), F)
    assert equal_on_rows(mat_compose(mat_id(g), F), F)
    neg = mat_add(F, mat_scale(-1, F))
    assert all(not neg.row(x) for x in f.index_set.members())


def test_composition_outside_support_is_zero():
    f, g, h = Family.of({1: Z}), Family.of({2: Z, 5: Z}), Family.of({3: Z, 4: Z})
    F = from_rows(f, g, {1: {2: scalar(1)}})
    G = from_rows(g, h, {2: {3: scalar(1)}, 5: {4: scalar(1)}})
    assert mat_compose(G, F).entry(1, 4).is_zero


@given(st.integers(0, 10 ** 6))
def test_composition_associative(seed):
    rng = random.Random(seed)
    f, g, h, k = (fam(rng.random()) for _ in range(4))
    F, G, H = random_mat(rng, f, g), random_mat(rng, g, h), random_mat(rng, h, k)
    assert equal_on_rows(mat_compose(H, mat_compose(G, F)), mat_compose(mat_compose(H, G), F))


def test_mismatched_composition_and_addition():
    f, g = fam(5), fam(6)
    with pytest.raises(ShapeError):
        mat_compose(mat_id(f), mat_id(g))
    with pytest.raises(ShapeError):
        mat_add(mat_id(f), mat_id(g))


def test_rows_are_validated():
    f, g = Family.of({1: Z}), Family.of({2: Z})
    with pytest.raises(MembershipError):
        MatMorphism(f, g, lambda x: {7: scalar(1)}).row(1)
    with pytest.raises(ShapeError):
        MatMorphism(f, g, lambda x: {2: scalar(1, LINE)}).row(1)
    with pytest.raises(MembershipError):
        mat_id(f).row(0)


def test_zero_entries_are_not_stored():
    f = Family.of({1: Z})
    F = MatMorphism(f, f, lambda x: {1: scalar(0)})
    assert dict(F.row(1)) == {}


def test_tensor_objects():
    f, g = Family.of({3: Z}), Family.of({5: LINE})
    t = TensorObject(f, g)
    assert t.index_set.members() == (pair(3, 5),)
    assert t.fiber(pair(3, 5)) == Z.tensor(LINE)
    assert TensorObject(f, UNIT_OBJECT).index_set == PairImage(Singleton(3), Singleton(0))


@given(st.integers(0, 10 ** 6))
def test_tensor_functorial(seed):
    rng = random.Random(seed)
    f, g, f2, g2, f3, g3 = (fam(rng.random()) for _ in range(6))
    F, G = random_mat(rng, f, f2), random_mat(rng, g, g2)
    F2, G2 = random_mat(rng, f2, f3), random_mat(rng, g2, g3)
    lhs = mat_compose(tensor_mor_m(F2, G2), tensor_mor_m(F, G))
    assert equal_on_rows(lhs, tensor_mor_m(mat_compose(F2, F), mat_compose(G2, G)))
    assert equal_on_rows(tensor_mor_m(mat_id(f), mat_id(g)), mat_id(TensorObject(f, g)))
    assert all(not r for r in (tensor_mor_m(F, mat_zero(g, g2)).row(x)
                               for x in TensorObject(f, g).index_set.members()))


def test_pentagon_on_singletons():
    f, g, h, k = (Family.of({i: GradedObject((i - 2,))}) for i in range(1, 5))
    lhs = mat_compose(tensor_mor_m(mat_id(f), assoc(g, h, k)),
                      mat_compose(assoc(f, TensorObject(g, h), k), tensor_mor_m(assoc(f, g, h), mat_id(k))))
    rhs = mat_compose(assoc(f, g, TensorObject(h, k)), assoc(TensorObject(f, g), h, k))
    assert equal_on_rows(lhs, rhs)


def test_triangle_and_unitor_inverses():
    f, g = fam(7), fam(8)
    lhs = mat_compose(tensor_mor_m(mat_id(f), units(g, "left")), assoc(f, UNIT_OBJECT, g))
    assert equal_on_rows(lhs, tensor_mor_m(units(f, "right"), mat_id(g)))
    r = units(f, "right")
    assert equal_on_rows(mat_compose(units(f, "right", inverse=True), r), mat_id(r.dom))
    assert equal_on_rows(mat_compose(assoc(f, g, f, inverse=True), assoc(f, g, f)),
                         mat_id(TensorObject(TensorObject(f, g), f)))
    with pytest.raises(ValueError):
        units(f, "middle")


def test_unitor_naturality():
    f, f2 = fam(9), fam(10)
    F = random_mat(random.Random(11), f, f2)
    assert equal_on_rows(mat_compose(F, units(f, "right")),
                         mat_compose(units(f2, "right"), tensor_mor_m(F, mat_id(UNIT_OBJECT))))


@pytest.mark.parametrize("q", [1, 2, 3])
def test_hexagon_and_balance(q):
    base = GradedVect(q)
    f, g, h = fam(12), fam(13), fam(14)
    C = lambda a, b: braid_m(base, a, b)  # noqa: E731
    lhs = mat_compose(assoc(g, h, f), mat_compose(C(f, TensorObject(g, h)), assoc(f, g, h)))
    rhs = mat_compose(tensor_mor_m(mat_id(g), C(f, h)), mat_compose(assoc(g, f, h), tensor_mor_m(C(f, g), mat_id(h))))
    assert equal_on_rows(lhs, rhs)
    bal = mat_compose(C(g, f), mat_compose(C(f, g), tensor_mor_m(twist_m(base, f), twist_m(base, g))))
    assert equal_on_rows(twist_m(base, TensorObject(f, g)), bal)
    assert equal_on_rows(mat_compose(braid_m(base, f, g, inverse=True), C(f, g)), mat_id(TensorObject(f, g)))


def test_flip_squared_on_singletons():
    base = PlainVect()
    f, g = Family.of({1: GradedObject((0, 0))}), Family.of({2: Z})
    assert equal_on_rows(mat_compose(braid_m(base, g, f), braid_m(base, f, g)), mat_id(TensorObject(f, g)))


def test_twist_on_embedded_line():
    assert twist_m(GradedVect(2), embed_obj(LINE, 4)).entry(4, 4) == scalar(2, LINE)
    assert equal_on_rows(twist_m(GradedVect(2), UNIT_OBJECT), mat_id(UNIT_OBJECT))


def test_coproduct_of_two_singletons():
    total, inj = coproduct([Family.of({1: Z}), Family.of({2: LINE})])
    assert total.index_set.members() == (1, 2)
    assert equal_on_rows(copair(inj, total), mat_id(total))


def test_copair_restricts_to_targets():
    rng = random.Random(15)
    parts = [random_family(rng, GradedVect(2), 2, 2, 2, indices=(2 * k, 2 * k + 1)) for k in range(6)]
    total, inj = coproduct(parts)
    g = fam(16, 3)
    Ts = [random_mat(rng, p, g) for p in parts]
    T = copair(Ts, total)
    for J, Tk in zip(inj, Ts):
        assert equal_on_rows(mat_compose(T, J), Tk)


def test_coproduct_rejects_overlap():
    with pytest.raises(DisjointnessError):
        coproduct([Family.of({1: Z}), Family.of({1: Z, 2: Z})])


def test_infinite_coproduct_uses_union():
    evens = ConstantFamily(PairImage(AllNaturals(), Singleton(0)), Z)
    odds = ConstantFamily(PairImage(AllNaturals(), Singleton(1)), LINE)
    total, inj = coproduct([evens, odds])
    assert total.fiber(pair(5, 1)) == LINE
    assert equal_on_rows(mat_compose(copair(inj, total), inj[1]), inj[1], [pair(3, 1)])


def test_direct_sum_of_restrictions():
    f = fam(17, 5)
    parts = [restrict(f, [x]) for x in f.index_set.members()]
    total, _ = coproduct(parts)
    assert total == f


def test_embedding_is_a_functor():
    rng = random.Random(18)
    from matcat.base import random_morphism
    a, b, c = GradedObject((0, 1)), GradedObject((1, 1)), GradedObject((1,))
    al, be = random_morphism(rng, a, b), random_morphism(rng, b, c)
    assert equal_on_rows(mat_compose(embed_mor(be, 2, 3), embed_mor(al, 1, 2)), embed_mor(be @ al, 1, 3))
    assert equal_on_rows(embed_mor(identity_c(a), 1, 1), mat_id(embed_obj(a, 1)))
    assert unembed_mor(embed_mor(al, 1, 2)) == al
    assert embed_obj(UNIT, 0) == UNIT_OBJECT


def test_duality_obstruction():
    with pytest.raises(DualityObstruction):
        coev_m(naturals_family(Z))
    D = eval_m(naturals_family(LINE))
    assert len(D.row(pair(4, 4))) == 1
    assert not D.row(pair(4, 5))


def test_finite_duality():
    f = fam(19, 3)
    assert len(coev_m(f).row(0)) == 3
    assert DualObject(embed_obj(LINE, 2)).fiber(2) == LINE.dual()
    assert zigzag_difference(f) is None


def test_equal_on_rows_detects_scaling():
    f = Family.of({1: Z})
    F = from_rows(f, f, {1: {1: scalar(3)}})
    assert equal_on_rows(F, F, [1])
    assert not equal_on_rows(F, mat_scale(Fraction(2), F), [1])
    d = first_difference(F, mat_scale(2, F), [1])
    assert d.as_dict() == {"row": 1, "column": 1, "lhs": "{0: [3]}", "rhs": "{0: [6]}"}
    with pytest.raises(MembershipError):
        equal_on_rows(F, F, [9])


def test_finite_objects_compare_extensionally():
    assert TensorObject(Family.of({1: Z}), Family.of({2: Z})) == Family.of({pair(1, 2): Z})
    assert Family.of({1: Z}) != Family.of({1: LINE})
