"""
Invariant suites for the base category, the matrix category and coherence.

Each suite takes a base category, bounds and a seeded RNG and returns a list
of :class:`~matcat.report.CheckOutcome`.  Random data is drawn only from the
RNG passed in, so a suite is deterministic under its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Sequence

from matcat.base import (
    UNIT, BaseCategory, GradedMorphism, add_c, coev_c, compose_c, dual_mor, eval_c,
    identity_c, random_morphism, random_object, scale_c, tensor_c, zero_c)
from matcat.category import (
    UNIT_OBJECT, DualObject, Family, MatMorphism, MatObject, TensorObject, assoc, braid_m, coev_m,
    coproduct, copair, dual_mor_m, embed_mor, embed_obj, eval_m, first_difference,
    from_rows, mat_add, mat_compose, mat_id, mat_scale, mat_zero, naturals_family,
    restrict, tensor_mor_m, twist_m, unembed_mor, units)
from matcat.coherence import (
    UNIT_LEAF, Leaf, Node, TypedMor, coherence_iso, doteq, doteq_difference, realize)
from matcat.errors import CoherenceError, DisjointnessError, DualityObstruction
from matcat.index import pair
from matcat.report import CheckOutcome, outcome


def _diff(lhs: GradedMorphism, rhs: GradedMorphism, objects) -> dict | None:
    if lhs == rhs:
        return None
    return {"objects": [repr(o) for o in objects], "lhs": lhs.block_str(), "rhs": rhs.block_str()}


def _first(items, fn):
    for item in items:
        d = fn(*item)
        if d is not None:
            return d
    return None


# -- base category ---------------------------------------------------------------

def base_suite(base: BaseCategory, max_degree: int, max_dim: int, rng: random.Random,
               morphisms: int = 25) -> list[CheckOutcome]:
    objs = base.objects(max_degree, max_dim)
    nonzero = [a for a in objs if a.dim > 0]
    out: list[CheckOutcome] = []

    def obj():
        return rng.choice(nonzero)

    def mor(a, b):
        return random_morphism(rng, a, b)

    # random composable chains f: a -> b, g: b -> c, h: c -> d
    chains = []
    for _ in range(morphisms):
        a, b, c, d = obj(), obj(), obj(), obj()
        chains.append((a, b, c, d, mor(a, b), mor(b, c), mor(c, d), mor(a, b), mor(b, c)))

    def category_laws(a, b, c, d, f, g, h, f2, g2):
        return (_diff(compose_c(h, compose_c(g, f)), compose_c(compose_c(h, g), f), (a, b, c, d))
                or _diff(compose_c(identity_c(b), f), f, (a, b))
                or _diff(compose_c(f, identity_c(a)), f, (a, b)))
    out.append(outcome("composition_laws", _first(chains, category_laws), "%d chains" % len(chains)))

    def abelian_laws(a, b, c, d, f, g, h, f2, g2):
        z = zero_c(a, b)
        return (_diff(add_c(f, z), f, (a, b))
                or _diff(add_c(f, scale_c(Fraction(-1), f)), z, (a, b))
                or _diff(add_c(f, f2), add_c(f2, f), (a, b))
                or _diff(compose_c(g, add_c(f, f2)), add_c(compose_c(g, f), compose_c(g, f2)), (a, b, c))
                or _diff(compose_c(add_c(g, g2), f), add_c(compose_c(g, f), compose_c(g2, f)), (a, b, c))
                or _diff(tensor_c(add_c(f, f2), g), add_c(tensor_c(f, g), tensor_c(f2, g)), (a, b, c))
                or _diff(compose_c(zero_c(b, c), f), zero_c(a, c), (a, b, c)))
    out.append(outcome("abelian_bilinear", _first(chains, abelian_laws)))

    def strict_tensor(a, b, c, d, f, g, h, f2, g2):
        if (a.tensor(b)).tensor(c) != a.tensor(b.tensor(c)) or a.tensor(UNIT) != a or UNIT.tensor(a) != a:
            return {"objects": [repr(a), repr(b), repr(c)], "law": "strict objects"}
        return (_diff(tensor_c(tensor_c(f, g), h), tensor_c(f, tensor_c(g, h)), (a, b, c))
                or _diff(tensor_c(f, identity_c(UNIT)), f, (a, b))
                or _diff(tensor_c(identity_c(a), identity_c(b)), identity_c(a.tensor(b)), (a, b))
                or _diff(compose_c(tensor_c(g, h), tensor_c(f, g)),
                         tensor_c(compose_c(g, f), compose_c(h, g)), (a, b, c, d)))
    out.append(outcome("strict_tensor", _first(chains, strict_tensor)))

    triples = [(obj(), obj(), obj()) for _ in range(morphisms)] + [(UNIT, obj(), obj())]

    def hexagons(a, b, c):
        c_ = base.braid
        ia, ib, ic = identity_c(a), identity_c(b), identity_c(c)
        return (_diff(c_(a, b.tensor(c)), compose_c(tensor_c(ib, c_(a, c)), tensor_c(c_(a, b), ic)), (a, b, c))
                or _diff(c_(a.tensor(b), c), compose_c(tensor_c(c_(a, c), ib), tensor_c(ia, c_(b, c))), (a, b, c)))
    out.append(outcome("hexagons", _first(triples, hexagons)))

    def braid_inverse(a, b, c):
        ab = a.tensor(b)
        return (_diff(compose_c(base.braid(a, b, inverse=True), base.braid(a, b)), identity_c(ab), (a, b))
                or _diff(compose_c(base.braid(a, b), base.braid(a, b, inverse=True)),
                         identity_c(b.tensor(a)), (a, b))
                or _diff(base.braid(a, UNIT), identity_c(a), (a,))
                or _diff(base.braid(UNIT, a), identity_c(a), (a,)))
    out.append(outcome("braid_invertible", _first(triples, braid_inverse)))

    def naturality(a, b, c, d, f, g, h, f2, g2):
        # f: a -> b, h: c -> d
        lhs = compose_c(base.braid(b, d), tensor_c(f, h))
        rhs = compose_c(tensor_c(h, f), base.braid(a, c))
        return (_diff(lhs, rhs, (a, b, c, d))
                or _diff(compose_c(base.twist(b), f), compose_c(f, base.twist(a)), (a, b)))
    out.append(outcome("braid_twist_naturality", _first(chains, naturality)))

    def zigzag(a):
        ia, iad = identity_c(a), identity_c(a.dual())
        return (_diff(compose_c(tensor_c(eval_c(a), iad), tensor_c(iad, coev_c(a))), iad, (a,))
                or _diff(compose_c(tensor_c(ia, eval_c(a)), tensor_c(coev_c(a), ia)), ia, (a,)))
    out.append(outcome("zigzag", _first([(a,) for a in objs], zigzag)))

    def twist_balance(a, b, c):
        lhs = base.twist(a.tensor(b))
        rhs = compose_c(base.braid(b, a), compose_c(base.braid(a, b), tensor_c(base.twist(a), base.twist(b))))
        return (_diff(lhs, rhs, (a, b))
                or _diff(base.twist(a.dual()), dual_mor(base.twist(a)), (a,))
                or _diff(base.twist(UNIT), identity_c(UNIT), ()))
    out.append(outcome("twist_balance", _first(triples, twist_balance)))

    # c_{b,a} c_{a,b} = id exactly when the instance is symmetric
    def double_braid(a, b):
        return compose_c(base.braid(b, a), base.braid(a, b)) == identity_c(a.tensor(b))
    if base.is_symmetric:
        bad = next(((a, b) for a, b, _ in triples if not double_braid(a, b)), None)
        out.append(outcome("symmetric_control", None if bad is None else
                           {"objects": [repr(bad[0]), repr(bad[1])], "law": "c c != id"}))
    else:
        grid = [(a, b) for a in nonzero for b in nonzero]
        found = next(((a, b) for a, b in grid if not double_braid(a, b)), None)
        out.append(outcome("non_symmetric", {"law": "every double braiding is the identity"}
                           if found is None else None,
                           "" if found is None else "witness %r, %r" % found))
    return out


# -- matrix category -------------------------------------------------------------

def random_family(rng: random.Random, base: BaseCategory, max_degree: int, max_dim: int,
                  size: int, pool: int = 12, indices: Sequence[int] = None) -> Family:
    """Finite family on ``size`` random indices below ``pool`` with nonzero fibers."""
    idx = list(indices) if indices is not None else rng.sample(range(pool), size)
    return Family.of({x: random_object(rng, base, max_degree, max_dim, min_dim=1) for x in idx})


def random_mat(rng: random.Random, dom: MatObject, cod: MatObject, width: int = 2) -> MatMorphism:
    """Random morphism between finite objects; each row hits at most ``width`` targets."""
    targets = cod.index_set.members()
    rows = {}
    for x in dom.index_set.members():
        k = rng.randint(0, min(width, len(targets)))
        rows[x] = {y: random_morphism(rng, dom.fiber(x), cod.fiber(y)) for y in rng.sample(targets, k)}
    return from_rows(dom, cod, rows, "F")


def _rows(F: MatMorphism, limit: int) -> list[int]:
    return list(F.dom.index_set.members())[:limit]


def _mdiff(F, G, limit):
    return first_difference(F, G, _rows(F, limit))


class _RowBudget:
    """Repeats a randomized check until enough probe rows have been compared."""

    def __init__(self, rows: int, max_rounds: int = 40):
        self.rows = rows
        self.max_rounds = max_rounds

    def run(self, make: Callable[[], tuple], limit: int = 10 ** 6):
        checked = 0
        for _ in range(self.max_rounds):
            F, G = make()
            probes = _rows(F, limit)
            d = first_difference(F, G, probes)
            if d is not None:
                return d, checked
            checked += len(probes)
            if checked >= self.rows:
                break
        return None, checked


def matcat_suite(base: BaseCategory, max_degree: int, max_dim: int, rng: random.Random,
                 probe_rows: int = 25) -> list[CheckOutcome]:
    out: list[CheckOutcome] = []
    fam = lambda size=2: random_family(rng, base, max_degree, max_dim, size)  # noqa: E731
    budget = _RowBudget(probe_rows)

    def check(name, make):
        d, n = budget.run(make)
        out.append(outcome(name, d, "%d rows" % n))

    def identities():
        f, g = fam(3), fam(3)
        F = random_mat(rng, f, g)
        return mat_compose(F, mat_id(f)) + mat_compose(mat_id(g), F), 2 * F
    check("identity_laws", identities)

    def associativity():
        f, g, h, k = fam(3), fam(3), fam(3), fam(3)
        F, G, H = random_mat(rng, f, g), random_mat(rng, g, h), random_mat(rng, h, k)
        return mat_compose(H, mat_compose(G, F)), mat_compose(mat_compose(H, G), F)
    check("composition_associative", associativity)

    def abelian():
        f, g, h = fam(3), fam(3), fam(2)
        F, F2, G = random_mat(rng, f, g), random_mat(rng, f, g), random_mat(rng, g, h)
        lhs = mat_add(mat_compose(G, mat_add(F, F2)), mat_compose(G, mat_add(F, mat_scale(-1, F))))
        rhs = mat_add(mat_add(mat_compose(G, F), mat_compose(G, F2)), mat_compose(G, mat_zero(f, g)))
        return lhs, rhs
    check("abelian_bilinear", abelian)

    def tensor_functor():
        f, g, f2, g2, f3, g3 = (fam(2) for _ in range(6))
        F, G = random_mat(rng, f, f2), random_mat(rng, g, g2)
        F2, G2 = random_mat(rng, f2, f3), random_mat(rng, g2, g3)
        lhs = mat_compose(tensor_mor_m(F2, G2), tensor_mor_m(F, G))
        rhs = tensor_mor_m(mat_compose(F2, F), mat_compose(G2, G))
        return lhs, rhs
    check("tensor_functorial", tensor_functor)

    def tensor_ids():
        f, g = fam(3), fam(3)
        return tensor_mor_m(mat_id(f), mat_id(g)), mat_id(TensorObject(f, g))
    check("tensor_identities", tensor_ids)

    def pentagon():
        f, g, h, k = fam(2), fam(2), fam(2), fam(2)
        gh = TensorObject(g, h)
        lhs = mat_compose(tensor_mor_m(mat_id(f), assoc(g, h, k)),
                          mat_compose(assoc(f, gh, k), tensor_mor_m(assoc(f, g, h), mat_id(k))))
        rhs = mat_compose(assoc(f, g, TensorObject(h, k)), assoc(TensorObject(f, g), h, k))
        return lhs, rhs
    check("pentagon", pentagon)

    def triangle():
        f, g = fam(3), fam(3)
        lhs = mat_compose(tensor_mor_m(mat_id(f), units(g, "left")), assoc(f, UNIT_OBJECT, g))
        return lhs, tensor_mor_m(units(f, "right"), mat_id(g))
    check("triangle", triangle)

    def assoc_inverse():
        f, g, h = fam(2), fam(2), fam(2)
        return mat_compose(assoc(f, g, h, inverse=True), assoc(f, g, h)), mat_id(TensorObject(TensorObject(f, g), h))
    check("associator_invertible", assoc_inverse)

    def assoc_natural():
        f, g, h, f2, g2, h2 = (fam(2) for _ in range(6))
        F, G, H = random_mat(rng, f, f2), random_mat(rng, g, g2), random_mat(rng, h, h2)
        lhs = mat_compose(assoc(f2, g2, h2), tensor_mor_m(tensor_mor_m(F, G), H))
        rhs = mat_compose(tensor_mor_m(F, tensor_mor_m(G, H)), assoc(f, g, h))
        return lhs, rhs
    check("associator_natural", assoc_natural)

    def unit_natural():
        f, f2 = fam(3), fam(3)
        F = random_mat(rng, f, f2)
        iI = mat_id(UNIT_OBJECT)
        r = (mat_compose(F, units(f, "right")), mat_compose(units(f2, "right"), tensor_mor_m(F, iI)))
        l_ = (mat_compose(F, units(f, "left")), mat_compose(units(f2, "left"), tensor_mor_m(iI, F)))
        d = first_difference(*r)
        return (r if d is not None else l_)
    check("unitors_natural", unit_natural)

    def unit_inverse():
        f = fam(3)
        return (mat_compose(units(f, "right"), units(f, "right", inverse=True))
                + mat_compose(units(f, "left"), units(f, "left", inverse=True))), 2 * mat_id(f)
    check("unitors_invertible", unit_inverse)

    def hexagon1():
        f, g, h = fam(2), fam(2), fam(2)
        C = lambda a, b: braid_m(base, a, b)  # noqa: E731
        lhs = mat_compose(assoc(g, h, f), mat_compose(C(f, TensorObject(g, h)), assoc(f, g, h)))
        rhs = mat_compose(tensor_mor_m(mat_id(g), C(f, h)),
                          mat_compose(assoc(g, f, h), tensor_mor_m(C(f, g), mat_id(h))))
        return lhs, rhs
    check("hexagon_first", hexagon1)

    def hexagon2():
        f, g, h = fam(2), fam(2), fam(2)
        C = lambda a, b: braid_m(base, a, b)  # noqa: E731
        lhs = mat_compose(assoc(h, f, g, inverse=True),
                          mat_compose(C(TensorObject(f, g), h), assoc(f, g, h, inverse=True)))
        rhs = mat_compose(tensor_mor_m(C(f, h), mat_id(g)),
                          mat_compose(assoc(f, h, g, inverse=True), tensor_mor_m(mat_id(f), C(g, h))))
        return lhs, rhs
    check("hexagon_second", hexagon2)

    def braid_natural():
        f, g, f2, g2 = (fam(2) for _ in range(4))
        F, G = random_mat(rng, f, f2), random_mat(rng, g, g2)
        lhs = mat_compose(braid_m(base, f2, g2), tensor_mor_m(F, G))
        rhs = mat_compose(tensor_mor_m(G, F), braid_m(base, f, g))
        return lhs, rhs
    check("braid_natural", braid_natural)

    def braid_inverse():
        f, g = fam(3), fam(3)
        return mat_compose(braid_m(base, f, g, inverse=True), braid_m(base, f, g)), mat_id(TensorObject(f, g))
    check("braid_invertible", braid_inverse)

    def twist_balance():
        f, g = fam(3), fam(3)
        lhs = twist_m(base, TensorObject(f, g))
        rhs = mat_compose(braid_m(base, g, f), mat_compose(braid_m(base, f, g),
                                                           tensor_mor_m(twist_m(base, f), twist_m(base, g))))
        return lhs, rhs
    check("twist_balance", twist_balance)

    def twist_natural():
        f, g = fam(3), fam(3)
        F = random_mat(rng, f, g)
        return mat_compose(twist_m(base, g), F), mat_compose(F, twist_m(base, f))
    check("twist_natural", twist_natural)

    out.extend(coproduct_checks(base, max_degree, max_dim, rng))
    out.extend(embedding_checks(base, max_degree, max_dim, rng))
    out.extend(duality_checks(base, max_degree, max_dim, rng))
    return out


def coproduct_checks(base: BaseCategory, max_degree: int, max_dim: int, rng: random.Random,
                     rounds: int = 6) -> list[CheckOutcome]:
    """Universal property of coproducts with up to six summands, and the direct-sum decomposition."""
    out = []
    diff = None
    for r in range(rounds):
        n = 1 + r % 6
        idx = rng.sample(range(30), 2 * n)
        family = [random_family(rng, base, max_degree, max_dim, 2, indices=idx[2 * k:2 * k + 2])
                  for k in range(n)]
        total, inj = coproduct(family)
        g = random_family(rng, base, max_degree, max_dim, 3)
        Ts = [random_mat(rng, f, g) for f in family]
        T = copair(Ts, total)
        for k in range(n):
            diff = first_difference(mat_compose(T, inj[k]), Ts[k])
            if diff is not None:
                break
        diff = diff or first_difference(copair(inj, total), mat_id(total))
        if diff is not None:
            break
    out.append(outcome("coproduct_universal", diff, "%d rounds" % rounds))

    # overlapping summands are rejected
    f = Family.of({1: UNIT, 2: UNIT})
    g = Family.of({2: UNIT})
    try:
        coproduct([f, g])
        out.append(outcome("coproduct_disjointness", {"law": "overlap accepted"}))
    except DisjointnessError:
        out.append(outcome("coproduct_disjointness", None))

    # a finite object is the direct sum of its singleton restrictions
    diff = None
    for _ in range(rounds):
        f = random_family(rng, base, max_degree, max_dim, rng.randint(1, 6))
        parts = [restrict(f, [x]) for x in f.index_set.members()]
        total, inj = coproduct(parts)
        if total != f:
            diff = {"law": "coproduct of restrictions differs from the object"}
            break
        incl = [MatMorphism(p, f, (lambda p: lambda x: {x: identity_c(p.fiber(x))})(p), "i") for p in parts]
        iso = copair(incl, total)
        back = MatMorphism(f, total, lambda x: {x: identity_c(f.fiber(x))}, "p")
        diff = first_difference(iso, mat_id(f)) or first_difference(mat_compose(back, iso), mat_id(total))
        if diff is not None:
            break
    out.append(outcome("direct_sum_decomposition", diff))
    return out


def embedding_checks(base: BaseCategory, max_degree: int, max_dim: int, rng: random.Random,
                     rounds: int = 10) -> list[CheckOutcome]:
    diff = None
    for _ in range(rounds):
        a, b, c = (random_object(rng, base, max_degree, max_dim, 1) for _ in range(3))
        i, j, k = rng.sample(range(20), 3)
        al, be = random_morphism(rng, a, b), random_morphism(rng, b, c)
        lhs = mat_compose(embed_mor(be, j, k), embed_mor(al, i, j))
        diff = (first_difference(lhs, embed_mor(compose_c(be, al), i, k))
                or first_difference(embed_mor(identity_c(a), i, i), mat_id(embed_obj(a, i))))
        if diff is None and unembed_mor(embed_mor(al, i, j)) != al:
            diff = {"law": "embedding is not faithful"}
        if diff is None:
            # tensor compatibility with identity structure maps
            t = tensor_mor_m(embed_mor(al, i, j), embed_mor(be, j, k))
            e = embed_mor(tensor_c(al, be), pair(i, j), pair(j, k))
            if t.dom != e.dom or t.cod != e.cod:
                diff = {"law": "tensor of embedded objects differs"}
            else:
                diff = first_difference(t, e)
        if diff is not None:
            break
    out = [outcome("embedding_functor", diff, "%d rounds" % rounds)]
    unit_ok = embed_obj(UNIT, 0) == UNIT_OBJECT
    out.append(outcome("embedding_unit", None if unit_ok else {"law": "J(I) is not the unit"}))
    return out


def compose_typed(G: TypedMor, F: TypedMor) -> TypedMor:
    """``G o c o F`` where ``c`` is the coherence isomorphism between the middle words."""
    mid = coherence_iso(F.cod_word, G.dom_word)
    return TypedMor(F.dom_word, G.cod_word, mat_compose(G.mor, mat_compose(mid.mor, F.mor)))


def zigzag_difference(f: MatObject):
    """Both zig-zag composites compared with identities up to coherence."""
    fs = DualObject(f)
    F, S, I = Leaf(f), Leaf(fs), UNIT_LEAF
    B, D = coev_m(f), eval_m(f)
    step1 = TypedMor(Node(S, I), Node(S, Node(F, S)), tensor_mor_m(mat_id(fs), B))
    step2 = TypedMor(Node(Node(S, F), S), Node(I, S), tensor_mor_m(D, mat_id(fs)))
    first = compose_typed(step2, step1)
    probes_s = fs.index_set.members()
    d = doteq_difference(first, TypedMor(S, S, mat_id(fs)), probes_s)
    if d is not None:
        return d
    step1 = TypedMor(Node(I, F), Node(Node(F, S), F), tensor_mor_m(B, mat_id(f)))
    step2 = TypedMor(Node(F, Node(S, F)), Node(F, I), tensor_mor_m(mat_id(f), D))
    second = compose_typed(step2, step1)
    return doteq_difference(second, TypedMor(F, F, mat_id(f)), f.index_set.members())


def duality_checks(base: BaseCategory, max_degree: int, max_dim: int, rng: random.Random,
                   rounds: int = 6) -> list[CheckOutcome]:
    out = []
    try:
        coev_m(naturals_family(UNIT))
        out.append(outcome("duality_obstruction", {"law": "coevaluation built on an infinite object"}))
    except DualityObstruction:
        out.append(outcome("duality_obstruction", None))
    diff = None
    for _ in range(rounds):
        f = random_family(rng, base, max_degree, max_dim, rng.randint(1, 4))
        diff = zigzag_difference(f)
        if diff is not None:
            break
    out.append(outcome("finite_zigzag", diff, "%d objects" % rounds))

    diff = None
    for _ in range(rounds):
        f, g, h = (random_family(rng, base, max_degree, max_dim, 2) for _ in range(3))
        F, G = random_mat(rng, f, g), random_mat(rng, g, h)
        diff = (first_difference(dual_mor_m(mat_compose(G, F)), mat_compose(dual_mor_m(F), dual_mor_m(G)))
                or first_difference(twist_m(base, DualObject(f)), dual_mor_m(twist_m(base, f))))
        if diff is not None:
            break
    out.append(outcome("dual_functor_twist", diff))
    return out


# -- coherence ---------------------------------------------------------------------

def random_word(rng: random.Random, leaves: Sequence, unit_prob: float = 0.25):
    """Random bracketing of ``leaves`` with unit leaves sprinkled in."""
    items = [Leaf(x) for x in leaves]
    for _ in range(rng.randint(0, 2)):
        if rng.random() < unit_prob * 2:
            items.insert(rng.randint(0, len(items)), UNIT_LEAF)
    if not items:
        items = [UNIT_LEAF]

    def build(lo, hi):
        if hi - lo == 1:
            return items[lo]
        cut = rng.randint(lo + 1, hi - 1)
        return Node(build(lo, cut), build(cut, hi))

    return build(0, len(items))


def coherence_suite(base: BaseCategory, max_degree: int, max_dim: int, rng: random.Random,
                    triples: int = 100, probe_rows: int = 25) -> list[CheckOutcome]:
    out = []
    pool = [random_family(rng, base, max_degree, max_dim, rng.randint(1, 2), pool=6) for _ in range(6)]
    words = []
    for _ in range(triples):
        n = rng.randint(1, 5)
        leaves = [rng.choice(pool) for _ in range(n)]
        words.append((random_word(rng, leaves), random_word(rng, leaves), random_word(rng, leaves)))

    def probes(m, k=probe_rows):
        members = m.dom.index_set.members()
        return members if len(members) <= k else rng.sample(members, k)

    diff = None
    for w1, _, _ in words:
        iso = coherence_iso(w1, w1)
        diff = first_difference(iso.mor, mat_id(realize(w1)), probes(iso.mor))
        if diff is not None:
            break
    out.append(outcome("coherence_identity", diff, "%d words" % len(words)))

    diff = None
    for w1, w2, w3 in words:
        lhs = mat_compose(coherence_iso(w2, w3).mor, coherence_iso(w1, w2).mor)
        rhs = coherence_iso(w1, w3).mor
        diff = first_difference(lhs, rhs, probes(rhs))
        if diff is not None:
            break
    out.append(outcome("coherence_confluence", diff, "%d triples" % len(words)))

    try:
        coherence_iso(Node(Leaf(pool[0]), Leaf(pool[1])), Node(Leaf(pool[1]), Leaf(pool[0])))
        out.append(outcome("coherence_frontier", {"law": "mismatched frontiers accepted"}))
    except CoherenceError:
        out.append(outcome("coherence_frontier", None))

    # sampled typed morphisms related by coherence isomorphisms
    diff = None
    samples = max(10, triples // 5)
    for _ in range(samples):
        dl = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        cl = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        d1, d2, d3 = (random_word(rng, dl) for _ in range(3))
        c1, c2, c3 = (random_word(rng, cl) for _ in range(3))
        F = TypedMor(d1, c1, random_mat(rng, realize(d1), realize(c1)))
        G = conjugate(F, d2, c2)
        H = conjugate(G, d3, c3)
        pf, pg, ph = (probes(t.mor) for t in (F, G, H))
        checks = [(F, F, pf, True), (F, G, pg, True), (G, F, pf, True), (G, H, ph, True), (F, H, ph, True)]
        if any(F.mor.row(x) for x in pf):
            checks.append((F, TypedMor(F.dom_word, F.cod_word, mat_scale(2, F.mor)), pf, False))
        for a, b, p, expect in checks:
            if doteq(a, b, p) != expect:
                diff = {"law": "doteq", "expected": expect, "lhs": repr(a.dom_word), "rhs": repr(b.dom_word)}
                break
        if diff is None:
            # compatibility with composition and tensor
            el = [rng.choice(pool) for _ in range(rng.randint(1, 2))]
            e1, e2 = random_word(rng, el), random_word(rng, el)
            K = TypedMor(c1, e1, random_mat(rng, realize(c1), realize(e1)))
            K2 = conjugate(K, c2, e2)
            comp_f = TypedMor(F.dom_word, K.cod_word, mat_compose(K.mor, F.mor))
            comp_g = compose_typed(K2, G)
            ok = doteq(comp_f, comp_g, probes(comp_g.mor))
            ok = ok and doteq(F.tensor(K), G.tensor(K2), probes(G.tensor(K2).mor, 10))
            if not ok:
                diff = {"law": "doteq compatibility"}
        if diff is not None:
            break
    out.append(outcome("doteq_equivalence", diff, "%d samples" % samples))
    return out


def conjugate(F: TypedMor, dom_word, cod_word) -> TypedMor:
    """``X o F o Y`` retyped on new words with the same frontiers."""
    X = coherence_iso(F.cod_word, cod_word)
    Y = coherence_iso(dom_word, F.dom_word)
    return TypedMor(dom_word, cod_word, mat_compose(X.mor, mat_compose(F.mor, Y.mor)))
