"""
The bialgebra object h-bar and its structure maps.

An encoding ``h`` is an injective map from an index set ``S_h`` onto a set of
base objects closed under tensor and containing the unit.  The object h-bar
lives on the diagonal ``{pair(x, x) : x in S_h}`` with fiber ``h(x)* (x) h(x)``.

``mu`` multiplies through ``Gamma_{y,x}``, ``delta`` inserts a coevaluation,
``epsilon`` evaluates.  :func:`verify_suite` checks the algebra, coalgebra
and compatibility laws on probe rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from matcat.base import (
    UNIT, BaseCategory, GradedMorphism, GradedObject, coev_c, compose_c, eval_c,
    identity_c, tensor_c, tensor_many)
from matcat.category import (
    UNIT_OBJECT, Family, MatMorphism, MatObject, TensorObject, assoc, braid_m,
    first_difference, mat_compose, mat_id, tensor_mor_m, units)
from matcat.coherence import (
    UNIT_LEAF, Leaf, Node, TypedMor, doteq_difference, realize)
from matcat.errors import ClosureError, UsageError
from matcat.index import STAR, AllNaturals, DiagImage, IndexSet, pair, unpair
from matcat.report import CheckOutcome, outcome


# -- encodings ---------------------------------------------------------------

def zigzag(n: int) -> int:
    """Integers to naturals: 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ..."""
    return 2 * n if n >= 0 else -2 * n - 1


def unzigzag(m: int) -> int:
    return m // 2 if m % 2 == 0 else -(m + 1) // 2


class HEncoding:
    """Injective ``h: S_h -> objects`` with tensor-closed image containing the unit."""

    index_set: IndexSet = AllNaturals()

    def encode(self, a: GradedObject) -> int:
        raise NotImplementedError

    def decode(self, x: int) -> GradedObject:
        raise NotImplementedError

    def _check(self, x):
        if not isinstance(x, int) or x not in self.index_set:
            raise ClosureError("%r is not an encoded object index" % (x,))

    @cached_property
    def x0(self) -> int:
        return self.encode(UNIT)

    def chi(self, x: int, y: int) -> int:
        """Index of ``h(x) (x) h(y)``."""
        self._check(x)
        self._check(y)
        return self.encode(self.decode(x).tensor(self.decode(y)))


@dataclass(frozen=True, eq=True)
class GradedEncoding(HEncoding):
    """Bijection between the naturals and all graded objects (ordered degree tuples).

    The degrees ``(a1, ..., ak)`` are stored as the bit positions
    ``e1 < e2 < ... < ek`` with ``e1 = z(a1)`` and ``e(i+1) = e(i) + z(a(i+1)) + 1``,
    where ``z`` is :func:`zigzag`.  The empty tuple is 0 and the unit is 1.
    """

    def encode(self, a: GradedObject) -> int:
        code, e = 0, -1
        for d in a.degrees:
            e += zigzag(d) + 1
            code |= 1 << e
        return code

    def decode(self, x: int) -> GradedObject:
        self._check(x)
        degs, prev, pos = [], -1, 0
        while x:
            if x & 1:
                degs.append(unzigzag(pos - prev - 1))
                prev = pos
            x >>= 1
            pos += 1
        return GradedObject(tuple(degs))


@dataclass(frozen=True, eq=True)
class PlainEncoding(HEncoding):
    """Ungraded objects are determined by their dimension."""

    def encode(self, a: GradedObject) -> int:
        if any(a.degrees):
            raise ClosureError("%r is not an ungraded object" % (a,))
        return a.dim

    def decode(self, x: int) -> GradedObject:
        self._check(x)
        return GradedObject((0,) * x)


def encoding_for(base: BaseCategory) -> HEncoding:
    return GradedEncoding() if base.graded else PlainEncoding()


@dataclass(frozen=True, eq=False)
class HBarObject(MatObject):
    """``pair(x, x) -> h(x)* (x) h(x)`` on the diagonal of ``S_h``."""

    encoding: HEncoding

    @cached_property
    def index_set(self):
        return DiagImage(self.encoding.index_set)

    def _fiber(self, z):
        x, _ = unpair(z)
        a = self.encoding.decode(x)
        return a.dual().tensor(a)

    def __repr__(self):
        return "HBar"


# -- the isomorphisms gamma and Gamma ----------------------------------------

def gamma_dual(x: GradedObject, y: GradedObject) -> GradedMorphism:
    """``y* (x) x* -> (x (x) y)*`` as the composite of two evaluations after a coevaluation."""
    xy = x.tensor(y)
    xyd = xy.dual()
    step1 = tensor_c(identity_c(y.dual().tensor(x.dual())), coev_c(xy))
    step2 = tensor_many(identity_c(y.dual()), eval_c(x), identity_c(y.tensor(xyd)))
    step3 = tensor_c(eval_c(y), identity_c(xyd))
    return compose_c(step3, compose_c(step2, step1))


def gamma_big(base: BaseCategory, x: GradedObject, y: GradedObject) -> GradedMorphism:
    """``Gamma_{x,y}: y* (x) y (x) x* (x) x -> (x (x) y)* (x) (x (x) y)``."""
    yd, xd = y.dual(), x.dual()
    first = tensor_many(identity_c(yd), base.braid(y, xd), identity_c(x))
    second = tensor_c(gamma_dual(x, y), base.braid(y, x))
    return compose_c(second, first)


def identity_gamma(base: BaseCategory, x: GradedObject, y: GradedObject) -> GradedMorphism:
    """Sabotaged Gamma: positional identity, kept only where degrees agree."""
    src = y.dual().tensor(y).tensor(x.dual()).tensor(x)
    xy = x.tensor(y)
    dst = xy.dual().tensor(xy)
    cols = {p: {p: Fraction(1)}
            for p, (a, b) in enumerate(zip(src.degrees, dst.degrees)) if a == b}
    return GradedMorphism(src, dst, cols)


GammaFn = Callable[[BaseCategory, GradedObject, GradedObject], GradedMorphism]


# -- h-bar ---------------------------------------------------------------------

class HBar:
    """The bialgebra ``(h-bar, mu, eta, delta, epsilon)`` over a base category.

    ``gamma`` replaces the Gamma isomorphism and ``middle_braid=False`` drops
    the braiding from the product on ``h-bar (x) h-bar``; both exist to check
    that the verification suite can fail.
    """

    def __init__(self, base: BaseCategory, encoding: HEncoding = None,
                 gamma: GammaFn = None, middle_braid: bool = True):
        self.base = base
        self.encoding = encoding if encoding is not None else encoding_for(base)
        self._gamma_fn = gamma if gamma is not None else gamma_big
        self.middle_braid = middle_braid
        self.obj = HBarObject(self.encoding)
        self._gamma_cache: dict = {}

    @property
    def x0(self) -> int:
        return self.encoding.x0

    def diag(self, a: GradedObject) -> int:
        """Index of ``a* (x) a`` in h-bar."""
        x = self.encoding.encode(a)
        return pair(x, x)

    def Gamma(self, x: GradedObject, y: GradedObject) -> GradedMorphism:
        key = (x, y)
        g = self._gamma_cache.get(key)
        if g is None:
            g = self._gamma_cache[key] = self._gamma_fn(self.base, x, y)
        return g

    # words
    @cached_property
    def H(self) -> Leaf:
        return Leaf(self.obj)

    @cached_property
    def mu(self) -> MatMorphism:
        enc = self.encoding

        def rowfn(v):
            a, b = unpair(v)
            x, y = unpair(a)[0], unpair(b)[0]
            z = enc.chi(y, x)
            return {pair(z, z): self.Gamma(enc.decode(y), enc.decode(x))}

        return MatMorphism(TensorObject(self.obj, self.obj), self.obj, rowfn, "mu")

    @cached_property
    def eta(self) -> MatMorphism:
        x0 = self.x0
        return MatMorphism(UNIT_OBJECT, self.obj, lambda s: {pair(x0, x0): identity_c(UNIT)}, "eta")

    @cached_property
    def delta(self) -> MatMorphism:
        enc = self.encoding

        def rowfn(v):
            a = enc.decode(unpair(v)[0])
            return {pair(v, v): tensor_many(identity_c(a.dual()), coev_c(a), identity_c(a))}

        return MatMorphism(self.obj, TensorObject(self.obj, self.obj), rowfn, "delta")

    @cached_property
    def epsilon(self) -> MatMorphism:
        enc = self.encoding
        return MatMorphism(self.obj, UNIT_OBJECT,
                           lambda v: {STAR: eval_c(enc.decode(unpair(v)[0]))}, "epsilon")

    @cached_property
    def mu_hat(self) -> TypedMor:
        """Product on ``h-bar (x) h-bar``: reassociate, braid the middle factors, multiply."""
        H = self.obj
        HH = TensorObject(H, H)
        idH = mat_id(H)
        s1 = assoc(HH, H, H, inverse=True)
        s2 = tensor_mor_m(assoc(H, H, H), idH)
        if self.middle_braid:
            s3 = tensor_mor_m(tensor_mor_m(idH, braid_m(self.base, H, H)), idH)
        else:
            s3 = mat_id(TensorObject(TensorObject(H, HH), H))
        s4 = tensor_mor_m(assoc(H, H, H, inverse=True), idH)
        s5 = assoc(HH, H, H)
        s6 = tensor_mor_m(self.mu, self.mu)
        m = s1
        for s in (s2, s3, s4, s5, s6):
            m = mat_compose(s, m)
        m.label = "mu_hat"
        hh = Node(self.H, self.H)
        return TypedMor(Node(hh, hh), hh, m)

    def module_object(self, V: GradedObject) -> MatObject:
        """``j_V``: the base object ``V`` placed at the unit's index."""
        return Family(((self.x0, V),))

    def action_T(self, V: GradedObject) -> MatMorphism:
        """Action ``h-bar (x) j_V -> j_V`` through the counit."""
        enc, x0 = self.encoding, self.x0
        jV = self.module_object(V)
        idV = identity_c(V)

        def rowfn(w):
            a = enc.decode(unpair(unpair(w)[0])[0])
            return {x0: tensor_c(eval_c(a), idV)}

        return MatMorphism(TensorObject(self.obj, jV), jV, rowfn, "T")


# -- verification --------------------------------------------------------------

def _base_difference(lhs: GradedMorphism, rhs: GradedMorphism, label):
    if lhs == rhs:
        return None
    return {"objects": label, "lhs": lhs.block_str(), "rhs": rhs.block_str()}


def sample_tuples(rng: random.Random, objects: Sequence[GradedObject], k: int, n: int,
                  include_unit: bool = True) -> list[tuple[GradedObject, ...]]:
    """``n`` distinct-if-possible ``k``-tuples of probe objects; the all-unit tuple first."""
    out: list = []
    seen = set()
    if include_unit and n > 0:
        t = (UNIT,) * k
        out.append(t)
        seen.add(t)
    budget = 50 * n
    while len(out) < n and budget:
        budget -= 1
        t = tuple(rng.choice(objects) for _ in range(k))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def verify_suite(hbar: HBar, objects: Sequence[GradedObject], rows: int = 25, seed: int = 0,
                 fibers: Sequence[GradedObject] = None, triples: int = 50) -> list[CheckOutcome]:
    """Run every bialgebra check on probe rows drawn from ``objects``."""
    objects = [a for a in objects if a.dim > 0]
    if not objects or rows < 1:
        raise UsageError("the bialgebra suite needs a nonempty probe set")
    rng = random.Random(seed)
    d = hbar.diag
    H, I = hbar.H, UNIT_LEAF
    mu, eta, delta, eps = hbar.mu, hbar.eta, hbar.delta, hbar.epsilon
    Hobj = hbar.obj
    idH = mat_id(Hobj)
    pairs = sample_tuples(rng, objects, 2, rows)
    trips = sample_tuples(rng, objects, 3, max(rows, triples))
    singles = [(a,) for a in objects]
    if fibers is None:
        fibers = [UNIT] + [t[0] for t in sample_tuples(rng, objects, 1, 5, include_unit=False)]
    out: list[CheckOutcome] = []

    def first_base(items, fn):
        for item in items:
            diff = fn(*item)
            if diff is not None:
                return diff
        return None

    # Gamma relation on object triples
    def gamma_relation_diff(x, y, z):
        zz = z.dual().tensor(z)
        xx = x.dual().tensor(x)
        lhs = compose_c(hbar.Gamma(x, y.tensor(z)), tensor_c(hbar.Gamma(y, z), identity_c(xx)))
        rhs = compose_c(hbar.Gamma(x.tensor(y), z), tensor_c(identity_c(zz), hbar.Gamma(x, y)))
        return _base_difference(lhs, rhs, [repr(x), repr(y), repr(z)])
    out.append(outcome("gamma_relation", first_base(trips, gamma_relation_diff), "%d triples" % len(trips)))

    # evaluation after Gamma
    def evaluation_diff(x, y):
        lhs = compose_c(eval_c(x.tensor(y)), hbar.Gamma(x, y))
        rhs = tensor_c(eval_c(y), eval_c(x))
        return _base_difference(lhs, rhs, [repr(x), repr(y)])
    all_pairs = [(a, b) for a in [UNIT] + objects for b in [UNIT] + objects]
    out.append(outcome("gamma_evaluation", first_base(all_pairs, evaluation_diff), "%d pairs" % len(all_pairs)))

    def gamma_unit(a):
        aa = identity_c(a.dual().tensor(a))
        return (_base_difference(hbar.Gamma(a, UNIT), aa, [repr(a), "I"])
                or _base_difference(hbar.Gamma(UNIT, a), aa, ["I", repr(a)]))
    out.append(outcome("gamma_unit", first_base([(UNIT,)] + singles, gamma_unit)))

    def double_coev(a):
        ad, ida = a.dual(), identity_c(a)
        first = tensor_many(identity_c(ad), coev_c(a), ida)
        lhs = compose_c(tensor_many(identity_c(ad), coev_c(a), ida, identity_c(ad.tensor(a))), first)
        rhs = compose_c(tensor_many(identity_c(ad.tensor(a)), identity_c(ad), coev_c(a), ida), first)
        return _base_difference(lhs, rhs, [repr(a)])
    out.append(outcome("double_coevaluation", first_base(singles, double_coev)))

    # index multiplication
    enc = hbar.encoding

    def chi_laws(x, y, z):
        a, b, c = (enc.encode(t) for t in (x, y, z))
        if enc.chi(enc.chi(a, b), c) != enc.chi(a, enc.chi(b, c)):
            return {"objects": [repr(x), repr(y), repr(z)], "law": "associativity"}
        if enc.chi(a, enc.x0) != a or enc.chi(enc.x0, a) != a:
            return {"objects": [repr(x)], "law": "unit"}
        return None
    out.append(outcome("index_product", first_base(trips, chi_laws)))

    # row supports
    p1 = [d(t[0]) for t in [(UNIT,)] + singles]
    p2 = [pair(d(x), d(y)) for x, y in pairs]

    def support_diff():
        for m, probes in ((mu, p2), (delta, p1), (eps, p1), (eta, [STAR])):
            for v in probes:
                if len(m.row(v)) != 1:
                    return {"morphism": m.label, "row": v, "support": list(m.row(v))}
        return None
    out.append(outcome("singleton_support", support_diff()))

    # algebra
    p3 = [pair(d(x), pair(d(y), d(z))) for x, y, z in trips[:rows]]
    left = TypedMor(Node(Node(H, H), H), H, mat_compose(mu, tensor_mor_m(mu, idH)))
    right = TypedMor(Node(H, Node(H, H)), H, mat_compose(mu, tensor_mor_m(idH, mu)))
    out.append(outcome("associativity", doteq_difference(left, right, p3)))

    # the product on h-bar (x) h-bar is associative as well; six factors, so
    # most probe rows use one-dimensional objects to keep fibers small
    small = [a for a in objects if a.dim <= 1] or objects
    sextuples = sample_tuples(rng, small, 6, max(1, rows - 5)) + sample_tuples(
        rng, objects, 6, min(5, rows), include_unit=False)
    mh = hbar.mu_hat
    hh = Node(H, H)
    HH = realize(hh)
    idHH = mat_id(HH)
    sq_left = TypedMor(Node(Node(hh, hh), hh), hh, mat_compose(mh.mor, tensor_mor_m(mh.mor, idHH)))
    sq_right = TypedMor(Node(hh, Node(hh, hh)), hh, mat_compose(mh.mor, tensor_mor_m(idHH, mh.mor)))
    p6 = [pair(pair(d(a), d(b)), pair(pair(d(c), d(e)), pair(d(f), d(g))))
          for a, b, c, e, f, g in sextuples]
    out.append(outcome("tensor_square_associativity", doteq_difference(sq_left, sq_right, p6),
                       "%d rows" % len(p6)))

    typed_id = TypedMor(H, H, idH)
    unit_l = TypedMor(Node(I, H), H, mat_compose(mu, tensor_mor_m(eta, idH)))
    unit_r = TypedMor(Node(H, I), H, mat_compose(mu, tensor_mor_m(idH, eta)))
    out.append(outcome("unit_laws", doteq_difference(unit_l, typed_id, p1)
                        or doteq_difference(unit_r, typed_id, p1)))

    # coalgebra
    co_l = TypedMor(H, Node(Node(H, H), H), mat_compose(tensor_mor_m(delta, idH), delta))
    co_r = TypedMor(H, Node(H, Node(H, H)), mat_compose(tensor_mor_m(idH, delta), delta))
    diff = doteq_difference(co_l, co_r, p1)
    if diff is None:
        lhs = mat_compose(assoc(Hobj, Hobj, Hobj), co_l.mor)
        diff = first_difference(lhs, co_r.mor, p1)
    out.append(outcome("coassociativity", diff))

    cl = mat_compose(units(Hobj, "left"), mat_compose(tensor_mor_m(eps, idH), delta))
    cr = mat_compose(units(Hobj, "right"), mat_compose(tensor_mor_m(idH, eps), delta))
    out.append(outcome("counit_laws", first_difference(cl, idH, p1) or first_difference(cr, idH, p1)))

    # bialgebra
    compat_l = TypedMor(hh, hh, mat_compose(mh.mor, tensor_mor_m(delta, delta)))
    compat_r = TypedMor(hh, hh, mat_compose(delta, mu))
    out.append(outcome("compatibility", doteq_difference(compat_l, compat_r, p2)))

    ee = TypedMor(hh, Node(I, I), tensor_mor_m(eps, eps))
    em = TypedMor(hh, I, mat_compose(eps, mu))
    out.append(outcome("counit_multiplicative", doteq_difference(ee, em, p2)))

    out.append(outcome("counit_unit", first_difference(mat_compose(eps, eta), mat_id(UNIT_OBJECT))))

    # modules
    def module_diff():
        for V in fibers:
            jV = hbar.module_object(V)
            J = Leaf(jV)
            T = hbar.action_T(V)
            idJ = mat_id(jV)
            x0 = hbar.x0
            f = TypedMor(Node(I, J), J, mat_compose(T, tensor_mor_m(eta, idJ)))
            diff = doteq_difference(f, TypedMor(J, J, idJ), [x0])
            if diff is not None:
                return diff
            a = TypedMor(Node(Node(H, H), J), J, mat_compose(T, tensor_mor_m(mu, idJ)))
            b = TypedMor(Node(H, Node(H, J)), J, mat_compose(T, tensor_mor_m(idH, T)))
            probes = [pair(d(x), pair(d(y), x0)) for x, y in pairs]
            diff = doteq_difference(a, b, probes)
            if diff is not None:
                return diff
        return None
    out.append(outcome("module_action", module_diff(), "%d fibers" % len(fibers)))
    return out
