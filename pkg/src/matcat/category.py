"""
The matrix category over a strict braided base category.

An object is an index set ``S`` of naturals together with a fiber function
``S -> base objects``.  A morphism ``F: f -> g`` is a matrix of base morphisms
``F(x, y): f(x) -> g(y)`` in which every row ``x`` has finitely many nonzero
entries.  Rows are produced on demand and memoized; each row is a finite dict
``{y: entry}`` holding only nonzero entries, so row-finiteness is structural.

Objects with a finite index set compare extensionally (same indices, same
fibers); objects with an infinite index set compare structurally.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, fields
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from matcat.base import (
    UNIT, BaseCategory, GradedMorphism, GradedObject, add_c, compose_c, coev_c,
    dual_mor, eval_c, identity_c, scale_c, tensor_c)
from matcat.errors import (
    DisjointnessError, DualityObstruction, MembershipError, ShapeError)
from matcat.index import (
    STAR, AllNaturals, IndexSet, PairImage, Singleton, Union, disjoint,
    finite_set, pair, unpair)

Row = Mapping[int, GradedMorphism]


class MatObject:
    """Indexed family of base objects."""

    index_set: IndexSet

    def _fiber(self, x: int) -> GradedObject:
        raise NotImplementedError

    def fiber(self, x: int) -> GradedObject:
        if x not in self.index_set:
            raise MembershipError("%r is not an index of %r" % (x, self))
        return self._fiber(x)

    __call__ = fiber

    @property
    def is_finite(self) -> bool:
        return self.index_set.is_finite

    def table(self) -> tuple[tuple[int, GradedObject], ...]:
        return tuple((x, self._fiber(x)) for x in self.index_set.members())

    def _structure(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    @cached_property
    def _key(self):
        if self.is_finite:
            return ("finite", self.table())
        return (type(self).__name__,) + self._structure()

    def __eq__(self, other):
        if not isinstance(other, MatObject):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self):
        return hash(self._key)


@dataclass(frozen=True, eq=False)
class Family(MatObject):
    """Finite family given by an explicit table ``((index, fiber), ...)``."""

    entries: tuple[tuple[int, GradedObject], ...]

    def __post_init__(self):
        entries = tuple(sorted(dict(self.entries).items()))
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, mapping: Mapping[int, GradedObject]) -> Family:
        return cls(tuple(mapping.items()))

    @cached_property
    def _map(self):
        return dict(self.entries)

    @cached_property
    def index_set(self):
        return finite_set(self._map)

    def _fiber(self, x):
        return self._map[x]

    def __repr__(self):
        return "Family(%s)" % ", ".join("%d: %r" % e for e in self.entries)


@dataclass(frozen=True, eq=False)
class ConstantFamily(MatObject):
    """The same base object at every index of ``index_set``."""

    index_set: IndexSet
    value: GradedObject

    def _fiber(self, x):
        return self.value


@dataclass(frozen=True, eq=False)
class TensorObject(MatObject):
    """``(f (x) g)(pair(x, y)) = f(x) (x) g(y)``."""

    left: MatObject
    right: MatObject

    @cached_property
    def index_set(self):
        return PairImage(self.left.index_set, self.right.index_set)

    def _fiber(self, z):
        x, y = unpair(z)
        return self.left._fiber(x).tensor(self.right._fiber(y))

    def __repr__(self):
        return "(%r (x) %r)" % (self.left, self.right)


@dataclass(frozen=True, eq=False)
class DualObject(MatObject):
    """Pointwise dual ``f*(x) = f(x)*`` on the same index set."""

    base: MatObject

    @property
    def index_set(self):
        return self.base.index_set

    def _fiber(self, x):
        return self.base._fiber(x).dual()

    def __repr__(self):
        return "%r*" % (self.base,)


@dataclass(frozen=True, eq=False)
class SumObject(MatObject):
    """Family glued from summands with pairwise disjoint index sets."""

    parts: tuple[MatObject, ...]

    @cached_property
    def index_set(self):
        return Union(tuple(p.index_set for p in self.parts))

    def summand_of(self, x: int) -> int:
        for k, p in enumerate(self.parts):
            if p.index_set.member(x):
                return k
        raise MembershipError("%r is not an index of %r" % (x, self))

    def _fiber(self, x):
        return self.parts[self.summand_of(x)]._fiber(x)


UNIT_OBJECT = Family(((STAR, UNIT),))


def unit_object() -> MatObject:
    return UNIT_OBJECT


class MatMorphism:
    """Row-finite matrix of base morphisms ``dom -> cod``.

    ``rowfn(x)`` must return a finite mapping ``{y: entry}``; it is called at
    most once per row (memoized under a lock).  Rows are validated: every
    target is an index of ``cod``, every entry has the right source and
    target fibers, and zero entries are discarded.
    """

    def __init__(self, dom: MatObject, cod: MatObject,
                 rowfn: Callable[[int], Mapping[int, GradedMorphism]],
                 label: str = "?"):
        self.dom = dom
        self.cod = cod
        self._rowfn = rowfn
        self.label = label
        self._rows: dict[int, Row] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return "MatMorphism(%s: %r -> %r)" % (self.label, self.dom, self.cod)

    def row(self, x: int) -> Row:
        with self._lock:
            r = self._rows.get(x)
        if r is not None:
            return r
        if x not in self.dom.index_set:
            raise MembershipError("row %r is not an index of the domain of %s" % (x, self.label))
        src = self.dom._fiber(x)
        out = {}
        for y, e in self._rowfn(x).items():
            if e.is_zero:
                continue
            if y not in self.cod.index_set:
                raise MembershipError("%s: target %r is not an index of the codomain" % (self.label, y))
            if e.src != src or e.dst != self.cod._fiber(y):
                raise ShapeError("%s: entry (%r, %r) has type %r -> %r, expected %r -> %r"
                                 % (self.label, x, y, e.src, e.dst, src, self.cod._fiber(y)))
            out[y] = e
        r = MappingProxyType(dict(sorted(out.items())))
        with self._lock:
            self._rows.setdefault(x, r)
        return r

    def entry(self, x: int, y: int) -> GradedMorphism:
        e = self.row(x).get(y)
        if e is not None:
            return e
        if y not in self.cod.index_set:
            raise MembershipError("%r is not an index of the codomain" % (y,))
        return GradedMorphism._raw(self.dom._fiber(x), self.cod._fiber(y), {})

    def support(self, x: int) -> tuple[int, ...]:
        return tuple(self.row(x))

    def __matmul__(self, other: MatMorphism) -> MatMorphism:
        return mat_compose(self, other)

    def __add__(self, other: MatMorphism) -> MatMorphism:
        return mat_add(self, other)

    def __neg__(self) -> MatMorphism:
        return mat_scale(-1, self)

    def __sub__(self, other: MatMorphism) -> MatMorphism:
        return mat_add(self, mat_scale(-1, other))

    def __rmul__(self, k) -> MatMorphism:
        return mat_scale(k, self)

    def tensor(self, other: MatMorphism) -> MatMorphism:
        return tensor_mor_m(self, other)


def from_rows(dom: MatObject, cod: MatObject, rows: Mapping[int, Mapping[int, GradedMorphism]],
              label: str = "table") -> MatMorphism:
    """Morphism from an explicit table; rows not listed are zero."""
    table = {x: dict(r) for x, r in rows.items()}
    for x in table:
        if x not in dom.index_set:
            raise MembershipError("row %r is not an index of the domain" % (x,))
    return MatMorphism(dom, cod, lambda x: table.get(x, {}), label)


# -- Ab-category structure ---------------------------------------------------

def mat_compose(G: MatMorphism, F: MatMorphism) -> MatMorphism:
    """``(G o F)(x, y) = sum over z in supp F(x, -) of G(z, y) o F(x, z)``."""
    if F.cod != G.dom:
        raise ShapeError("cannot compose %s after %s: %r != %r" % (G.label, F.label, F.cod, G.dom))

    def rowfn(x):
        acc: dict[int, GradedMorphism] = {}
        for z, fxz in F.row(x).items():
            for y, gzy in G.row(z).items():
                term = compose_c(gzy, fxz)
                acc[y] = add_c(acc[y], term) if y in acc else term
        return acc

    return MatMorphism(F.dom, G.cod, rowfn, "%s.%s" % (G.label, F.label))


def mat_id(f: MatObject) -> MatMorphism:
    return MatMorphism(f, f, lambda x: {x: identity_c(f._fiber(x))}, "Id")


def mat_zero(f: MatObject, g: MatObject) -> MatMorphism:
    return MatMorphism(f, g, lambda x: {}, "0")


def mat_add(F: MatMorphism, G: MatMorphism) -> MatMorphism:
    if F.dom != G.dom or F.cod != G.cod:
        raise ShapeError("cannot add %s and %s: different types" % (F.label, G.label))

    def rowfn(x):
        acc = dict(F.row(x))
        for y, e in G.row(x).items():
            acc[y] = add_c(acc[y], e) if y in acc else e
        return acc

    return MatMorphism(F.dom, F.cod, rowfn, "(%s+%s)" % (F.label, G.label))


def mat_scale(k, F: MatMorphism) -> MatMorphism:
    k = Fraction(k)
    return MatMorphism(F.dom, F.cod, lambda x: {y: scale_c(k, e) for y, e in F.row(x).items()},
                       "%s*%s" % (k, F.label))


# -- monoidal structure ------------------------------------------------------

def tensor_obj_m(f: MatObject, g: MatObject) -> MatObject:
    return TensorObject(f, g)


def tensor_mor_m(F: MatMorphism, G: MatMorphism) -> MatMorphism:
    """``(F (x) G)(pair(x, y), pair(x', y')) = F(x, x') (x) G(y, y')``."""
    dom = TensorObject(F.dom, G.dom)
    cod = TensorObject(F.cod, G.cod)

    def rowfn(z):
        x, y = unpair(z)
        grow = G.row(y).items()
        return {pair(x2, y2): tensor_c(fe, ge)
                for x2, fe in F.row(x).items() for y2, ge in grow}

    return MatMorphism(dom, cod, rowfn, "(%s(x)%s)" % (F.label, G.label))


def assoc(f: MatObject, g: MatObject, h: MatObject, inverse: bool = False) -> MatMorphism:
    """``A_{f,g,h}: (f(x)g)(x)h -> f(x)(g(x)h)``, or its inverse."""
    left = TensorObject(TensorObject(f, g), h)
    right = TensorObject(f, TensorObject(g, h))
    if not inverse:
        def rowfn(v):
            xy, z = unpair(v)
            x, y = unpair(xy)
            return {pair(x, pair(y, z)): identity_c(left._fiber(v))}
        return MatMorphism(left, right, rowfn, "A")

    def rowfn_inv(w):
        x, yz = unpair(w)
        y, z = unpair(yz)
        return {pair(pair(x, y), z): identity_c(right._fiber(w))}
    return MatMorphism(right, left, rowfn_inv, "A^-1")


def units(f: MatObject, side: str, inverse: bool = False) -> MatMorphism:
    """Right unit ``R_f: f(x)I -> f`` or left unit ``L_f: I(x)f -> f`` (or inverses)."""
    if side == "right":
        t = TensorObject(f, UNIT_OBJECT)
        enc = lambda x: pair(x, STAR)  # noqa: E731
        dec = lambda z: unpair(z)[0]  # noqa: E731
        name = "R"
    elif side == "left":
        t = TensorObject(UNIT_OBJECT, f)
        enc = lambda x: pair(STAR, x)  # noqa: E731
        dec = lambda z: unpair(z)[1]  # noqa: E731
        name = "L"
    else:
        raise ValueError("side must be 'left' or 'right'")
    if not inverse:
        return MatMorphism(t, f, lambda z: {dec(z): identity_c(t._fiber(z))}, name)
    return MatMorphism(f, t, lambda x: {enc(x): identity_c(f._fiber(x))}, name + "^-1")


def right_unit(f, inverse=False):
    return units(f, "right", inverse)


def left_unit(f, inverse=False):
    return units(f, "left", inverse)


# -- braiding and twist ------------------------------------------------------

def braid_m(base: BaseCategory, f: MatObject, g: MatObject, inverse: bool = False) -> MatMorphism:
    """``C_{f,g}(pair(x, y), pair(y, x)) = c_{f(x), g(y)}``, or the inverse ``g(x)f -> f(x)g``."""
    if not inverse:
        def rowfn(v):
            x, y = unpair(v)
            return {pair(y, x): base.braid(f._fiber(x), g._fiber(y))}
        return MatMorphism(TensorObject(f, g), TensorObject(g, f), rowfn, "C")

    def rowfn_inv(w):
        y, x = unpair(w)
        return {pair(x, y): base.braid(f._fiber(x), g._fiber(y), inverse=True)}
    return MatMorphism(TensorObject(g, f), TensorObject(f, g), rowfn_inv, "C^-1")


def twist_m(base: BaseCategory, f: MatObject) -> MatMorphism:
    return MatMorphism(f, f, lambda x: {x: base.twist(f._fiber(x))}, "Theta")


# -- coproducts and the inclusion functor -------------------------------------

def coproduct(family: Sequence[MatObject]) -> tuple[MatObject, list[MatMorphism]]:
    """Coproduct of objects with pairwise disjoint index sets, with its injections."""
    family = list(family)
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if not disjoint(family[i].index_set, family[j].index_set):
                raise DisjointnessError("summands %d and %d overlap" % (i, j))
    if all(f.is_finite for f in family):
        table = {}
        for f in family:
            table.update(f.table())
        total: MatObject = Family.of(table)
    else:
        total = SumObject(tuple(family))
    injections = [MatMorphism(f, total, (lambda f: lambda x: {x: identity_c(f._fiber(x))})(f), "J%d" % k)
                  for k, f in enumerate(family)]
    return total, injections


def copair(targets: Sequence[MatMorphism], total: MatObject = None) -> MatMorphism:
    """Unique ``T: total -> g`` with ``T o J_k = T_k``; ``T(t, y) = T_k(t, y)`` for t in S_k."""
    targets = list(targets)
    if not targets:
        raise ShapeError("copair needs at least one morphism")
    if total is None:
        total = coproduct([t.dom for t in targets])[0]
    cod = targets[0].cod
    for t in targets:
        if t.cod != cod:
            raise ShapeError("copair targets must share a codomain")

    def rowfn(x):
        for t in targets:
            if x in t.dom.index_set:
                return dict(t.row(x))
        raise MembershipError("%r lies in no summand" % (x,))

    return MatMorphism(total, cod, rowfn, "copair")


def restrict(f: MatObject, indices: Iterable[int]) -> MatObject:
    return Family.of({x: f.fiber(x) for x in indices})


def embed_obj(V: GradedObject, at: int) -> MatObject:
    return Family(((at, V),))


def embed_mor(alpha: GradedMorphism, src: int, dst: int) -> MatMorphism:
    dom = embed_obj(alpha.src, src)
    cod = embed_obj(alpha.dst, dst)
    return MatMorphism(dom, cod, lambda x: {dst: alpha}, "J(alpha)")


def unembed_mor(F: MatMorphism) -> GradedMorphism:
    """Inverse of :func:`embed_mor` on morphisms between singleton objects."""
    (x,) = F.dom.index_set.members()
    (y,) = F.cod.index_set.members()
    return F.entry(x, y)


# -- duality on finite-domain objects ----------------------------------------

def dual_obj_m(f: MatObject) -> MatObject:
    return DualObject(f)


def eval_m(f: MatObject) -> MatMorphism:
    """``D_f: f*(x)f -> I`` with ``D_f(pair(x', x), *) = delta_{x', x} d_{f(x)}``."""
    def rowfn(v):
        xs, x = unpair(v)
        if xs != x:
            return {}
        return {STAR: eval_c(f._fiber(x))}
    return MatMorphism(TensorObject(DualObject(f), f), UNIT_OBJECT, rowfn, "D")


def coev_m(f: MatObject) -> MatMorphism:
    """``B_f: I -> f(x)f*``; only a morphism when ``f`` has finitely many indices."""
    if not f.is_finite:
        raise DualityObstruction(
            "coevaluation of %r would have a row with infinitely many nonzero entries" % (f,))
    xs = f.index_set.members()
    return MatMorphism(UNIT_OBJECT, TensorObject(f, DualObject(f)),
                       lambda s: {pair(x, x): coev_c(f._fiber(x)) for x in xs}, "B")


def dual_mor_m(F: MatMorphism) -> MatMorphism:
    """Transpose ``F*: g* -> f*`` with ``F*(y, x) = F(x, y)*``; needs a finite domain."""
    if not F.dom.is_finite:
        raise DualityObstruction("transpose needs a finite domain")
    cols: dict[int, dict[int, GradedMorphism]] = {}
    for x in F.dom.index_set.members():
        for y, e in F.row(x).items():
            cols.setdefault(y, {})[x] = dual_mor(e)
    return MatMorphism(DualObject(F.cod), DualObject(F.dom), lambda y: cols.get(y, {}), "%s*" % F.label)


# -- decidable equality ------------------------------------------------------

@dataclass
class RowDifference:
    row: int
    column: int
    lhs: GradedMorphism
    rhs: GradedMorphism

    def as_dict(self) -> dict:
        return {"row": self.row, "column": self.column,
                "lhs": self.lhs.block_str(), "rhs": self.rhs.block_str()}


def first_difference(F: MatMorphism, G: MatMorphism,
                     probes: Iterable[int] = None) -> RowDifference | None:
    """First probe row where ``F`` and ``G`` disagree, or ``None``.

    With ``probes=None`` both morphisms must have a finite domain and every
    row is compared.
    """
    if F.dom != G.dom or F.cod != G.cod:
        raise ShapeError("%s and %s are not parallel" % (F.label, G.label))
    if probes is None:
        probes = F.dom.index_set.members()
    for x in probes:
        if x not in F.dom.index_set:
            raise MembershipError("probe %r is not an index of the domain" % (x,))
        rf, rg = F.row(x), G.row(x)
        if rf == rg:
            continue
        for y in sorted(set(rf) | set(rg)):
            a, b = F.entry(x, y), G.entry(x, y)
            if a != b:
                return RowDifference(x, y, a, b)
    return None


def equal_on_rows(F: MatMorphism, G: MatMorphism, probes: Iterable[int] = None) -> bool:
    return first_difference(F, G, probes) is None


def constant_family(index_set: IndexSet, value: GradedObject) -> MatObject:
    return ConstantFamily(index_set, value)


def naturals_family(value: GradedObject) -> MatObject:
    """``value`` at every natural; the standard infinite-domain object."""
    return ConstantFamily(AllNaturals(), value)


def singleton_set(x: int) -> IndexSet:
    return Singleton(x)
