"""
Concrete strict braided monoidal Ab-categories with left duality and twist.

Objects are finite-dimensional graded vector spaces over Q given by an
*ordered* basis: ``GradedObject((d0, d1, ...))`` has one basis vector per
entry, of the listed degree.  The tensor product of ``a`` and ``b`` has the
basis ``a_i (x) b_j`` in lexicographic ``(i, j)`` order with degree
``a_i + b_j``.  Lexicographic order flattens associatively, so ``(a*b)*c``
and ``a*(b*c)`` are the same object *and* every tensor of morphisms agrees
on the nose; the unit ``(0,)`` is strict on both sides.

Morphisms are degree-preserving matrices with exact ``Fraction`` entries,
stored sparsely as ``column -> {row: value}`` (the image of each source basis
vector).  The per-degree block view required for reporting is available
through :attr:`GradedMorphism.blocks`.

Two instances are provided:

* :class:`GradedVect` - integer graded spaces, braiding ``q**(m*n)`` times the
  flip, twist ``q**(m*m)``.  Non-symmetric unless ``q`` is 1 or -1.
* :class:`PlainVect` - ungraded spaces (all degrees 0), flip braiding,
  trivial twist.  Used as the symmetric control.
"""

from __future__ import annotations

import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from matcat.errors import GradingError, ShapeError, UsageError

Scalar = Fraction


@dataclass(frozen=True)
class GradedObject:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.degrees, tuple):
            object.__setattr__(self, "degrees", tuple(self.degrees))
        for d in self.degrees:
            if not isinstance(d, int):
                raise TypeError("degrees must be integers, got %r" % (d,))

    @classmethod
    def from_grades(cls, grades: Mapping[int, int]) -> GradedObject:
        """Canonical object with ``grades[d]`` basis vectors in degree ``d``."""
        degs = []
        for d in sorted(grades):
            n = grades[d]
            if n < 0:
                raise ValueError("negative dimension")
            degs.extend([d] * n)
        return cls(tuple(degs))

    @cached_property
    def grades(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def dim_at(self, degree: int) -> int:
        return self.grades.get(degree, 0)

    @cached_property
    def positions(self) -> dict[int, tuple[int, ...]]:
        """Basis positions grouped by degree, in basis order."""
        out: dict[int, list[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return {d: tuple(out[d]) for d in sorted(out)}

    def tensor(self, other: GradedObject) -> GradedObject:
        return GradedObject(tuple(a + b for a in self.degrees for b in other.degrees))

    __mul__ = tensor

    def dual(self) -> GradedObject:
        return GradedObject(tuple(-d for d in self.degrees))

    def __repr__(self):
        return "G%r" % (self.degrees,)

    __str__ = __repr__


UNIT = GradedObject((0,))
ZERO_OBJECT = GradedObject(())


def tensor_obj(a: GradedObject, b: GradedObject) -> GradedObject:
    return a.tensor(b)


def dual_obj(a: GradedObject) -> GradedObject:
    return a.dual()


def _fmt(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return "%s/%s" % (x.numerator, x.denominator)


class GradedMorphism:
    """Degree-preserving linear map ``src -> dst`` with exact entries."""

    __slots__ = ("src", "dst", "_cols", "_hash")

    def __init__(self, src: GradedObject, dst: GradedObject,
                 cols: Mapping[int, Mapping[int, object]] = None):
        cols = cols or {}
        clean: dict[int, dict[int, Fraction]] = {}
        for c, img in cols.items():
            if not 0 <= c < src.dim:
                raise ShapeError("column %d out of range for %r" % (c, src))
            col = {}
            for r, v in img.items():
                if not 0 <= r < dst.dim:
                    raise ShapeError("row %d out of range for %r" % (r, dst))
                v = Fraction(v)
                if v == 0:
                    continue
                if dst.degrees[r] != src.degrees[c]:
                    raise GradingError(
                        "entry (%d, %d) maps degree %d to degree %d"
                        % (r, c, src.degrees[c], dst.degrees[r]))
                col[r] = v
            if col:
                clean[c] = col
        self._init(src, dst, clean)

    def _init(self, src, dst, cols):
        self.src = src
        self.dst = dst
        self._cols = cols
        self._hash = None

    @classmethod
    def _raw(cls, src, dst, cols) -> GradedMorphism:
        # cols must already be pruned and degree-correct
        f = cls.__new__(cls)
        f._init(src, dst, cols)
        return f

    @classmethod
    def from_blocks(cls, src: GradedObject, dst: GradedObject,
                    blocks: Mapping[int, Iterable[Iterable[object]]]) -> GradedMorphism:
        """Build from per-degree matrices of shape ``dst.dim_at(d) x src.dim_at(d)``."""
        cols: dict[int, dict[int, object]] = {}
        for d, matrix in blocks.items():
            rows = [list(r) for r in matrix]
            rpos = dst.positions.get(d, ())
            cpos = src.positions.get(d, ())
            if len(rows) != len(rpos) or any(len(r) != len(cpos) for r in rows):
                raise ShapeError("block for degree %d has wrong shape" % d)
            for i, r in enumerate(rows):
                for j, v in enumerate(r):
                    cols.setdefault(cpos[j], {})[rpos[i]] = v
        return cls(src, dst, cols)

    @property
    def columns(self) -> Mapping[int, Mapping[int, Fraction]]:
        return self._cols

    @property
    def blocks(self) -> dict[int, tuple[tuple[Fraction, ...], ...]]:
        """Dense per-degree blocks for every degree in both supports."""
        out = {}
        for d, cpos in self.src.positions.items():
            rpos = self.dst.positions.get(d)
            if not rpos:
                continue
            out[d] = tuple(
                tuple(self._cols.get(c, {}).get(r, Fraction(0)) for c in cpos)
                for r in rpos)
        return out

    def entry(self, r: int, c: int) -> Fraction:
        return self._cols.get(c, {}).get(r, Fraction(0))

    def nnz(self) -> int:
        return sum(len(col) for col in self._cols.values())

    @property
    def is_zero(self) -> bool:
        return not self._cols

    def __eq__(self, other):
        if not isinstance(other, GradedMorphism):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst
                and self._cols == other._cols)

    def __hash__(self):
        if self._hash is None:
            items = frozenset((c, frozenset(col.items())) for c, col in self._cols.items())
            self._hash = hash((self.src, self.dst, items))
        return self._hash

    def __repr__(self):
        return "GradedMorphism(%r -> %r, %s)" % (self.src, self.dst, self.block_str())

    def block_str(self) -> str:
        parts = []
        for d, m in self.blocks.items():
            rows = ", ".join("[" + " ".join(_fmt(v) for v in r) + "]" for r in m)
            parts.append("%d: %s" % (d, rows))
        return "{" + "; ".join(parts) + "}"

    def __matmul__(self, other: GradedMorphism) -> GradedMorphism:
        return compose_c(self, other)

    def __add__(self, other: GradedMorphism) -> GradedMorphism:
        return add_c(self, other)

    def __neg__(self) -> GradedMorphism:
        return scale_c(Fraction(-1), self)

    def __sub__(self, other: GradedMorphism) -> GradedMorphism:
        return add_c(self, -other)

    def __rmul__(self, k) -> GradedMorphism:
        return scale_c(Fraction(k), self)

    def tensor(self, other: GradedMorphism) -> GradedMorphism:
        return tensor_c(self, other)


def identity_c(a: GradedObject) -> GradedMorphism:
    one = Fraction(1)
    return GradedMorphism._raw(a, a, {i: {i: one} for i in range(a.dim)})


def zero_c(a: GradedObject, b: GradedObject) -> GradedMorphism:
    return GradedMorphism._raw(a, b, {})


def scale_c(k: Fraction, f: GradedMorphism) -> GradedMorphism:
    if k == 0:
        return zero_c(f.src, f.dst)
    return GradedMorphism._raw(
        f.src, f.dst, {c: {r: k * v for r, v in col.items()} for c, col in f._cols.items()})


def add_c(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    if f.src != g.src or f.dst != g.dst:
        raise ShapeError("cannot add %r -> %r and %r -> %r" % (f.src, f.dst, g.src, g.dst))
    cols = {c: dict(col) for c, col in f._cols.items()}
    for c, col in g._cols.items():
        acc = cols.setdefault(c, {})
        for r, v in col.items():
            s = acc.get(r, 0) + v
            if s:
                acc[r] = s
            else:
                acc.pop(r, None)
        if not acc:
            del cols[c]
    return GradedMorphism._raw(f.src, f.dst, cols)


def compose_c(g: GradedMorphism, f: GradedMorphism) -> GradedMorphism:
    """``g o f``; requires ``f.dst == g.src``."""
    if f.dst != g.src:
        raise ShapeError("cannot compose %r -> %r after %r -> %r"
                         % (g.src, g.dst, f.src, f.dst))
    gcols = g._cols
    cols = {}
    for c, img in f._cols.items():
        acc: dict[int, Fraction] = {}
        for k, a in img.items():
            gk = gcols.get(k)
            if gk is None:
                continue
            for r, b in gk.items():
                acc[r] = acc.get(r, 0) + b * a
        acc = {r: v for r, v in acc.items() if v}
        if acc:
            cols[c] = acc
    return GradedMorphism._raw(f.src, g.dst, cols)


def tensor_c(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    """Kronecker product in lexicographic basis order."""
    ns, nd = g.src.dim, g.dst.dim
    cols = {}
    gitems = list(g._cols.items())
    for c1, img1 in f._cols.items():
        for c2, img2 in gitems:
            col = {}
            for r1, a in img1.items():
                off = r1 * nd
                for r2, b in img2.items():
                    col[off + r2] = a * b
            cols[c1 * ns + c2] = col
    return GradedMorphism._raw(f.src.tensor(g.src), f.dst.tensor(g.dst), cols)


def tensor_many(*fs: GradedMorphism) -> GradedMorphism:
    out = fs[0]
    for f in fs[1:]:
        out = tensor_c(out, f)
    return out


def eval_c(a: GradedObject) -> GradedMorphism:
    """Evaluation ``a* (x) a -> I`` pairing matched basis vectors."""
    n = a.dim
    one = Fraction(1)
    return GradedMorphism._raw(a.dual().tensor(a), UNIT, {i * n + i: {0: one} for i in range(n)})


def coev_c(a: GradedObject) -> GradedMorphism:
    """Coevaluation ``I -> a (x) a*``."""
    n = a.dim
    one = Fraction(1)
    col = {i * n + i: one for i in range(n)}
    return GradedMorphism._raw(UNIT, a.tensor(a.dual()), {0: col} if col else {})


def dual_mor(f: GradedMorphism) -> GradedMorphism:
    """Transpose ``f*: dst* -> src*``."""
    cols: dict[int, dict[int, Fraction]] = {}
    for c, img in f._cols.items():
        for r, v in img.items():
            cols.setdefault(r, {})[c] = v
    return GradedMorphism._raw(f.dst.dual(), f.src.dual(), cols)


class BaseCategory(ABC):
    """Strict braided monoidal Ab-category with left duality and twist.

    The strict monoidal, additive and duality structure is shared by both
    instances; only the braiding and twist differ.
    """

    name: str = "base"
    graded: bool = True

    def check_object(self, a: GradedObject) -> GradedObject:
        return a

    @abstractmethod
    def braid(self, a: GradedObject, b: GradedObject, inverse: bool = False) -> GradedMorphism:
        """``c_{a,b}: a(x)b -> b(x)a``, or its inverse ``b(x)a -> a(x)b``."""

    @abstractmethod
    def twist(self, a: GradedObject) -> GradedMorphism:
        ...

    @property
    @abstractmethod
    def is_symmetric(self) -> bool:
        ...

    # shared structure, exposed as methods for convenience
    unit = UNIT
    tensor_obj = staticmethod(tensor_obj)
    identity = staticmethod(identity_c)
    zero = staticmethod(zero_c)
    add = staticmethod(add_c)
    compose = staticmethod(compose_c)
    tensor = staticmethod(tensor_c)
    dual_obj = staticmethod(dual_obj)
    eval = staticmethod(eval_c)
    coev = staticmethod(coev_c)
    dual_mor = staticmethod(dual_mor)

    def objects(self, max_degree: int, max_dim: int) -> list[GradedObject]:
        """Every object with total dimension <= max_dim and |degree| <= max_degree."""
        degs = range(-max_degree, max_degree + 1) if self.graded else (0,)
        out = []
        for n in range(max_dim + 1):
            for t in itertools.product(degs, repeat=n):
                out.append(GradedObject(t))
        return out


class GradedVect(BaseCategory):
    """Z-graded spaces with bicharacter braiding ``q**(m*n)`` and twist ``q**(m*m)``."""

    graded = True

    def __init__(self, q=2):
        q = Fraction(q)
        if q == 0:
            raise UsageError("braiding parameter q must be nonzero")
        self.q = q
        self.name = "graded(q=%s)" % _fmt(q)
        self._pow: dict[int, Fraction] = {}

    def __repr__(self):
        return "GradedVect(q=%s)" % _fmt(self.q)

    @property
    def is_symmetric(self) -> bool:
        return self.q in (1, -1)

    def qpow(self, k: int) -> Fraction:
        v = self._pow.get(k)
        if v is None:
            v = self._pow[k] = self.q ** k
        return v

    def braid(self, a, b, inverse=False):
        na, nb = a.dim, b.dim
        cols = {}
        if not inverse:
            for i, da in enumerate(a.degrees):
                for j, db in enumerate(b.degrees):
                    cols[i * nb + j] = {j * na + i: self.qpow(da * db)}
            return GradedMorphism._raw(a.tensor(b), b.tensor(a), cols)
        for i, da in enumerate(a.degrees):
            for j, db in enumerate(b.degrees):
                cols[j * na + i] = {i * nb + j: self.qpow(-da * db)}
        return GradedMorphism._raw(b.tensor(a), a.tensor(b), cols)

    def twist(self, a):
        return GradedMorphism._raw(a, a, {i: {i: self.qpow(d * d)} for i, d in enumerate(a.degrees)})


class PlainVect(BaseCategory):
    """Ungraded spaces with the flip braiding; the symmetric control."""

    graded = False
    name = "symmetric"
    is_symmetric = True

    def __repr__(self):
        return "PlainVect()"

    def check_object(self, a):
        if any(a.degrees):
            raise GradingError("plain vector spaces live in degree 0, got %r" % (a,))
        return a

    def braid(self, a, b, inverse=False):
        self.check_object(a)
        self.check_object(b)
        one = Fraction(1)
        na, nb = a.dim, b.dim
        if not inverse:
            cols = {i * nb + j: {j * na + i: one} for i in range(na) for j in range(nb)}
            return GradedMorphism._raw(a.tensor(b), b.tensor(a), cols)
        cols = {j * na + i: {i * nb + j: one} for i in range(na) for j in range(nb)}
        return GradedMorphism._raw(b.tensor(a), a.tensor(b), cols)

    def twist(self, a):
        self.check_object(a)
        return identity_c(a)


def make_base(instance: str = "graded", q=2) -> BaseCategory:
    if instance == "graded":
        return GradedVect(q)
    if instance == "symmetric":
        return PlainVect()
    raise UsageError("unknown base instance %r" % (instance,))


def random_scalar(rng: random.Random) -> Fraction:
    num = rng.randint(-3, 3)
    den = rng.choice((1, 1, 1, 2, 3))
    return Fraction(num, den)


def random_morphism(rng: random.Random, src: GradedObject, dst: GradedObject,
                    density: float = 0.7) -> GradedMorphism:
    """Random degree-preserving map with small rational entries."""
    cols: dict[int, dict[int, Fraction]] = {}
    for d, cpos in src.positions.items():
        for r in dst.positions.get(d, ()):
            for c in cpos:
                if rng.random() < density:
                    cols.setdefault(c, {})[r] = random_scalar(rng)
    return GradedMorphism(src, dst, cols)


def random_object(rng: random.Random, base: BaseCategory, max_degree: int, max_dim: int,
                  min_dim: int = 0) -> GradedObject:
    n = rng.randint(min_dim, max_dim)
    if not base.graded:
        return GradedObject((0,) * n)
    return GradedObject(tuple(rng.randint(-max_degree, max_degree) for _ in range(n)))
