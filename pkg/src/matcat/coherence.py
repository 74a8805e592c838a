"""
Tensor words and the coherence relation.

A tensor word is a binary tree whose leaves are objects or the unit
placeholder.  :func:`coherence_iso` builds the canonical isomorphism between
two words with the same non-unit frontier using only identities, associators,
unitors and their inverses, closed under tensor and composition:

1. strip every unit leaf with ``L``/``R``, innermost first;
2. reassociate to the unit-free left comb with ``A^{-1}``;
3. compose with the inverse of the target word's normalization.

``F ~ G`` (:func:`doteq`) holds when ``G = X o F o Y`` for the canonical
isomorphisms ``X`` between the codomain words and ``Y`` between the domain
words; it is decided row-by-row on probe indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from matcat.category import (
    UNIT_OBJECT, MatMorphism, MatObject, TensorObject, assoc, first_difference,
    mat_compose, mat_id, tensor_mor_m, units)
from matcat.errors import CoherenceError, ShapeError
from matcat.index import IndexSet


@dataclass(frozen=True)
class Leaf:
    obj: MatObject

    def __repr__(self):
        return "Leaf(%r)" % (self.obj,)


@dataclass(frozen=True)
class UnitLeaf:
    def __repr__(self):
        return "I"


@dataclass(frozen=True)
class Node:
    left: "TensorWord"
    right: "TensorWord"

    def __repr__(self):
        return "(%r (x) %r)" % (self.left, self.right)


TensorWord = Union[Leaf, UnitLeaf, Node]
UNIT_LEAF = UnitLeaf()


def word(*parts) -> TensorWord:
    """Left-nested word from objects, words, or nested tuples.

    ``word(f, g, h)`` is ``((f (x) g) (x) h)``; a tuple argument is a
    parenthesized group; ``None`` stands for the unit.
    """
    def conv(p):
        if isinstance(p, (Leaf, UnitLeaf, Node)):
            return p
        if p is None:
            return UNIT_LEAF
        if isinstance(p, tuple):
            return word(*p)
        return Leaf(p)

    ws = [conv(p) for p in parts]
    if not ws:
        return UNIT_LEAF
    out = ws[0]
    for w in ws[1:]:
        out = Node(out, w)
    return out


def realize(w: TensorWord) -> MatObject:
    if isinstance(w, Leaf):
        return w.obj
    if isinstance(w, UnitLeaf):
        return UNIT_OBJECT
    return TensorObject(realize(w.left), realize(w.right))


def frontier(w: TensorWord) -> tuple[MatObject, ...]:
    """Non-unit leaves, left to right."""
    if isinstance(w, Leaf):
        return (w.obj,)
    if isinstance(w, UnitLeaf):
        return ()
    return frontier(w.left) + frontier(w.right)


def word_shape(w: TensorWord) -> Union[IndexSet, tuple]:
    """Nested pair of leaf index sets, usable with ``decode_word_index``."""
    if isinstance(w, Node):
        return (word_shape(w.left), word_shape(w.right))
    return realize(w).index_set


@dataclass
class TypedMor:
    """Morphism together with the words typing its domain and codomain."""

    dom_word: TensorWord
    cod_word: TensorWord
    mor: MatMorphism

    def __post_init__(self):
        if realize(self.dom_word) != self.mor.dom:
            raise ShapeError("domain word does not realize the domain of %s" % self.mor.label)
        if realize(self.cod_word) != self.mor.cod:
            raise ShapeError("codomain word does not realize the codomain of %s" % self.mor.label)

    def __matmul__(self, other: TypedMor) -> TypedMor:
        return TypedMor(other.dom_word, self.cod_word, mat_compose(self.mor, other.mor))

    def tensor(self, other: TypedMor) -> TypedMor:
        return TypedMor(Node(self.dom_word, other.dom_word), Node(self.cod_word, other.cod_word),
                        tensor_mor_m(self.mor, other.mor))


def typed(mor: MatMorphism, dom_word: TensorWord = None, cod_word: TensorWord = None) -> TypedMor:
    """Attach words; a missing word defaults to a single leaf."""
    return TypedMor(dom_word if dom_word is not None else Leaf(mor.dom),
                    cod_word if cod_word is not None else Leaf(mor.cod), mor)


def typed_id(w: TensorWord) -> TypedMor:
    return TypedMor(w, w, mat_id(realize(w)))


# An isomorphism is carried as (forward, inverse, target word); every step
# below builds both directions from generators only.

def _iso_id(w):
    m = mat_id(realize(w))
    return m, m, w


def _then(first, second, log):
    f1, i1, _ = first
    f2, i2, w = second
    return mat_compose(f2, f1), mat_compose(i1, i2), w


def _strip_units(w, log):
    """Iso from ``w`` to a word with no unit leaves (or the bare unit)."""
    if not isinstance(w, Node):
        return _iso_id(w)
    fl, il, wl = _strip_units(w.left, log)
    fr, ir, wr = _strip_units(w.right, log)
    step = (tensor_mor_m(fl, fr), tensor_mor_m(il, ir), Node(wl, wr))
    if isinstance(wl, UnitLeaf):
        obj = realize(wr)
        log.append(("L", obj))
        return _then(step, (units(obj, "left"), units(obj, "left", inverse=True), wr), log)
    if isinstance(wr, UnitLeaf):
        obj = realize(wl)
        log.append(("R", obj))
        return _then(step, (units(obj, "right"), units(obj, "right", inverse=True), wl), log)
    return step


def _is_comb(w):
    while isinstance(w, Node):
        if isinstance(w.right, Node):
            return False
        w = w.left
    return True


def _merge_combs(c, d, log):
    """Iso ``c (x) d -> comb`` where ``c`` and ``d`` are unit-free left combs."""
    if not isinstance(d, Node):
        return _iso_id(Node(c, d))
    # c (x) (d1 (x) l)  --A^-1-->  (c (x) d1) (x) l
    oc, od, ol = realize(c), realize(d.left), realize(d.right)
    log.append(("A^-1", oc, od, ol))
    step = (assoc(oc, od, ol, inverse=True), assoc(oc, od, ol), Node(Node(c, d.left), d.right))
    fm, im, wm = _merge_combs(c, d.left, log)
    lid = mat_id(ol)
    rest = (tensor_mor_m(fm, lid), tensor_mor_m(im, lid), Node(wm, d.right))
    return _then(step, rest, log)


def _to_comb(w, log):
    """Iso from a unit-free word to its left comb."""
    if not isinstance(w, Node) or _is_comb(w):
        return _iso_id(w)
    fl, il, cl = _to_comb(w.left, log)
    fr, ir, cr = _to_comb(w.right, log)
    step = (tensor_mor_m(fl, fr), tensor_mor_m(il, ir), Node(cl, cr))
    return _then(step, _merge_combs(cl, cr, log), log)


def normalize(w: TensorWord, log: list = None):
    """``(iso, inverse, normal_word)`` taking ``w`` to the unit-free left comb."""
    log = [] if log is None else log
    stripped = _strip_units(w, log)
    return _then(stripped, _to_comb(stripped[2], log), log)


def coherence_iso(src: TensorWord, dst: TensorWord, log: list = None) -> TypedMor:
    """Canonical isomorphism ``realize(src) -> realize(dst)``.

    ``log`` (optional) collects the generators used, for debugging.
    """
    fs, ft = frontier(src), frontier(dst)
    if len(fs) != len(ft) or any(a != b for a, b in zip(fs, ft)):
        raise CoherenceError("words have different frontiers: %r vs %r" % (fs, ft))
    log = [] if log is None else log
    fwd_s, _, ns = normalize(src, log)
    _, inv_d, nd = normalize(dst, log)
    assert realize(ns) == realize(nd)
    return TypedMor(src, dst, mat_compose(inv_d, fwd_s))


def doteq_difference(F: TypedMor, G: TypedMor, probes: Iterable[int]):
    """Witness that ``X o F o Y`` and ``G`` differ on a probe row, or ``None``."""
    X = coherence_iso(F.cod_word, G.cod_word)
    Y = coherence_iso(G.dom_word, F.dom_word)
    lhs = mat_compose(X.mor, mat_compose(F.mor, Y.mor))
    return first_difference(lhs, G.mor, probes)


def doteq(F: TypedMor, G: TypedMor, probes: Iterable[int]) -> bool:
    """Decide ``F ~ G`` on the given rows of ``G``'s domain."""
    return doteq_difference(F, G, probes) is None
