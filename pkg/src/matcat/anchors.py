"""
Anchor table: every check id mapped to the identity it verifies.

A report's ``paper_anchor`` field is a key of :data:`ANCHORS`; the value
states the identity in words.  Keys are stable and suitable for CI filters.
"""

from __future__ import annotations

ANCHORS: dict[str, str] = {
    # base category
    "base.category": "composition in the base is associative and unital",
    "base.abelian": "hom-sets are abelian groups; composition and tensor are bilinear",
    "base.strict": "tensor is strictly associative and unital on objects and morphisms",
    "base.hexagon": "both hexagon identities for the braiding in a strict category",
    "base.braid-inverse": "the braiding is invertible and trivial against the unit",
    "base.naturality": "braiding and twist are natural",
    "base.zigzag": "left duality zig-zag identities",
    "base.twist-balance": "twist balance against the double braiding and compatibility with duals",
    "base.symmetry": "double braiding is the identity exactly for the symmetric instances",
    # matrix category
    "matcat.identity": "identity morphisms are neutral for matrix composition",
    "matcat.composition": "matrix composition is associative",
    "matcat.abelian": "hom-sets are abelian groups with bilinear composition",
    "matcat.tensor-functor": "tensor of matrix morphisms is functorial",
    "matcat.tensor-identity": "tensor of identities is the identity",
    "matcat.pentagon": "associator satisfies the pentagon axiom",
    "matcat.triangle": "associator and unitors satisfy the triangle axiom",
    "matcat.associator": "associator is a natural isomorphism",
    "matcat.unitors": "left and right unitors are natural isomorphisms",
    "matcat.hexagon": "matrix braiding satisfies both hexagons with associators",
    "matcat.braid": "matrix braiding is a natural isomorphism",
    "matcat.twist": "matrix twist is natural and balanced",
    "matcat.coproduct": "family over disjoint index sets is a coproduct with its injections",
    "matcat.direct-sum": "finite object is the direct sum of its singleton restrictions",
    "matcat.embedding": "base category embeds as a full tensor subcategory on singletons",
    "matcat.duality-obstruction": "coevaluation of an infinite object is not row-finite",
    "matcat.finite-duality": "finite objects have duals; zig-zags hold up to coherence",
    "matcat.dual-functor": "transpose is contravariant and commutes with the twist",
    # coherence
    "coherence.identity": "canonical isomorphism of a word with itself is the identity",
    "coherence.confluence": "canonical isomorphisms compose along chains of words",
    "coherence.frontier": "words with different frontiers have no canonical isomorphism",
    "coherence.doteq": "equality up to coherence is an equivalence compatible with composition and tensor",
    # bialgebra
    "bialgebra.gamma-relation": "Gamma_{x,y(x)z}(Gamma_{y,z}(x)id) = Gamma_{x(x)y,z}(id(x)Gamma_{x,y})",
    "bialgebra.gamma-evaluation": "d_{x(x)y} Gamma_{x,y} = d_y (x) d_x",
    "bialgebra.gamma-unit": "Gamma_{a,I} and Gamma_{I,a} are identities",
    "bialgebra.double-coevaluation": "two ways of inserting a second coevaluation agree",
    "bialgebra.index-product": "index multiplication is associative with unit x0",
    "bialgebra.support": "mu, eta, delta and epsilon have singleton row supports",
    "bialgebra.associativity": "mu(mu(x)Id) equals mu(Id(x)mu) up to coherence",
    "bialgebra.tensor-square": "the product mu_hat on h-bar (x) h-bar is associative up to coherence",
    "bialgebra.unit": "mu(eta(x)Id) and mu(Id(x)eta) equal Id up to coherence",
    "bialgebra.coassociativity": "(delta(x)Id)delta equals (Id(x)delta)delta up to the associator",
    "bialgebra.counit": "(epsilon(x)Id)delta and (Id(x)epsilon)delta equal Id exactly after unitors",
    "bialgebra.compatibility": "mu_hat(delta(x)delta) equals delta mu up to coherence",
    "bialgebra.counit-multiplicative": "epsilon mu equals epsilon(x)epsilon up to the unit coherence",
    "bialgebra.counit-unit": "epsilon eta is the identity of the unit",
    "bialgebra.module": "counit action makes embedded base objects modules",
}

#: check id -> anchor key
CHECK_ANCHORS: dict[str, str] = {
    "base.composition_laws": "base.category",
    "base.abelian_bilinear": "base.abelian",
    "base.strict_tensor": "base.strict",
    "base.hexagons": "base.hexagon",
    "base.braid_invertible": "base.braid-inverse",
    "base.braid_twist_naturality": "base.naturality",
    "base.zigzag": "base.zigzag",
    "base.twist_balance": "base.twist-balance",
    "base.symmetric_control": "base.symmetry",
    "base.non_symmetric": "base.symmetry",
    "matcat.identity_laws": "matcat.identity",
    "matcat.composition_associative": "matcat.composition",
    "matcat.abelian_bilinear": "matcat.abelian",
    "matcat.tensor_functorial": "matcat.tensor-functor",
    "matcat.tensor_identities": "matcat.tensor-identity",
    "matcat.pentagon": "matcat.pentagon",
    "matcat.triangle": "matcat.triangle",
    "matcat.associator_invertible": "matcat.associator",
    "matcat.associator_natural": "matcat.associator",
    "matcat.unitors_natural": "matcat.unitors",
    "matcat.unitors_invertible": "matcat.unitors",
    "matcat.hexagon_first": "matcat.hexagon",
    "matcat.hexagon_second": "matcat.hexagon",
    "matcat.braid_natural": "matcat.braid",
    "matcat.braid_invertible": "matcat.braid",
    "matcat.twist_balance": "matcat.twist",
    "matcat.twist_natural": "matcat.twist",
    "matcat.coproduct_universal": "matcat.coproduct",
    "matcat.coproduct_disjointness": "matcat.coproduct",
    "matcat.direct_sum_decomposition": "matcat.direct-sum",
    "matcat.embedding_functor": "matcat.embedding",
    "matcat.embedding_unit": "matcat.embedding",
    "matcat.duality_obstruction": "matcat.duality-obstruction",
    "matcat.finite_zigzag": "matcat.finite-duality",
    "matcat.dual_functor_twist": "matcat.dual-functor",
    "coherence.coherence_identity": "coherence.identity",
    "coherence.coherence_confluence": "coherence.confluence",
    "coherence.coherence_frontier": "coherence.frontier",
    "coherence.doteq_equivalence": "coherence.doteq",
    "bialgebra.gamma_relation": "bialgebra.gamma-relation",
    "bialgebra.gamma_evaluation": "bialgebra.gamma-evaluation",
    "bialgebra.gamma_unit": "bialgebra.gamma-unit",
    "bialgebra.double_coevaluation": "bialgebra.double-coevaluation",
    "bialgebra.index_product": "bialgebra.index-product",
    "bialgebra.singleton_support": "bialgebra.support",
    "bialgebra.associativity": "bialgebra.associativity",
    "bialgebra.tensor_square_associativity": "bialgebra.tensor-square",
    "bialgebra.unit_laws": "bialgebra.unit",
    "bialgebra.coassociativity": "bialgebra.coassociativity",
    "bialgebra.counit_laws": "bialgebra.counit",
    "bialgebra.compatibility": "bialgebra.compatibility",
    "bialgebra.counit_multiplicative": "bialgebra.counit-multiplicative",
    "bialgebra.counit_unit": "bialgebra.counit-unit",
    "bialgebra.module_action": "bialgebra.module",
}


def anchor_for(check_id: str) -> str:
    return CHECK_ANCHORS[check_id]
