"""Exact computations in the matrix category over a braided base and its bialgebra h-bar."""

from matcat.base import (
    UNIT, GradedMorphism, GradedObject, GradedVect, PlainVect, coev_c, compose_c,
    dual_mor, eval_c, identity_c, make_base, tensor_c, zero_c)
from matcat.bialgebra import (
    GradedEncoding, HBar, PlainEncoding, gamma_big as Gamma, gamma_dual, verify_suite)
from matcat.category import (
    UNIT_OBJECT, Family, MatMorphism, MatObject, TensorObject, assoc, braid_m, coev_m,
    coproduct, copair, embed_mor, embed_obj, equal_on_rows, eval_m, mat_add, mat_compose,
    mat_id, tensor_mor_m, twist_m, units)
from matcat.coherence import (
    Leaf, Node, TypedMor, UnitLeaf, coherence_iso, doteq, realize)
from matcat.errors import (
    ClosureError, CoherenceError, DisjointnessError, DualityObstruction, GradingError,
    MatcatError, MembershipError, ShapeError, UsageError)
from matcat.harness import RunConfig, eval_morphism, run_suite
from matcat.index import AllNaturals, DiagImage, FiniteSet, PairImage, Singleton, pair, unpair

__version__ = "0.1.0"
