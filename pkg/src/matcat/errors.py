"""Exception hierarchy shared by every layer of the engine."""


class MatcatError(Exception):
    """Base class for all engine errors."""


class ShapeError(MatcatError):
    """Domain/codomain mismatch between composed or added morphisms."""


class GradingError(MatcatError):
    """A matrix entry connects basis vectors of different degrees."""


class MembershipError(MatcatError):
    """An index is not a member of the index set it was used with."""


class DisjointnessError(MatcatError):
    """Coproduct summands have overlapping index sets."""


class DualityObstruction(MatcatError):
    """Coevaluation requested on an object with infinite index set.

    The would-be coevaluation has a row with infinitely many nonzero
    entries, so it is not a row-finite morphism.
    """


class CoherenceError(MatcatError):
    """Two tensor words do not have the same non-unit frontier."""


class ClosureError(MatcatError):
    """An index lies outside the encoded object set."""


class UsageError(MatcatError):
    """Invalid configuration or unconstructible expression."""
