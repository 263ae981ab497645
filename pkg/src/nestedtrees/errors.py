"""Exception hierarchy shared by every module in the package."""


class ChainError(Exception):
    """Base class for all package errors."""


class SpecError(ChainError, ValueError):
    """An invalid double nested graph description."""


class EmptySpec(SpecError):
    pass


class NonPositiveCell(SpecError):
    pass


class LengthMismatch(SpecError):
    pass


class ResourceLimit(ChainError):
    """Expansion would exceed the configured edge cap."""


class RecognitionError(ChainError):
    """The input graph is not a connected double nested graph."""

    reason = "Rejected"


class EmptyGraph(RecognitionError, ValueError):
    reason = "EmptyGraph"


class OddCycle(RecognitionError):
    reason = "OddCycle"


class Disconnected(RecognitionError):
    """Raised for disconnected inputs.  A disconnected graph has no spanning tree,
    so ``count`` is always 0."""

    reason = "Disconnected"
    count = 0


class NotNested(RecognitionError):
    reason = "NotNested"


class CellMismatch(RecognitionError):
    reason = "CellMismatch"


class ZeroPivot(ChainError, ArithmeticError):
    pass


class SingularInput(ChainError, ArithmeticError):
    pass


class TraceDivergence(ChainError, AssertionError):
    pass
