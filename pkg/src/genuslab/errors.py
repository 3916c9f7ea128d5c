"""Exception hierarchy shared by all genuslab modules."""


class GenusLabError(Exception):
    """Base class for all genuslab errors."""


class NonPositive(GenusLabError):
    pass


class NotSquarefree(GenusLabError):
    pass


class DegenerateRadicand(GenusLabError):
    pass


class NotFundamental(GenusLabError):
    pass


class PrecisionFailure(GenusLabError):
    pass


class OracleBoundExceeded(GenusLabError):
    pass


class EvenRadicand(GenusLabError):
    pass


class DegenerateField(GenusLabError):
    pass


class InternalInconsistency(GenusLabError):
    """A mathematical identity failed on valid data; always signals a bug."""


class NotTotallyPositive(GenusLabError):
    pass


class NotTotallyReal(GenusLabError):
    pass


class ShapeMismatch(GenusLabError):
    pass


class CacheConflict(GenusLabError):
    """Two cache records disagree about the same discriminant."""
