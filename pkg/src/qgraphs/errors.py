"""Exception types raised across the package."""


class QGraphError(ValueError):
    """Base class for all validation failures."""


class NotAState(QGraphError):
    pass


class NotFaithful(QGraphError):
    pass


class NotDeltaForm(QGraphError):
    pass


class OwnerMismatch(QGraphError):
    pass


class ArityMismatch(QGraphError):
    pass


class TooLarge(QGraphError):
    pass


class NotSchurIdempotent(QGraphError):
    pass


class NotReal(QGraphError):
    pass


class NotProjection(QGraphError):
    pass


class NotBimodule(QGraphError):
    pass


class NotEigenvalue(QGraphError):
    pass


class NotSelfAdjoint(QGraphError):
    pass


class HypothesesNotMet(QGraphError):
    """A theorem-backed routine was called outside the theorem's hypotheses.

    ``failed`` lists the names of the hypotheses that do not hold.
    """

    def __init__(self, failed, message=None):
        self.failed = list(failed)
        super().__init__(message or "hypotheses not met: " + ", ".join(self.failed))


class NotUnital(QGraphError):
    pass


class NotMultiplicative(QGraphError):
    pass


class NotStar(QGraphError):
    pass


class ParamOutOfRange(QGraphError):
    pass
