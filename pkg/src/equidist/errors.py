"""Exception hierarchy shared by all modules."""


class EquidistError(Exception):
    """Base class. The CLI maps these to exit code 2 (precondition failure)."""


class SpecError(EquidistError, ValueError):
    """Malformed function or focal-set description."""

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{message} (field: {field!r})"
        super().__init__(message)


class ConvergenceError(EquidistError, RuntimeError):
    """An iterative method ran out of budget.

    ``lower`` and ``upper`` carry the best bracket (or bound pair) reached.
    """

    def __init__(self, message, lower=None, upper=None):
        self.lower = lower
        self.upper = upper
        super().__init__(f"{message} (best bounds: {lower!r}, {upper!r})")


class BreakpointError(EquidistError, ValueError):
    def __init__(self, breakpoint):
        self.breakpoint = breakpoint
        super().__init__(f"derivative undefined at breakpoint x={breakpoint!r}")


class CriticalParameterError(EquidistError, ValueError):
    """alpha(t) >= R: the closed-form parameterization has a pole here."""


class DisjointnessError(EquidistError, ValueError):
    """The epigraph meets the ball/sphere."""


class NoBasePointError(EquidistError, ValueError):
    """No point of K lies strictly below the graph of f."""

    def __init__(self, message="no base point below graph"):
        super().__init__(message)


class GridTooCoarseError(EquidistError, RuntimeError):
    pass


class MonotonicityError(EquidistError, AssertionError):
    """x(t) failed to increase strictly along a traced grid."""


class NotParameterizationError(EquidistError, ValueError):
    """Samples cannot come from an equidistant parameterization."""


class ContainmentError(EquidistError, AssertionError):
    """A slit-admissible ray parameter was found critical for f itself."""


class InsideFocalSphereError(EquidistError, ValueError):
    pass


class PreconditionError(EquidistError, ValueError):
    pass
