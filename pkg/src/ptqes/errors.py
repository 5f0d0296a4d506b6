"""Exception hierarchy shared by all modules."""


class PtqesError(Exception):
    """Base class for every error raised by the package."""


class NumericalFailure(PtqesError):
    """A computation could not produce a trustworthy number (CLI exit code 2)."""


class NoSignChange(NumericalFailure):
    pass


class DegenerateInput(PtqesError, ValueError):
    pass


class NonFiniteState(NumericalFailure):
    pass


class NonRealFixedPoint(PtqesError, ValueError):
    pass


class NoReturn(NumericalFailure):
    """Trajectory never came back to its starting section."""


class SingularMap(PtqesError, ValueError):
    pass


class BadParams(PtqesError, ValueError):
    pass


class NoRoot(NumericalFailure):
    pass


class NonRealDetected(NumericalFailure):
    """A negative Jacobi off-diagonal square: roots may leave the real axis."""
