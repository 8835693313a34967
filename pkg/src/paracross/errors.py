"""Exception types shared across the package."""


class SectorError(ValueError):
    """Argument sits on a Stokes line and no side was specified."""


class BranchError(ValueError):
    """Argument requires a branch choice (negative real axis) that was not supplied."""


class ConvergenceError(RuntimeError):
    """A series, quadrature, or limit failed to converge within its budget."""


class MatchingError(RuntimeError):
    """A 2x2 matching solve is degenerate (Wronskian below threshold)."""


class StepSizeError(RuntimeError):
    """Adaptive integration step size underflowed or the state became non-finite."""
