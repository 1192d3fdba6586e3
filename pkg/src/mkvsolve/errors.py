"""Exception types shared across the package."""


class MkvError(Exception):
    """Base class for all package errors."""


class EmptySupport(MkvError):
    """A measure was built with no atoms."""


class NegativeWeight(MkvError):
    """A measure weight is negative."""


class DimensionMismatch(MkvError):
    """Operands live in different spatial dimensions."""


class InvalidAlpha(MkvError):
    """Holder exponent outside (0, 1]."""


class GridMismatch(MkvError):
    """Time or space grids of the operands do not line up."""


class DegenerateDiffusion(MkvError):
    """The diffusion matrix C = Sigma Sigma* is not positive definite."""


class MassLeak(MkvError):
    """Density propagation lost more mass through the boundary than allowed."""


class OutOfDomain(MkvError):
    """A point or atom falls outside the kernel's spatial grid."""


class ReversedTimes(MkvError):
    """Pull-back called with t >= s."""


class DegenerateInput(MkvError):
    """An operation received coinciding inputs where distinct ones are required."""


class ConfigError(MkvError):
    """Scenario configuration failed to parse or validate."""


class ParseError(MkvError):
    """A measure file could not be parsed."""


class MaxIterationsExceeded(MkvError):
    """Picard iteration hit the iteration cap before reaching tolerance.

    Carries the last iterate and the diagnostics collected so far.
    """

    def __init__(self, message, flow=None, diagnostics=None):
        super().__init__(message)
        self.flow = flow
        self.diagnostics = diagnostics
