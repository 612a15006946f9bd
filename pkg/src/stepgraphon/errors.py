"""Exception types raised by input validation and numerical routines."""


class StepGraphonError(Exception):
    """Base class for all package-specific errors."""


class NonSquareError(StepGraphonError, ValueError):
    """Matrix input is not square."""


class OutOfRangeError(StepGraphonError, ValueError):
    """Entry or parameter lies outside its permitted interval."""


class AsymmetryTooLargeError(StepGraphonError, ValueError):
    """Matrix deviates from symmetry by more than the allowed tolerance."""


class BlockBoundaryMisalignedError(StepGraphonError, ValueError):
    """Block proportions do not land on grid cell boundaries."""


class BadParametersError(StepGraphonError, ValueError):
    """Family parameters are malformed."""


class LengthMismatchError(StepGraphonError, ValueError):
    """Vector length does not match the grid resolution."""


class ZeroFunctionError(StepGraphonError, ValueError):
    """Operation requires a function that is not identically zero."""


class NotConnectedError(StepGraphonError, ValueError):
    """Kernel support (or graph) is disconnected."""


class NoConvergenceError(StepGraphonError, RuntimeError):
    """Iteration budget exhausted before reaching the residual target."""


class SizeTooLargeError(StepGraphonError, ValueError):
    """Dense routine called above its supported size."""


class TooLargeError(StepGraphonError, ValueError):
    """Exhaustive enumeration requested above its size bound."""


class EmptyPartitionError(StepGraphonError, ValueError):
    """Both sides of a signed partition are empty."""


class NotLooplessError(StepGraphonError, ValueError):
    """Graph has a positive diagonal weight where loops are forbidden."""


class ZeroFractionalMassError(StepGraphonError, ValueError):
    """Fractional bipartition has zero total mass."""


class GridMisalignedError(StepGraphonError, ValueError):
    """Grid resolution is incompatible with the requested construction."""


class DegreeFloorViolatedError(StepGraphonError, ValueError):
    """Minimum degree falls below the required floor."""


class IoError(StepGraphonError, OSError):
    """File could not be read or written."""


class ParseError(StepGraphonError, ValueError):
    """Input file is not valid JSON or misses required fields."""
