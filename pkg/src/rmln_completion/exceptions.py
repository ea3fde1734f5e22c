"""Exception hierarchy for the completion library."""


class RMLNError(Exception):
    """Base class for library errors."""


class DimensionMismatchError(RMLNError, ValueError):
    """Operands disagree in shape, or a matrix is not two-dimensional."""


class NonFiniteError(RMLNError, ValueError):
    """A matrix carries NaN or Inf entries."""


class DecompositionError(RMLNError):
    """The SVD routine failed to converge."""


class SurrogateDomainError(RMLNError, ValueError):
    """A surrogate or weight was evaluated outside its domain."""


class MaskError(RMLNError, ValueError):
    """Invalid observation mask or mask specification."""


class SolverConfigError(RMLNError, ValueError):
    """Invalid solver inputs detected at call time."""


class ImageFormatError(RMLNError, ValueError):
    """Unreadable or unsupported raster image."""


class PlanFileError(RMLNError, ValueError):
    """Malformed experiment plan file."""
