"""Exception types shared across the package."""


class OffsetGridError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(OffsetGridError):
    """Operands live in different dimensions."""


class SceneError(OffsetGridError):
    """A scene description violates its invariants."""


class RadiusError(OffsetGridError):
    """A radius argument is malformed or out of range."""


class VoxelOrderError(OffsetGridError):
    """No voxel ordering with the chained-intersection property exists.

    Carries a certificate: the prefix built so far and the voxels that could
    not be attached to it.
    """

    def __init__(self, message, ordered, remaining):
        super().__init__(message)
        self.ordered = ordered
        self.remaining = remaining


class SweepRangeError(OffsetGridError):
    """The top of a critical-radius sweep is not yet j-connected; a larger
    radius bound is required."""


class InternalCheckError(OffsetGridError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class UnknownSuiteError(OffsetGridError):
    """Requested verification suite does not exist."""
