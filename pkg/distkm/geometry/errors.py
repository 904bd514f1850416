class GeometryError(Exception):
    """Base class for errors raised by the geometry routines."""


class DimensionMismatchError(GeometryError):
    """Raised when points of different dimensions are combined."""


class EmptyCenterSetError(GeometryError):
    """Raised when a cost is evaluated against an empty set of centers."""


class NonFiniteCoordinateError(GeometryError):
    """Raised when a point has a NaN or an infinite coordinate."""
