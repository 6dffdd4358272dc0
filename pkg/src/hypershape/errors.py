"""Exception hierarchy shared by every module."""


class HypershapeError(ValueError):
    """Base class for all errors raised by hypershape."""


class EmptyImage(HypershapeError):
    """An operation needed at least one occupied voxel."""


class OutOfBounds(HypershapeError):
    """A voxel index lies outside the grid."""


class DegenerateAxis(HypershapeError):
    """A binning axis has a zero-width range."""


class DimensionTooLarge(HypershapeError):
    """The requested grid would exceed the configured cell budget."""


class UnsupportedShape(HypershapeError):
    """No closed form or membership test exists for the requested shape."""


class EmptyInput(HypershapeError):
    """A summary was requested over zero values."""
