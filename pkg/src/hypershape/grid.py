"""Dense n-dimensional binary images and the primitives the metrics need.

A :class:`GridImage` wraps a read-only ``uint8`` numpy array whose cells are
0 or 1.  All functions here are pure; images never change after
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from hypershape import _backend
from hypershape.errors import EmptyImage, HypershapeError, OutOfBounds

MAX_EXTENT = 64


@dataclass(frozen=True, eq=False)
class GridImage:
    """Binary occupancy image with n >= 2 axes, each of extent 1..64."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim < 2:
            raise HypershapeError(f"GridImage needs at least 2 axes, got {arr.ndim}")
        if any(s < 1 or s > MAX_EXTENT for s in arr.shape):
            raise HypershapeError(
                f"every axis extent must lie in 1..{MAX_EXTENT}, got {arr.shape}"
            )
        if arr.dtype != np.uint8:
            if not np.isin(arr, (0, 1)).all():
                raise HypershapeError("GridImage cells must be 0 or 1")
            arr = arr.astype(np.uint8)
        elif arr.size and arr.max() > 1:
            raise HypershapeError("GridImage cells must be 0 or 1")
        arr = np.ascontiguousarray(arr).copy()
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_flat(cls, shape, values) -> "GridImage":
        """Build from per-axis extents and a row-major flat cell list."""
        shape = tuple(int(s) for s in shape)
        flat = np.asarray(values)
        if flat.size != int(np.prod(shape)):
            raise HypershapeError(
                f"{flat.size} cells given for shape {shape} ({int(np.prod(shape))} needed)"
            )
        return cls(flat.reshape(shape))

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    def flat(self) -> list[int]:
        return self.data.reshape(-1).tolist()

    def __eq__(self, other):
        if not isinstance(other, GridImage):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.shape, self.data.tobytes()))


def _check_index(shape, c) -> tuple[int, ...]:
    c = tuple(int(v) for v in c)
    if len(c) != len(shape) or any(v < 0 or v >= s for v, s in zip(c, shape)):
        raise OutOfBounds(f"voxel {c} is outside grid of shape {tuple(shape)}")
    return c


def volume(b: GridImage) -> int:
    """Number of occupied cells."""
    return int(np.count_nonzero(b.data))


def center_of_mass(b: GridImage) -> tuple[int, ...]:
    """Mean coordinate of occupied cells, rounded half away from zero.

    Coordinates are non-negative, so rounding reduces to
    ``floor(sum / count + 1/2)``, done in integer arithmetic.
    """
    count, sums = _backend.coordinate_sums(b.data)
    if count == 0:
        raise EmptyImage("center of mass of an empty image")
    c = [(2 * int(s) + count) // (2 * count) for s in sums]
    return tuple(min(max(v, 0), extent - 1) for v, extent in zip(c, b.shape))


def distance_field(shape, c) -> np.ndarray:
    """Euclidean distance from every voxel of a grid to voxel ``c``."""
    shape = tuple(int(s) for s in shape)
    c = _check_index(shape, c)
    d2 = np.zeros(shape, dtype=np.float64)
    for axis, (extent, ci) in enumerate(zip(shape, c)):
        ax = (np.arange(extent, dtype=np.float64) - ci) ** 2
        view = [1] * len(shape)
        view[axis] = extent
        d2 = d2 + ax.reshape(view)
    return np.sqrt(d2)


def radius_and_flag(b: GridImage, c) -> tuple[int, bool]:
    """``ceil`` of the largest centre distance and whether it was clamped."""
    c = _check_index(b.shape, c)
    d2 = _backend.max_sq_distance(b.data, c)
    if d2 < 0:
        raise EmptyImage("radius of an empty image")
    r = isqrt(d2)
    if r * r < d2:
        r += 1
    if r == 0:
        return 1, True
    return r, False


def min_enclosing_radius(b: GridImage, c) -> int:
    """Ceiling of the maximum distance from ``c`` to any occupied cell.

    A single voxel sitting on ``c`` gives 0, which is clamped to 1; use
    :func:`radius_and_flag` to see whether that happened.
    """
    return radius_and_flag(b, c)[0]


def erode(b: GridImage) -> GridImage:
    """One pass of binary erosion with the face-adjacency cross.

    Cells outside the grid count as background, so any occupied cell on the
    grid boundary is removed.
    """
    return GridImage(_backend.erode(b.data))


def surface_count(b: GridImage) -> int:
    """Occupied cells removed by one erosion pass."""
    v = volume(b)
    if v == 0:
        raise EmptyImage("surface of an empty image")
    return v - volume(erode(b))
