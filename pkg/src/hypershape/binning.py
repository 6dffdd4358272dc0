"""Point clouds to binary images via an equal-width n-D histogram."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from hypershape import _backend
from hypershape.errors import DegenerateAxis, DimensionTooLarge, HypershapeError
from hypershape.grid import MAX_EXTENT, GridImage

DEFAULT_CELL_BUDGET = 1 << 24


def cell_budget() -> int:
    """Largest allowed ``bins ** n``; ``HYPERSHAPE_CELL_BUDGET`` overrides."""
    raw = os.environ.get("HYPERSHAPE_CELL_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise HypershapeError(f"HYPERSHAPE_CELL_BUDGET must be an integer, got {raw!r}")
    return DEFAULT_CELL_BUDGET


def check_budget(bins: int, n: int) -> None:
    cells = bins**n
    budget = cell_budget()
    if cells > budget:
        raise DimensionTooLarge(
            f"{bins} bins in {n} dimensions is {cells} cells, above the budget of {budget}"
        )


@dataclass(frozen=True, eq=False)
class PointCloud:
    """``m`` observations in ``n >= 2`` dimensions, all finite."""

    values: np.ndarray
    column_names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.ndim != 2:
            raise HypershapeError(f"point cloud must be a 2-D matrix, got shape {v.shape}")
        m, n = v.shape
        if m < 1:
            raise HypershapeError("point cloud has no rows")
        if n < 2:
            raise HypershapeError(f"point cloud needs at least 2 columns, got {n}")
        if not np.isfinite(v).all():
            raise HypershapeError("point cloud contains non-finite values")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)
        if self.column_names is not None:
            names = tuple(str(c) for c in self.column_names)
            if len(names) != n:
                raise HypershapeError(f"{len(names)} column names for {n} columns")
            object.__setattr__(self, "column_names", names)

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def take(self, rows) -> "PointCloud":
        return PointCloud(self.values[rows], self.column_names)


@dataclass(frozen=True)
class BinningSpec:
    """Number of bins per axis and optional explicit ``(lo, hi)`` ranges."""

    bins: int
    ranges: Optional[tuple[tuple[float, float], ...]] = None

    def __post_init__(self):
        if int(self.bins) != self.bins or self.bins < 2:
            raise HypershapeError(f"bins must be an integer >= 2, got {self.bins}")
        if self.bins > MAX_EXTENT:
            raise DimensionTooLarge(f"bins must be at most {MAX_EXTENT}, got {self.bins}")
        object.__setattr__(self, "bins", int(self.bins))
        if self.ranges is not None:
            rs = tuple((float(lo), float(hi)) for lo, hi in self.ranges)
            for lo, hi in rs:
                if not (np.isfinite(lo) and np.isfinite(hi)):
                    raise HypershapeError(f"range ({lo}, {hi}) is not finite")
                if lo > hi:
                    raise HypershapeError(f"range lower bound {lo} exceeds upper bound {hi}")
            object.__setattr__(self, "ranges", rs)


def resolve_ranges(X: PointCloud, spec: BinningSpec) -> list[tuple[float, float]]:
    if spec.ranges is None:
        ranges = list(zip(X.values.min(axis=0).tolist(), X.values.max(axis=0).tolist()))
    else:
        if len(spec.ranges) != X.n:
            raise HypershapeError(f"{len(spec.ranges)} ranges given for {X.n} dimensions")
        ranges = list(spec.ranges)
    for axis, (lo, hi) in enumerate(ranges):
        if not hi > lo:
            raise DegenerateAxis(f"axis {axis} has zero-width range [{lo}, {hi}]")
    return ranges


def bin_edges(ranges: Sequence[tuple[float, float]], bins: int) -> np.ndarray:
    """``(n, bins + 1)`` edges; edge ``j`` is ``lo + j * (hi - lo) / bins``."""
    return np.stack([np.linspace(lo, hi, bins + 1) for lo, hi in ranges])


def bin_points(X: PointCloud, spec: BinningSpec) -> GridImage:
    """Histogram ``X`` into ``bins`` equal-width bins per axis, threshold at > 0.

    Bins are closed on the left and open on the right, except the last bin,
    which also holds points equal to the upper range limit.  Points outside
    explicit ranges are dropped.
    """
    check_budget(spec.bins, X.n)
    ranges = resolve_ranges(X, spec)
    edges = bin_edges(ranges, spec.bins)
    return GridImage(_backend.occupancy(X.values, edges, spec.bins))
