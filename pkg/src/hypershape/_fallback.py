"""Pure numpy implementations of the voxel kernels.

These are the reference versions.  ``hypershape._kernels`` (Cython) must
return identical results; :mod:`hypershape._backend` picks one at import.
"""

import numpy as np


def occupancy(points, edges, bins):
    """Mark every cell that receives at least one point.

    ``points`` is (m, n) float64, ``edges`` is (n, bins + 1) float64 with
    ``edges[:, 0]`` the lower and ``edges[:, -1]`` the upper range limit.
    Points outside ``[lo, hi]`` on any axis are ignored.
    """
    points = np.ascontiguousarray(points, dtype=np.float64)
    m, n = points.shape
    keep = np.ones(m, dtype=bool)
    idx = np.empty((n, m), dtype=np.intp)
    for axis in range(n):
        col = points[:, axis]
        e = edges[axis]
        keep &= (col >= e[0]) & (col <= e[-1])
        j = np.searchsorted(e, col, side="right") - 1
        # the right-most edge belongs to the last bin
        idx[axis] = np.clip(j, 0, bins - 1)
    out = np.zeros((bins,) * n, dtype=np.uint8)
    if keep.any():
        flat = np.ravel_multi_index(tuple(idx[:, keep]), out.shape)
        out.reshape(-1)[flat] = 1
    return out


def erode(img):
    """One erosion pass with the 2n face-neighbour cross; outside is 0."""
    img = np.asarray(img, dtype=np.uint8)
    padded = np.pad(img, 1)
    out = img.copy()
    core = (slice(1, -1),) * img.ndim
    for axis in range(img.ndim):
        for step in (-1, 1):
            sl = list(core)
            sl[axis] = slice(1 + step, padded.shape[axis] - 1 + step)
            out &= padded[tuple(sl)]
    return out


def coordinate_sums(img):
    """Return (count, per-axis sum of coordinates) over occupied cells."""
    coords = np.nonzero(img)
    count = coords[0].size
    sums = np.array([c.sum(dtype=np.int64) for c in coords], dtype=np.int64)
    return int(count), sums


def max_sq_distance(img, center):
    """Largest squared integer distance from ``center`` to an occupied cell.

    Returns -1 for an empty image.
    """
    coords = np.nonzero(img)
    if coords[0].size == 0:
        return -1
    d2 = np.zeros(coords[0].size, dtype=np.int64)
    for axis, c in enumerate(coords):
        diff = c.astype(np.int64) - int(center[axis])
        d2 += diff * diff
    return int(d2.max())
