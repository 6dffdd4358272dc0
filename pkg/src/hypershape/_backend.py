"""Select the voxel kernel implementation at import time.

The compiled Cython module is used when it was built; otherwise the numpy
fallback is used.  Set ``HYPERSHAPE_PURE=1`` to force the fallback.
"""

import os

from hypershape import _fallback

if os.environ.get("HYPERSHAPE_PURE", "") not in ("", "0"):
    kernels = _fallback
    BACKEND = "python"
else:
    try:
        from hypershape import _kernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _fallback
        BACKEND = "python"

occupancy = kernels.occupancy
erode = kernels.erode
coordinate_sums = kernels.coordinate_sums
max_sq_distance = kernels.max_sq_distance

__all__ = ["BACKEND", "occupancy", "erode", "coordinate_sums", "max_sq_distance"]
