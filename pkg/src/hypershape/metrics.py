"""Image-based hyper-SP and hyper-sphericity.

For a binary image ``b`` in n dimensions::

    V  = number of occupied voxels
    c  = rounded centre of mass
    r  = ceil(max distance from c to an occupied voxel)
    S  = V - volume(erode(b))
    SP = V / ball_volume(n, r)
    sphericity = n V / (r S)

SP is not clamped to (0, 1]; coarse grids can overshoot.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from hypershape import grid
from hypershape.analytic import ball_volume
from hypershape.binning import BinningSpec, PointCloud, bin_points
from hypershape.grid import GridImage

FIELDS = (
    "n",
    "volume",
    "radius",
    "surface",
    "sp",
    "sphericity",
    "degenerate_radius",
    "erosion_empty",
)


@dataclass(frozen=True)
class ShapeMetrics:
    n: int
    volume: int
    radius: int
    surface: int
    sp: float
    sphericity: float
    degenerate_radius: bool
    erosion_empty: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _center_and_radius(b: GridImage):
    c = grid.center_of_mass(b)
    r, degenerate = grid.radius_and_flag(b, c)
    return c, r, degenerate


def sp_from_image(b: GridImage):
    """Return ``(sp, radius, volume, degenerate_radius)``."""
    v = grid.volume(b)
    _, r, degenerate = _center_and_radius(b)
    return v / ball_volume(b.ndim, r), r, v, degenerate


def sphericity_from_image(b: GridImage):
    """Return ``(sphericity, surface, erosion_empty)``."""
    m = image_metrics(b)
    return m.sphericity, m.surface, m.erosion_empty


def image_metrics(b: GridImage) -> ShapeMetrics:
    """Both metrics from one centre/radius computation."""
    n = b.ndim
    v = grid.volume(b)
    _, r, degenerate = _center_and_radius(b)
    s = grid.surface_count(b)
    return ShapeMetrics(
        n=n,
        volume=v,
        radius=r,
        surface=s,
        sp=v / ball_volume(n, r),
        sphericity=n * v / (r * s),
        degenerate_radius=degenerate,
        erosion_empty=(s == v),
    )


def analyze(X: PointCloud, spec: BinningSpec) -> ShapeMetrics:
    """Bin ``X`` into an image and measure it."""
    return image_metrics(bin_points(X, spec))
