"""Hyper-Shape-Proportion (SP) and hyper-sphericity for n-dimensional shapes.

Closed forms live in :mod:`hypershape.analytic`; the point-cloud to image
pipeline is :func:`hypershape.metrics.analyze`.
"""

__version__ = "0.1.0"

from hypershape._backend import BACKEND
from hypershape.analytic import (
    AnalyticShape,
    SpVariant,
    ball_surface,
    ball_volume,
    gamma_half,
    mc_sp_oracle,
    sp_closed_form,
    sphericity_ball,
)
from hypershape.binning import BinningSpec, PointCloud, bin_points
from hypershape.errors import (
    DegenerateAxis,
    DimensionTooLarge,
    EmptyImage,
    EmptyInput,
    HypershapeError,
    OutOfBounds,
    UnsupportedShape,
)
from hypershape.grid import GridImage
from hypershape.metrics import ShapeMetrics, analyze, image_metrics
from hypershape.stats import QuantileSummary, bootstrap_metric, summarize
