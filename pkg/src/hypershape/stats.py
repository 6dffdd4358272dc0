"""Quantile summaries and the percentile bootstrap for image metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hypershape.binning import BinningSpec, PointCloud
from hypershape.errors import EmptyInput, HypershapeError
from hypershape.metrics import ShapeMetrics, analyze
from hypershape.sim import make_rng


@dataclass(frozen=True)
class QuantileSummary:
    mean: float
    q025: float
    median: float
    q975: float
    count: int


@dataclass(frozen=True)
class FiveNumber:
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float


def _finite(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64).reshape(-1)
    if arr.size == 0:
        raise EmptyInput("cannot summarise an empty list")
    if not np.isfinite(arr).all():
        raise HypershapeError("values must be finite")
    return arr


def summarize(values) -> QuantileSummary:
    """Mean plus 2.5 / 50 / 97.5 % quantiles (linear interpolation, type 7)."""
    arr = _finite(values)
    q025, med, q975 = np.quantile(arr, [0.025, 0.5, 0.975], method="linear")
    return QuantileSummary(float(arr.mean()), float(q025), float(med), float(q975), int(arr.size))


def five_number(values) -> FiveNumber:
    arr = _finite(values)
    qs = np.quantile(arr, [0.0, 0.25, 0.5, 0.75, 1.0], method="linear")
    return FiveNumber(*(float(q) for q in qs))


def bootstrap_replicates(X: PointCloud, spec: BinningSpec, replicates: int, seed: int) -> list[ShapeMetrics]:
    """Metrics of ``replicates`` resamples of the rows of ``X``.

    Replicate ``i`` draws ``m`` row indices with replacement from a generator
    seeded by ``(seed, i)``.  Binning ranges default to each resample's own
    min/max unless ``spec`` fixes them.
    """
    if replicates < 1:
        raise HypershapeError(f"replicates must be >= 1, got {replicates}")
    out = []
    for i in range(replicates):
        rows = make_rng(seed, i).integers(0, X.m, size=X.m)
        out.append(analyze(X.take(rows), spec))
    return out


def bootstrap_metric(X: PointCloud, spec: BinningSpec, replicates: int, seed: int):
    """Return ``(sp_summary, sphericity_summary)`` over bootstrap replicates."""
    reps = bootstrap_replicates(X, spec, replicates, seed)
    return (
        summarize([m.sp for m in reps]),
        summarize([m.sphericity for m in reps]),
    )
