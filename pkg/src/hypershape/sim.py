"""Uniform points in the unit n-ball and the simulated-ball bin sweep."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from hypershape.binning import BinningSpec, PointCloud, check_budget
from hypershape.errors import HypershapeError
from hypershape.metrics import ShapeMetrics, analyze

RNG_ALGORITHM = "numpy.random.PCG64 seeded by numpy.random.SeedSequence(entropy)"

_U64 = (1 << 64) - 1


def make_rng(*entropy: int) -> np.random.Generator:
    """Generator seeded from a tuple of integers (negative values wrap to u64)."""
    words = [int(e) & _U64 for e in entropy]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(words)))


def ball_points(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` points uniform in the closed unit n-ball.

    Draws an (n + 2)-dimensional standard normal vector, projects it onto
    the unit sphere and keeps the first n coordinates.
    """
    z = rng.standard_normal((count, n + 2))
    z /= np.sqrt(np.einsum("ij,ij->i", z, z))[:, None]
    return z[:, :n].copy()


@dataclass(frozen=True)
class BallSampleConfig:
    n: int
    points: int
    seed: int

    def __post_init__(self):
        if self.n < 2:
            raise HypershapeError(f"dimension must be >= 2, got {self.n}")
        if self.points < 1:
            raise HypershapeError(f"points must be >= 1, got {self.points}")


def sample_ball(cfg: BallSampleConfig) -> PointCloud:
    return PointCloud(ball_points(cfg.n, cfg.points, make_rng(cfg.seed)))


@dataclass(frozen=True)
class BallRow:
    dim: int
    bins: int
    sample: int
    metrics: ShapeMetrics


def _run_cell(args) -> list[BallRow]:
    dim, bins, samples, points, seed = args
    spec = BinningSpec(bins)
    rows = []
    for i in range(samples):
        cloud = PointCloud(ball_points(dim, points, make_rng(seed, dim, bins, i)))
        rows.append(BallRow(dim, bins, i, analyze(cloud, spec)))
    return rows


def run_ball_experiment(dims, bins_range, samples_per_cell, points, seed, jobs=1) -> list[BallRow]:
    """Simulate ``samples_per_cell`` balls for every (dim, bins) pair.

    Each ball is drawn from its own generator seeded by
    ``(seed, dim, bins, sample)``, so the table does not depend on ``jobs``
    or on which cells are requested alongside.
    """
    dims = [int(d) for d in dims]
    bins_range = [int(k) for k in bins_range]
    if samples_per_cell < 0 or points < 1:
        raise HypershapeError("samples must be >= 0 and points >= 1")
    for d in dims:
        if d < 2:
            raise HypershapeError(f"dimension must be >= 2, got {d}")
    for k in bins_range:
        BinningSpec(k)
    for d, k in itertools.product(dims, bins_range):
        check_budget(k, d)
    cells = [(d, k, samples_per_cell, points, seed) for d, k in itertools.product(dims, bins_range)]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_cell, cells))
    else:
        chunks = [_run_cell(c) for c in cells]
    return [row for chunk in chunks for row in chunk]
