"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs under both backends; outputs are
checked for equality before timing.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from hypershape import _fallback
from hypershape.binning import bin_edges
from hypershape.sim import ball_points, make_rng

try:
    from hypershape import _kernels
except ImportError:
    _kernels = None


def cases():
    rng = make_rng(2024)
    for n, bins, m in ((2, 14, 100_000), (4, 14, 100_000), (4, 6, 150), (5, 14, 100_000)):
        pts = ball_points(n, m, rng)
        edges = bin_edges(list(zip(pts.min(0), pts.max(0))), bins)
        img = _fallback.occupancy(pts, edges, bins)
        center = [bins // 2] * n
        label = f"n={n} bins={bins} m={m}"
        yield f"occupancy   {label}", lambda k, p=pts, e=edges, b=bins: k.occupancy(p, e, b)
        yield f"erode       {label}", lambda k, i=img: k.erode(i)
        yield f"coord sums  {label}", lambda k, i=img: k.coordinate_sums(i)
        yield f"max dist    {label}", lambda k, i=img, c=center: k.max_sq_distance(i, c)


PIPELINE = """
import time
from hypershape import BACKEND
from hypershape.binning import BinningSpec, PointCloud
from hypershape.io import IRIS_FEATURES, bundled_iris
from hypershape.cli import load_cloud
from hypershape.stats import bootstrap_metric
X = load_cloud(bundled_iris(), list(IRIS_FEATURES), "all")
t = time.perf_counter()
for k in range(4, 15):
    bootstrap_metric(X, BinningSpec(k), 200, seed=0)
print(BACKEND, time.perf_counter() - t)
"""


def pipeline():
    """Iris bootstrap (200 replicates x bins 4..14) under each backend."""
    print("\nend-to-end: Iris 'all' bootstrap, 200 replicates x 11 bin counts")
    for pure in ("1", "0"):
        env = dict(os.environ, HYPERSHAPE_PURE=pure)
        out = subprocess.run([sys.executable, "-c", PIPELINE], env=env, capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"  {backend:<8}{float(secs):8.2f} s")


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'kernel':<42}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
    for label, fn in cases():
        py = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{label:<42}{py:>11.3f}{'-':>11}{'-':>9}")
            continue
        assert same(fn(_fallback), fn(_kernels)), label
        cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:<42}{py:>11.3f}{cy:>11.3f}{py / cy:>8.1f}x")
    pipeline()


if __name__ == "__main__":
    main()
