"""Compiled and numpy kernels must agree, and both must match scipy/numpy oracles."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy import ndimage

from hypershape import _backend, _fallback

from .conftest import _kernels

CROSS_CACHE = {}


def cross(n):
    if n not in CROSS_CACHE:
        CROSS_CACHE[n] = ndimage.generate_binary_structure(n, 1)
    return CROSS_CACHE[n]


images = st.integers(2, 4).flatmap(
    lambda n: arrays(np.uint8, st.tuples(*[st.integers(1, 6)] * n), elements=st.integers(0, 1))
)


def test_backend_is_selected():
    assert _backend.BACKEND in ("cython", "python")
    if _kernels is not None:
        assert _backend.BACKEND == "cython" or _backend.kernels is _fallback


@settings(max_examples=150, deadline=None)
@given(images)
def test_erode_matches_scipy(img):
    want = ndimage.binary_erosion(img, structure=cross(img.ndim), border_value=0).astype(np.uint8)
    np.testing.assert_array_equal(_fallback.erode(img), want)
    if _kernels is not None:
        np.testing.assert_array_equal(_kernels.erode(img), want)


@settings(max_examples=150, deadline=None)
@given(images, st.data())
def test_sums_and_distance_agree(img, data):
    center = [data.draw(st.integers(0, s - 1)) for s in img.shape]
    coords = np.argwhere(img)
    want_sum = coords.sum(axis=0) if len(coords) else np.zeros(img.ndim, dtype=np.int64)
    want_d2 = int(((coords - center) ** 2).sum(axis=1).max()) if len(coords) else -1
    for k in [_fallback] + ([_kernels] if _kernels is not None else []):
        count, sums = k.coordinate_sums(img)
        assert count == len(coords)
        np.testing.assert_array_equal(sums, want_sum)
        assert k.max_sq_distance(img, center) == want_d2


@settings(max_examples=100, deadline=None)
@given(
    st.integers(2, 4),
    st.integers(2, 9),
    st.integers(1, 40),
    st.integers(0, 2**31),
)
def test_occupancy_matches_histogramdd(n, bins, m, seed):
    rng = np.random.default_rng(seed)
    # coarse values so many points sit exactly on bin edges
    pts = rng.integers(0, 9, size=(m, n)).astype(float) / 4
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    if np.any(hi == lo):
        hi = hi + 1.0
    edges = np.stack([np.linspace(a, b, bins + 1) for a, b in zip(lo, hi)])
    H, _ = np.histogramdd(pts, bins=list(edges))
    want = (H > 0).astype(np.uint8)
    np.testing.assert_array_equal(_fallback.occupancy(pts, edges, bins), want)
    if _kernels is not None:
        np.testing.assert_array_equal(_kernels.occupancy(pts, edges, bins), want)


def test_occupancy_drops_points_outside_ranges(kernels):
    pts = np.array([[-1.0, 0.5], [0.5, 0.5], [0.5, 2.0]])
    edges = np.array([[0.0, 0.5, 1.0], [0.0, 0.5, 1.0]])
    out = kernels.occupancy(pts, edges, 2)
    assert out.sum() == 1 and out[1, 1] == 1


def test_kernels_on_empty_image(kernels):
    img = np.zeros((3, 4), dtype=np.uint8)
    assert kernels.coordinate_sums(img)[0] == 0
    assert kernels.max_sq_distance(img, (0, 0)) == -1
    assert kernels.erode(img).sum() == 0


@pytest.mark.parametrize("shape", [(64, 64), (14, 14, 14, 14), (5, 1, 7)])
def test_backends_agree_on_random_large_images(shape):
    if _kernels is None:
        pytest.skip("extension not built")
    rng = np.random.default_rng(3)
    img = (rng.random(shape) < 0.7).astype(np.uint8)
    np.testing.assert_array_equal(_kernels.erode(img), _fallback.erode(img))
    c = [s // 2 for s in shape]
    assert _kernels.max_sq_distance(img, c) == _fallback.max_sq_distance(img, c)
