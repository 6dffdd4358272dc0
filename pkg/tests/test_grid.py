import math

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hypershape import grid
from hypershape.errors import EmptyImage, HypershapeError, OutOfBounds
from hypershape.grid import GridImage

from .conftest import full, plus_shape


def one_hot(shape, *cells):
    a = np.zeros(shape, dtype=np.uint8)
    for c in cells:
        a[c] = 1
    return GridImage(a)


class TestGridImage:
    def test_from_flat_is_row_major(self):
        b = GridImage.from_flat((2, 3), [0, 1, 0, 0, 0, 1])
        assert b.data[0, 1] == 1 and b.data[1, 2] == 1
        assert b.flat() == [0, 1, 0, 0, 0, 1]

    def test_rejects_non_binary(self):
        with pytest.raises(HypershapeError):
            GridImage(np.array([[0, 2], [1, 0]]))

    def test_rejects_one_axis(self):
        with pytest.raises(HypershapeError):
            GridImage(np.ones(4, dtype=np.uint8))

    def test_rejects_huge_extent(self):
        with pytest.raises(HypershapeError):
            GridImage(np.zeros((65, 2), dtype=np.uint8))

    def test_wrong_flat_length(self):
        with pytest.raises(HypershapeError):
            GridImage.from_flat((2, 2), [1, 0, 1])

    def test_immutable(self):
        b = full((2, 2))
        with pytest.raises(ValueError):
            b.data[0, 0] = 0

    def test_bool_input(self):
        assert grid.volume(GridImage(np.eye(3, dtype=bool))) == 3


class TestVolume:
    def test_plus(self):
        assert grid.volume(plus_shape()) == 5

    def test_empty(self):
        assert grid.volume(GridImage(np.zeros((4, 4), dtype=np.uint8))) == 0

    def test_full_cube(self):
        assert grid.volume(full((3, 3, 3))) == 27


class TestCenterOfMass:
    def test_single(self):
        assert grid.center_of_mass(one_hot((4, 4), (1, 2))) == (1, 2)

    def test_plus(self):
        assert grid.center_of_mass(plus_shape()) == (1, 1)

    def test_half_rounds_up(self):
        # mean (0, 1.5)
        assert grid.center_of_mass(one_hot((4, 4), (0, 0), (0, 3))) == (0, 2)

    def test_below_half_rounds_down(self):
        # mean (0, 4/3)
        assert grid.center_of_mass(one_hot((4, 4), (0, 0), (0, 1), (0, 3))) == (0, 1)

    def test_empty(self):
        with pytest.raises(EmptyImage):
            grid.center_of_mass(GridImage(np.zeros((3, 3), dtype=np.uint8)))


class TestDistanceField:
    def test_345(self):
        assert grid.distance_field((5, 5), (0, 0))[3, 4] == 5.0

    def test_self(self):
        assert grid.distance_field((5, 5), (2, 2))[2, 2] == 0.0

    def test_cube_diagonal(self):
        d = grid.distance_field((2, 2, 2), (0, 0, 0))
        assert d[1, 1, 1] == pytest.approx(math.sqrt(3), abs=1e-12)

    def test_out_of_bounds(self):
        with pytest.raises(OutOfBounds):
            grid.distance_field((3, 3), (3, 0))
        with pytest.raises(OutOfBounds):
            grid.distance_field((3, 3), (0, 0, 0))


@settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.data())
def test_distance_metric_axioms(data):
    shape = tuple(data.draw(st.lists(st.integers(1, 7), min_size=2, max_size=4)))
    pt = st.tuples(*[st.integers(0, s - 1) for s in shape])
    a, b, c = data.draw(pt), data.draw(pt), data.draw(pt)
    da, db = grid.distance_field(shape, a), grid.distance_field(shape, b)
    assert da[b] == pytest.approx(db[a], abs=1e-12)
    assert da[c] <= da[b] + db[c] + 1e-12
    assert da[b] == pytest.approx(math.dist(a, b), abs=1e-12)


class TestRadius:
    def test_plus(self):
        assert grid.min_enclosing_radius(plus_shape(), (1, 1)) == 1

    def test_full_square(self):
        assert grid.min_enclosing_radius(full((3, 3)), (1, 1)) == 2

    def test_single_voxel_degenerate(self):
        b = one_hot((3, 3), (1, 1))
        assert grid.radius_and_flag(b, (1, 1)) == (1, True)
        assert grid.min_enclosing_radius(b, (1, 1)) == 1

    def test_perfect_square_distance_not_rounded_up(self):
        b = one_hot((6, 6), (0, 0), (3, 4))
        assert grid.radius_and_flag(b, (0, 0)) == (5, False)

    def test_matches_distance_field(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a = (rng.random((6, 5, 4)) < 0.3).astype(np.uint8)
            if not a.any():
                continue
            b = GridImage(a)
            c = grid.center_of_mass(b)
            want = math.ceil((grid.distance_field(b.shape, c) * a).max())
            assert grid.min_enclosing_radius(b, c) == max(want, 1)

    def test_empty(self):
        with pytest.raises(EmptyImage):
            grid.min_enclosing_radius(GridImage(np.zeros((3, 3), dtype=np.uint8)), (0, 0))


def brute_erode(a):
    out = np.zeros_like(a)
    for idx in np.ndindex(a.shape):
        if not a[idx]:
            continue
        ok = True
        for axis in range(a.ndim):
            for step in (-1, 1):
                j = list(idx)
                j[axis] += step
                if not (0 <= j[axis] < a.shape[axis]) or not a[tuple(j)]:
                    ok = False
        out[idx] = ok
    return out


class TestErosion:
    def test_plus(self):
        e = grid.erode(plus_shape())
        assert grid.volume(e) == 1 and e.data[1, 1] == 1

    def test_full_square(self):
        e = grid.erode(full((3, 3)))
        assert grid.volume(e) == 1 and e.data[1, 1] == 1

    def test_thin_diagonal_vanishes(self):
        assert grid.volume(grid.erode(GridImage(np.eye(5, dtype=np.uint8)))) == 0

    def test_surface(self):
        assert grid.surface_count(full((3, 3))) == 8
        assert grid.surface_count(plus_shape()) == 4
        diag = GridImage(np.eye(5, dtype=np.uint8))
        assert grid.surface_count(diag) == grid.volume(diag)

    def test_surface_empty(self):
        with pytest.raises(EmptyImage):
            grid.surface_count(GridImage(np.zeros((2, 2), dtype=np.uint8)))


binary_images = st.integers(2, 4).flatmap(
    lambda n: arrays(np.uint8, st.tuples(*[st.integers(1, 6)] * n), elements=st.integers(0, 1))
)


@settings(max_examples=100, deadline=None)
@given(binary_images)
def test_erosion_properties(a):
    b = GridImage(a)
    e = grid.erode(b)
    np.testing.assert_array_equal(e.data, brute_erode(a))
    assert np.all(e.data <= b.data)
    assert grid.volume(grid.erode(e)) <= grid.volume(e) <= grid.volume(b)
    if grid.volume(b):
        assert grid.surface_count(b) >= 1


def _measure(b):
    c = grid.center_of_mass(b)
    return grid.volume(b), c, grid.min_enclosing_radius(b, c), grid.surface_count(b)


@settings(max_examples=100, deadline=None)
@given(binary_images, st.data())
def test_translation_invariance(a, data):
    if not a.any():
        return
    offset = [data.draw(st.integers(0, 4)) for _ in range(a.ndim)]
    pad_after = [data.draw(st.integers(0, 3)) for _ in range(a.ndim)]
    bigger = np.pad(a, list(zip(offset, pad_after)))
    v0, c0, r0, s0 = _measure(GridImage(a))
    v1, c1, r1, s1 = _measure(GridImage(bigger))
    assert (v0, r0, s0) == (v1, r1, s1)
    assert tuple(x - o for x, o in zip(c1, offset)) == c0


@settings(max_examples=100, deadline=None)
@given(binary_images, st.data())
def test_axis_permutation_invariance(a, data):
    if not a.any():
        return
    perm = data.draw(st.permutations(range(a.ndim)))
    v0, c0, r0, s0 = _measure(GridImage(a))
    v1, c1, r1, s1 = _measure(GridImage(np.transpose(a, perm)))
    assert (v0, r0, s0) == (v1, r1, s1)
    assert c1 == tuple(c0[p] for p in perm)
