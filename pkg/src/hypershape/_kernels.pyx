# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled voxel kernels; same contracts as ``hypershape._fallback``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.uint8_t u8
ctypedef cnp.int64_t i64


cdef inline Py_ssize_t _bin_index(const double* e, Py_ssize_t bins, double x) noexcept nogil:
    # bin j holds e[j] <= x < e[j + 1]; the last bin also holds x == e[bins].
    # Start from the arithmetic guess, then settle against the stored edges so
    # the result matches searchsorted(e, x, side="right") - 1 exactly.
    cdef double span = e[bins] - e[0]
    cdef Py_ssize_t j = <Py_ssize_t>((x - e[0]) / span * bins)
    if j < 0:
        j = 0
    elif j > bins - 1:
        j = bins - 1
    while j < bins - 1 and x >= e[j + 1]:
        j += 1
    while j > 0 and x < e[j]:
        j -= 1
    return j


def occupancy(points, edges, Py_ssize_t bins):
    cdef const double[:, ::1] P = np.ascontiguousarray(points, dtype=np.float64)
    cdef const double[:, ::1] E = np.ascontiguousarray(edges, dtype=np.float64)
    cdef Py_ssize_t m = P.shape[0], n = P.shape[1]
    out = np.zeros((bins,) * n, dtype=np.uint8)
    cdef u8[::1] flat = out.reshape(-1)
    cdef Py_ssize_t i, a, cell
    cdef double x
    cdef const double* e
    cdef bint inside
    with nogil:
        for i in range(m):
            cell = 0
            inside = True
            for a in range(n):
                x = P[i, a]
                e = &E[a, 0]
                if not (x >= e[0] and x <= e[bins]):
                    inside = False
                    break
                cell = cell * bins + _bin_index(e, bins, x)
            if inside:
                flat[cell] = 1
    return out


def erode(img):
    src = np.ascontiguousarray(img, dtype=np.uint8)
    cdef Py_ssize_t n = src.ndim
    shape_arr = np.asarray(src.shape, dtype=np.intp)
    strides_arr = np.asarray(src.strides, dtype=np.intp)
    cdef Py_ssize_t[:] shape = shape_arr
    cdef Py_ssize_t[:] stride = strides_arr
    cdef Py_ssize_t[:] coord = np.zeros(n, dtype=np.intp)
    cdef const u8[:] b = src.reshape(-1)
    out = np.zeros_like(src)
    cdef u8[:] o = out.reshape(-1)
    cdef Py_ssize_t size = b.shape[0], i, a
    cdef bint keep
    with nogil:
        for i in range(size):
            if b[i]:
                keep = True
                for a in range(n):
                    if coord[a] == 0 or coord[a] == shape[a] - 1:
                        keep = False
                        break
                    if not b[i - stride[a]] or not b[i + stride[a]]:
                        keep = False
                        break
                o[i] = keep
            # row-major coordinate counter
            a = n - 1
            while a >= 0:
                coord[a] += 1
                if coord[a] < shape[a]:
                    break
                coord[a] = 0
                a -= 1
    return out


def coordinate_sums(img):
    src = np.ascontiguousarray(img, dtype=np.uint8)
    cdef Py_ssize_t n = src.ndim
    shape_arr = np.asarray(src.shape, dtype=np.intp)
    cdef Py_ssize_t[:] shape = shape_arr
    cdef Py_ssize_t[:] coord = np.zeros(n, dtype=np.intp)
    sums_arr = np.zeros(n, dtype=np.int64)
    cdef i64[:] sums = sums_arr
    cdef const u8[:] b = src.reshape(-1)
    cdef Py_ssize_t size = b.shape[0], i, a
    cdef i64 count = 0
    with nogil:
        for i in range(size):
            if b[i]:
                count += 1
                for a in range(n):
                    sums[a] += coord[a]
            a = n - 1
            while a >= 0:
                coord[a] += 1
                if coord[a] < shape[a]:
                    break
                coord[a] = 0
                a -= 1
    return int(count), sums_arr


def max_sq_distance(img, center):
    src = np.ascontiguousarray(img, dtype=np.uint8)
    cdef Py_ssize_t n = src.ndim
    shape_arr = np.asarray(src.shape, dtype=np.intp)
    cdef Py_ssize_t[:] shape = shape_arr
    cdef Py_ssize_t[:] coord = np.zeros(n, dtype=np.intp)
    cdef i64[:] c = np.asarray(center, dtype=np.int64)
    cdef const u8[:] b = src.reshape(-1)
    cdef Py_ssize_t size = b.shape[0], i, a
    cdef i64 best = -1, d2, diff
    with nogil:
        for i in range(size):
            if b[i]:
                d2 = 0
                for a in range(n):
                    diff = coord[a] - c[a]
                    d2 += diff * diff
                if d2 > best:
                    best = d2
            a = n - 1
            while a >= 0:
                coord[a] += 1
                if coord[a] < shape[a]:
                    break
                coord[a] = 0
                a -= 1
    return int(best)
