# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution kernels; semantics identical to exunits._kernels_py.

Counts are int64; the backend routes any step that could overflow to the
pure-Python kernels before calling in here.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

from array import array


cdef long long *_alloc(Py_ssize_t count) except NULL:
    cdef long long *buf = <long long *> PyMem_Malloc(count * sizeof(long long) if count > 0 else sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill_digits(long long idx, long long[:] radices, long long *out) noexcept:
    cdef Py_ssize_t t
    for t in range(radices.shape[0]):
        out[t] = idx % radices[t]
        idx //= radices[t]


def sum_counts_step(long long[:] radices, long long[:] src, long long[:] table):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t nd = radices.shape[0]
    cdef Py_ssize_t ns = src.shape[0]
    out_arr = array("q", bytes(8 * n))
    cdef long long[:] out = out_arr
    cdef Py_ssize_t w, s, t
    cdef long long cnt, idx, v

    if nd == 1:
        for w in range(n):
            cnt = table[w]
            if cnt:
                for s in range(ns):
                    idx = w + src[s]
                    if idx >= n:
                        idx -= n
                    out[idx] += cnt
        return out_arr

    cdef long long *weights = _alloc(nd)
    cdef long long *wd = _alloc(nd)
    cdef long long *sd = _alloc(ns * nd)
    try:
        weights[0] = 1
        for t in range(1, nd):
            weights[t] = weights[t - 1] * radices[t - 1]
        for s in range(ns):
            _fill_digits(src[s], radices, sd + s * nd)
        for w in range(n):
            cnt = table[w]
            if cnt:
                _fill_digits(w, radices, wd)
                for s in range(ns):
                    idx = 0
                    for t in range(nd):
                        v = wd[t] + sd[s * nd + t]
                        if v >= radices[t]:
                            v -= radices[t]
                        idx += v * weights[t]
                    out[idx] += cnt
    finally:
        PyMem_Free(weights)
        PyMem_Free(wd)
        PyMem_Free(sd)
    return out_arr


def sum_reach_step(long long[:] radices, long long[:] src, const unsigned char[:] reach):
    cdef Py_ssize_t n = reach.shape[0]
    cdef Py_ssize_t nd = radices.shape[0]
    cdef Py_ssize_t ns = src.shape[0]
    new = bytearray(n)
    cdef unsigned char[:] out = new
    cdef Py_ssize_t w, s, t
    cdef long long idx, v

    if nd == 1:
        for w in range(n):
            if reach[w]:
                for s in range(ns):
                    idx = w + src[s]
                    if idx >= n:
                        idx -= n
                    out[idx] = 1
        return new

    cdef long long *weights = _alloc(nd)
    cdef long long *wd = _alloc(nd)
    cdef long long *sd = _alloc(ns * nd)
    try:
        weights[0] = 1
        for t in range(1, nd):
            weights[t] = weights[t - 1] * radices[t - 1]
        for s in range(ns):
            _fill_digits(src[s], radices, sd + s * nd)
        for w in range(n):
            if reach[w]:
                _fill_digits(w, radices, wd)
                for s in range(ns):
                    idx = 0
                    for t in range(nd):
                        v = wd[t] + sd[s * nd + t]
                        if v >= radices[t]:
                            v -= radices[t]
                        idx += v * weights[t]
                    out[idx] = 1
    finally:
        PyMem_Free(weights)
        PyMem_Free(wd)
        PyMem_Free(sd)
    return new


def prod_counts_step(long long[:] perm_flat, Py_ssize_t n, long long[:] table):
    cdef Py_ssize_t total = perm_flat.shape[0]
    out_arr = array("q", bytes(8 * n))
    cdef long long[:] out = out_arr
    cdef Py_ssize_t base, w
    cdef long long cnt
    for base in range(0, total, n):
        for w in range(n):
            cnt = table[w]
            if cnt:
                out[perm_flat[base + w]] += cnt
    return out_arr


def prod_reach_step(long long[:] perm_flat, Py_ssize_t n, const unsigned char[:] reach):
    cdef Py_ssize_t total = perm_flat.shape[0]
    new = bytearray(n)
    cdef unsigned char[:] out = new
    cdef Py_ssize_t base, w
    for base in range(0, total, n):
        for w in range(n):
            if reach[w]:
                out[perm_flat[base + w]] = 1
    return new
