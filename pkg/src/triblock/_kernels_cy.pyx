# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot-loop kernels; behavioral twin of triblock._kernels_py."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

__all__ = ["ordered_triangles", "product_filter", "consistent_rows"]


def ordered_triangles(adj):
    """All ordered triangles (a, b, c), lexicographically sorted."""
    cdef const cnp.uint8_t[:, ::1] a = np.ascontiguousarray(adj, dtype=np.uint8)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k, idx
    cdef Py_ssize_t count = 0
    # The zero diagonal keeps i, j, k pairwise distinct.
    for i in range(n):
        for j in range(n):
            if a[i, j]:
                for k in range(n):
                    if a[i, k] and a[j, k]:
                        count += 1
    out = np.empty((count, 3), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] o = out
    idx = 0
    for i in range(n):
        for j in range(n):
            if a[i, j]:
                for k in range(n):
                    if a[i, k] and a[j, k]:
                        o[idx, 0] = i
                        o[idx, 1] = j
                        o[idx, 2] = k
                        idx += 1
    return out


def product_filter(cur, tri, h_adj, cross):
    """Extend candidate rows by image triples; see the pure twin for the contract."""
    cdef const cnp.int32_t[:, ::1] c_rows = np.ascontiguousarray(cur, dtype=np.int32)
    cdef const cnp.int32_t[:, ::1] t_rows = np.ascontiguousarray(tri, dtype=np.int32)
    cdef const cnp.uint8_t[:, ::1] h = np.ascontiguousarray(h_adj, dtype=np.uint8)
    cdef const cnp.uint8_t[:, ::1] x = np.ascontiguousarray(cross, dtype=np.uint8)
    cdef Py_ssize_t m = c_rows.shape[0]
    cdef Py_ssize_t c = c_rows.shape[1]
    cdef Py_ssize_t b = t_rows.shape[0]
    cdef Py_ssize_t r, s, i, j, idx
    cdef cnp.int32_t v
    cdef bint bad
    cdef long gamma = 0
    cdef Py_ssize_t kept = 0

    if m == 0 or b == 0:
        return np.empty((0, c + 3), dtype=np.int32), 0

    # Pass 1: count survivors so the output is allocated exactly once.
    for r in range(m):
        for s in range(b):
            bad = False
            for i in range(3):
                v = t_rows[s, i]
                for j in range(c):
                    if c_rows[r, j] == v:
                        bad = True
                        break
                if bad:
                    break
            if bad:
                continue
            gamma += 1
            for i in range(3):
                for j in range(c):
                    if h[t_rows[s, i], c_rows[r, j]] != x[i, j]:
                        bad = True
                        break
                if bad:
                    break
            if not bad:
                kept += 1

    out = np.empty((kept, c + 3), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] o = out
    idx = 0
    for r in range(m):
        for s in range(b):
            bad = False
            for i in range(3):
                v = t_rows[s, i]
                for j in range(c):
                    if c_rows[r, j] == v:
                        bad = True
                        break
                if bad:
                    break
            if bad:
                continue
            for i in range(3):
                for j in range(c):
                    if h[t_rows[s, i], c_rows[r, j]] != x[i, j]:
                        bad = True
                        break
                if bad:
                    break
            if not bad:
                for j in range(c):
                    o[idx, j] = c_rows[r, j]
                for i in range(3):
                    o[idx, c + i] = t_rows[s, i]
                idx += 1
    return out, gamma


def consistent_rows(rows, g_pat, h_adj):
    """Mask of rows whose full pairwise adjacency matches the target pattern."""
    cdef const cnp.int32_t[:, ::1] r_rows = np.ascontiguousarray(rows, dtype=np.int32)
    cdef const cnp.uint8_t[:, ::1] pat = np.ascontiguousarray(g_pat, dtype=np.uint8)
    cdef const cnp.uint8_t[:, ::1] h = np.ascontiguousarray(h_adj, dtype=np.uint8)
    cdef Py_ssize_t m = r_rows.shape[0]
    cdef Py_ssize_t c = r_rows.shape[1]
    cdef Py_ssize_t r, p, q
    cdef bint ok
    out = np.ones(m, dtype=bool)
    cdef cnp.uint8_t[::1] o = out.view(np.uint8)
    for r in range(m):
        ok = True
        for p in range(c):
            for q in range(p + 1, c):
                if h[r_rows[r, p], r_rows[r, q]] != pat[p, q]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            o[r] = 0
    return out
