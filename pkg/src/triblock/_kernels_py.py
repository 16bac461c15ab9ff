"""Pure-Python (numpy) implementations of the hot-loop kernels.

Mirrors triblock._kernels_cy; both backends must return identical arrays for
identical inputs (same values, same row order).  See triblock.kernels for
selection.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

__all__ = ["ordered_triangles", "product_filter", "consistent_rows"]

# Broadcast budget for the product filter, in scalar comparisons per chunk.
_CHUNK_BUDGET = 4_000_000


def ordered_triangles(adj: np.ndarray) -> np.ndarray:
    """All ordered triangles (a, b, c) of the graph, lexicographically sorted.

    A row means: b is adjacent to a, and c is adjacent to both.  The row count
    is six times the number of (unordered) triangles.
    """
    a = np.asarray(adj, dtype=bool)
    n = a.shape[0]
    found: list[tuple[int, int, int]] = []
    us, vs = np.nonzero(np.triu(a, 1))
    for u, v in zip(us.tolist(), vs.tolist()):
        for w in np.flatnonzero(a[u] & a[v]).tolist():
            if w > v:
                found.extend(permutations((u, v, w)))
    if not found:
        return np.empty((0, 3), dtype=np.int32)
    out = np.array(sorted(found), dtype=np.int32)
    assert out.shape[0] < max(n, 2) ** 3
    return out


def product_filter(
    cur: np.ndarray, tri: np.ndarray, h_adj: np.ndarray, cross: np.ndarray
) -> tuple[np.ndarray, int]:
    """Extend candidate rows by image triples, keeping consistent combos.

    cur: (m, c) int32, one surviving assignment per row (position-ordered
    image vertices).  tri: (b, 3) int32 image triples for the next block,
    already in position order.  cross: (3, c) uint8, required adjacency
    between each new position and each covered position on the target side.

    A combo survives when it shares no image vertex (injectivity) and every
    new/old vertex pair reproduces ``cross`` in ``h_adj``.  Returns the
    surviving concatenated rows, in (cur-row, tri-row) lexicographic order,
    plus the number of collision-free combos considered.
    """
    cur = np.ascontiguousarray(cur, dtype=np.int32)
    tri = np.ascontiguousarray(tri, dtype=np.int32)
    m, c = cur.shape
    b = tri.shape[0]
    if m == 0 or b == 0:
        return np.empty((0, c + 3), dtype=np.int32), 0
    h = np.asarray(h_adj, dtype=np.uint8)
    gamma = 0
    kept: list[np.ndarray] = []
    chunk = max(1, _CHUNK_BUDGET // max(1, b * max(c, 1)))
    for start in range(0, m, chunk):
        cc = cur[start : start + chunk]
        ok = ~(cc[:, None, :, None] == tri[None, :, None, :]).any(axis=(2, 3))
        gamma += int(ok.sum())
        for i in range(3):
            hrow = h[tri[:, i]]  # (b, n)
            for j in range(c):
                ok &= hrow[:, cc[:, j]].T == cross[i, j]
            if not ok.any():
                break
        ridx, sidx = np.nonzero(ok)
        if ridx.size:
            kept.append(np.hstack([cc[ridx], tri[sidx]]))
    if not kept:
        return np.empty((0, c + 3), dtype=np.int32), gamma
    return np.ascontiguousarray(np.vstack(kept), dtype=np.int32), gamma


def consistent_rows(
    rows: np.ndarray, g_pat: np.ndarray, h_adj: np.ndarray
) -> np.ndarray:
    """Mask of rows whose full pairwise adjacency matches the target pattern.

    rows: (m, c) int32 image vertices in position order; g_pat: (c, c) uint8
    adjacency required between positions.
    """
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    m, c = rows.shape
    h = np.asarray(h_adj, dtype=np.uint8)
    mask = np.ones(m, dtype=bool)
    for p in range(c):
        for q in range(p + 1, c):
            mask &= h[rows[:, p], rows[:, q]] == g_pat[p, q]
    return mask
