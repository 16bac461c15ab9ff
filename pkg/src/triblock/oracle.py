"""Exhaustive ground truth: backtracking isomorphism search and triangle tilings.

Deliberately independent of the block pipeline and its kernels; this is the
reference the pipeline is measured against at desk scale.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graphs import Graph, apply_permutation
from .perms import Permutation

__all__ = [
    "OracleResult",
    "OracleSizeError",
    "RECOMMENDED_MAX_N",
    "HARD_MAX_N",
    "brute_force_isomorphism",
    "brute_force_automorphisms",
    "triangle_partition_exists",
]

RECOMMENDED_MAX_N = 12
HARD_MAX_N = 16


class OracleSizeError(ValueError):
    """Refusal to run the exhaustive search beyond the hard size guard."""


@dataclass(frozen=True)
class OracleResult:
    witness: Permutation | None
    count: int | None
    nodes_explored: int


def _guard(n: int) -> None:
    if n > HARD_MAX_N:
        raise OracleSizeError(f"n={n} exceeds the oracle's hard guard of {HARD_MAX_N}")
    if n > RECOMMENDED_MAX_N:
        warnings.warn(
            f"oracle search on n={n} exceeds the recommended {RECOMMENDED_MAX_N}",
            stacklevel=3,
        )


def brute_force_isomorphism(
    g: Graph, h: Graph, enumerate_all: bool = False
) -> OracleResult:
    """Backtracking search for a relabeling P of h with h relabeled = g.

    Assigns an h-vertex to each g-vertex in turn, pruning on degree and on
    adjacency against everything already assigned.  With enumerate_all the
    full count of valid bijections is returned (witness = first found).
    """
    _guard(max(g.n, h.n))
    nodes = 0
    if g.n != h.n or g.edge_count() != h.edge_count():
        return OracleResult(None, 0 if enumerate_all else None, nodes)
    n = g.n
    if n == 0:
        return OracleResult((), 1 if enumerate_all else None, nodes)
    if g.degree_multiset() != h.degree_multiset():
        return OracleResult(None, 0 if enumerate_all else None, nodes)

    # Rarest degree classes first: fewer candidates near the root.
    class_size: dict[int, int] = {}
    for d in g.degrees():
        class_size[d] = class_size.get(d, 0) + 1
    order = sorted(range(n), key=lambda v: (class_size[g.degree(v)], g.degree(v), v))
    h_by_degree: dict[int, list[int]] = {}
    for v in range(h.n):
        h_by_degree.setdefault(h.degree(v), []).append(v)

    assigned: dict[int, int] = {}  # g-vertex -> h-vertex
    used = [False] * n
    witness: list[Permutation | None] = [None]
    count = 0

    def extend(depth: int) -> bool:
        nonlocal nodes, count
        if depth == n:
            count += 1
            if witness[0] is None:
                p = [0] * n
                for gu, hu in assigned.items():
                    p[hu] = gu
                witness[0] = tuple(p)
            return True
        u = order[depth]
        for v in h_by_degree.get(g.degree(u), ()):
            if used[v]:
                continue
            nodes += 1
            ok = True
            for gu, hu in assigned.items():
                if g.has_edge(u, gu) != h.has_edge(v, hu):
                    ok = False
                    break
            if not ok:
                continue
            assigned[u] = v
            used[v] = True
            done = extend(depth + 1)
            del assigned[u]
            used[v] = False
            if done and not enumerate_all:
                return True
        return False

    extend(0)
    if witness[0] is not None:
        assert apply_permutation(h, witness[0]) == g
    return OracleResult(witness[0], count if enumerate_all else None, nodes)


def brute_force_automorphisms(g: Graph) -> OracleResult:
    """Count all adjacency-preserving relabelings of g onto itself."""
    return brute_force_isomorphism(g, g, enumerate_all=True)


def triangle_partition_exists(g: Graph) -> bool:
    """Whether the vertex set splits into vertex-disjoint triangles."""
    if g.n % 3 != 0:
        return False
    if g.n == 0:
        return True

    def split(remaining: frozenset[int]) -> bool:
        if not remaining:
            return True
        u = min(remaining)
        rest = remaining - {u}
        nbrs = sorted(set(g.neighbors[u]) & rest)
        for ai, a in enumerate(nbrs):
            for b in nbrs[ai + 1 :]:
                if g.has_edge(a, b) and split(rest - {a, b}):
                    return True
        return False

    return split(frozenset(range(g.n)))
