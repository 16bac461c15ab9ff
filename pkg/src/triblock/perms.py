"""Permutation algebra, sparse position maps, and generating-set reduction.

Permutations are dense image tuples: ``p[x]`` is the image of point x.
Partial position-to-vertex maps are plain dicts; only their union/collision
semantics live here, everything else belongs to the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Permutation",
    "identity",
    "is_identity",
    "compose",
    "inverse",
    "from_cycles",
    "direct_product",
    "GenSet",
    "CapExceeded",
    "closure",
    "reduce_generators",
]

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def _check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p!r}")


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Composition a after b: ``compose(a, b)[x] == a[b[x]]``."""
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x] for x in b)


def inverse(a: Sequence[int]) -> Permutation:
    inv = [0] * len(a)
    for x, y in enumerate(a):
        inv[y] = x
    return tuple(inv)


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation on 0..n-1 from disjoint cycles (test fixtures)."""
    images = list(range(n))
    for cycle in cycles:
        for x, y in zip(cycle, cycle[1:]):
            images[x] = y
        if cycle:
            images[cycle[-1]] = cycle[0]
    p = tuple(images)
    _check_perm(p)
    return p


def direct_product(
    a: Mapping[int, int], b: Mapping[int, int]
) -> dict[int, int] | None:
    """Union of two position maps with disjoint supports.

    Returns None when the two maps claim the same image vertex (the caller
    drops such pairs); overlapping position supports are a caller bug.
    """
    overlap = a.keys() & b.keys()
    if overlap:
        raise ValueError(f"overlapping position support: {sorted(overlap)}")
    if set(a.values()) & set(b.values()):
        return None
    merged = dict(a)
    merged.update(b)
    return merged


class CapExceeded(RuntimeError):
    """Closure enumeration passed the element cap."""

    def __init__(self, cap: int):
        super().__init__(f"closure exceeds cap of {cap} elements")
        self.cap = cap


@dataclass(frozen=True)
class GenSet:
    """A reduced generating set, plus an optional coset representative."""

    n: int
    generators: tuple[Permutation, ...] = field(default=())
    representative: Permutation | None = None

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.n:
                raise ValueError(f"generator size {len(g)} != n={self.n}")


def closure(gens: GenSet, cap: int) -> frozenset[Permutation]:
    """Breadth-first closure of the generators under composition.

    Raises CapExceeded once more than ``cap`` elements are seen.  The empty
    generating set closes to {identity}.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    start = identity(gens.n)
    elements = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens.generators:
                y = compose(g, x)
                if y not in elements:
                    elements.add(y)
                    if len(elements) > cap:
                        raise CapExceeded(cap)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elements)


def _least_moved_point(p: Sequence[int]) -> int:
    for x, y in enumerate(p):
        if x != y:
            return x
    raise ValueError("identity has no moved point")


class _SiftForest:
    """Sifting filter keeping at most n-1 generators of the same group.

    Each stored permutation s contributes the undirected edge
    (lmp(s), s[lmp(s)]) where lmp is the least moved point; the invariant is
    that these edges form a forest on the n points, which bounds the stored
    set by n-1.  Inserting an element that would close a cycle replaces it by
    the product around that cycle, anchored at the cycle's minimum vertex so
    the residue fixes every point up to that minimum; the residue is strictly
    smaller under the potential sum(2**(n - lmp)) and the generated group is
    unchanged at every step.
    """

    def __init__(self, n: int):
        self.n = n
        self.by_edge: dict[tuple[int, int], Permutation] = {}
        self.adj: dict[int, set[int]] = {}

    def _path(self, src: int, dst: int) -> list[int] | None:
        """Forest path from src to dst as a vertex list, None if disconnected."""
        if src not in self.adj or dst not in self.adj:
            return None
        prev: dict[int, int] = {src: src}
        queue = [src]
        while queue:
            v = queue.pop(0)
            if v == dst:
                path = [v]
                while path[-1] != src:
                    path.append(prev[path[-1]])
                path.reverse()
                return path
            for u in sorted(self.adj.get(v, ())):
                if u not in prev:
                    prev[u] = v
                    queue.append(u)
        return None

    def _add_edge(self, i: int, j: int, p: Permutation) -> None:
        self.by_edge[(i, j)] = p
        self.adj.setdefault(i, set()).add(j)
        self.adj.setdefault(j, set()).add(i)

    def _remove_edge(self, i: int, j: int) -> Permutation:
        p = self.by_edge.pop((i, j))
        self.adj[i].discard(j)
        self.adj[j].discard(i)
        return p

    def _step_factor(self, u: int, v: int) -> Permutation:
        """The stored generator (or inverse) moving u to v along edge {u, v}."""
        if u < v:
            return self.by_edge[(u, v)]
        return inverse(self.by_edge[(v, u)])

    def insert(self, p: Permutation) -> None:
        work = [p]
        while work:
            q = work.pop()
            if is_identity(q):
                continue
            i = _least_moved_point(q)
            j = q[i]  # j > i: the image of the least moved point is moved too
            path = self._path(i, j)
            if path is None:
                self._add_edge(i, j, q)
                continue
            # Closed walk around the cycle: i .. j along the forest, then back
            # to i via q^-1.  Rotate it to start at the cycle minimum m; every
            # participating element has lmp >= m, so the walk product fixes
            # all points <= m and its residue sits strictly above m.
            m = min(path)
            start = path.index(m)
            steps: list[tuple[int, int]] = list(zip(path, path[1:])) + [(j, i)]
            steps = steps[start:] + steps[:start]
            h = identity(self.n)
            for u, v in steps:
                if (u, v) == (j, i):
                    factor = inverse(q)
                else:
                    factor = self._step_factor(u, v)
                h = compose(factor, h)
            if m == i:
                # q's own edge touches the minimum: drop q, keep the forest.
                work.append(h)
            else:
                # Swap q in for one forest generator at m; the removed one is
                # a product of h and the remaining cycle elements.
                x = steps[0][1]
                self._remove_edge(m, x)
                self._add_edge(i, j, q)
                work.append(h)


def reduce_generators(perms: Iterable[Sequence[int]], n: int) -> GenSet:
    """Reduce a permutation set to at most n-1 generators of the same group."""
    forest = _SiftForest(n)
    for p in sorted({tuple(p) for p in perms}):
        if len(p) != n:
            raise ValueError(f"permutation size {len(p)} != n={n}")
        _check_perm(p)
        forest.insert(p)
    gens = tuple(sorted(forest.by_edge.values()))
    assert len(gens) <= max(0, n - 1)
    return GenSet(n=n, generators=gens)
