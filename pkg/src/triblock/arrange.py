"""Ordering a graph's vertices into consecutive three-vertex triangle blocks.

A successful arrangement lists all n vertices so that positions
[3k-2, 3k] (1-based) hold the k-th block, a triangle of the input graph.
Within a block the end position holds the block's first-chosen vertex, the
middle its second (a neighbor of the first), and the start its third (a
common neighbor of both); the rest of the pipeline leans on every block
being a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

__all__ = ["Infeasible", "Block", "Arrangement", "rearrange", "block_pattern"]

NOT_DIVISIBLE_BY_3 = "not_divisible_by_3"
NO_TRIANGLE_BLOCK = "no_triangle_block"


class Infeasible(Exception):
    """The graph admits no arrangement; ``code`` is machine-readable."""

    def __init__(self, code: str, at_block: int | None = None):
        self.code = code
        self.at_block = at_block
        msg = code if at_block is None else f"{code} (at block {at_block})"
        super().__init__(msg)


@dataclass(frozen=True)
class Block:
    """One three-position segment: positions i..j with j = i + 2 (1-based).

    ``vertices`` lists the original vertex ids in choice order: the vertex at
    position j first, then j-1, then i.
    """

    k: int
    i: int
    j: int
    vertices: tuple[int, int, int]

    def positions(self) -> tuple[int, int, int]:
        return (self.i, self.i + 1, self.j)


@dataclass(frozen=True)
class Arrangement:
    """The ordered vertex list w (1-based positions) and its blocks."""

    w: tuple[int, ...]
    blocks: tuple[Block, ...]

    @property
    def x(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return len(self.w)

    def vertex_at(self, position: int) -> int:
        if not (1 <= position <= len(self.w)):
            raise ValueError(f"position {position} out of range 1..{len(self.w)}")
        return self.w[position - 1]


def _ordered(vertices, n: int, policy: int):
    # The tie-break policy rotates the vertex order; policy 0 is ascending id.
    return sorted(vertices, key=lambda v: ((v + policy) % n, v))


def rearrange(g: Graph, seed: int = 0, policy: int = 0) -> Arrangement:
    """Label vertices into triangle blocks, backtracking over all choices.

    Block 1 starts at ``seed``; each later block starts at the first unlabeled
    vertex (in policy order), then picks a neighbor and a common neighbor from
    the unlabeled vertices.  Backtracking over the neighbor choices makes this
    succeed exactly when a perfect triangle tiling exists.  Raises Infeasible
    with NOT_DIVISIBLE_BY_3 or NO_TRIANGLE_BLOCK (with the deepest block
    reached) otherwise.
    """
    n = g.n
    if n == 0:
        return Arrangement(w=(), blocks=())
    if not (0 <= seed < n):
        raise ValueError(f"seed {seed} out of range for n={n}")
    if n % 3 != 0:
        raise Infeasible(NOT_DIVISIBLE_BY_3)

    chosen: list[tuple[int, int, int]] = []
    deepest = 1

    def fill(k: int, pivot: int, unlabeled: set[int]) -> bool:
        nonlocal deepest
        deepest = max(deepest, k)
        for b in _ordered(unlabeled & set(g.neighbors[pivot]), n, policy):
            common = unlabeled & set(g.neighbors[pivot]) & set(g.neighbors[b])
            common.discard(b)
            for c in _ordered(common, n, policy):
                chosen.append((pivot, b, c))
                rest = unlabeled - {b, c}
                if not rest:
                    return True
                nxt = _ordered(rest, n, policy)[0]
                if fill(k + 1, nxt, rest - {nxt}):
                    return True
                chosen.pop()
        return False

    if not fill(1, seed, set(range(n)) - {seed}):
        raise Infeasible(NO_TRIANGLE_BLOCK, at_block=deepest)

    w: list[int] = []
    blocks: list[Block] = []
    for k, (first, second, third) in enumerate(chosen, start=1):
        w.extend((third, second, first))
        blocks.append(
            Block(k=k, i=3 * k - 2, j=3 * k, vertices=(first, second, third))
        )
    return Arrangement(w=tuple(w), blocks=tuple(blocks))


def block_pattern(a: Arrangement, g: Graph, k: int) -> Graph:
    """Induced subgraph on block k's vertices in position order (always K3)."""
    if not (1 <= k <= a.x):
        raise ValueError(f"block index {k} out of range 1..{a.x}")
    block = a.blocks[k - 1]
    order = [a.vertex_at(p) for p in block.positions()]
    return Graph(3, [(p, q) for p in range(3) for q in range(p + 1, 3)
                     if g.has_edge(order[p], order[q])])
