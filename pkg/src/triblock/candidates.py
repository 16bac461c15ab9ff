"""Candidate assignments of target-graph vertices to one block's positions.

For a block at positions i..j (j = i + 2) the candidates are ordered
triangles of the target graph H: the end position can be any vertex, the
middle any neighbor of it, the start any common neighbor of both.  A
height-3 rooted tree materializes that choice structure; its root-to-leaf
paths are exactly the ordered triangles, so all blocks share one triple
list re-dressed with block positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels
from .arrange import Block
from .graphs import Graph

__all__ = [
    "SearchTree",
    "CandidateSet",
    "build_search_tree",
    "enumerate_candidates",
    "candidate_triples",
    "candidate_set_for_block",
]


@dataclass(frozen=True)
class SearchTree:
    """Rooted choice tree for one block over the target graph.

    Level 1 holds every vertex (candidates for the block's end position),
    level 2 the neighbors of the level-1 vertex (middle position), level 3
    the common neighbors of both ancestors (start position).  Vertices on a
    root-to-leaf path are distinct, so every leaf path is an ordered triangle.
    """

    h: Graph
    block: Block

    def level1(self) -> tuple[int, ...]:
        return tuple(range(self.h.n))

    def children(self, u: int) -> tuple[int, ...]:
        return self.h.neighbors[u]

    def grandchildren(self, u: int, w: int) -> tuple[int, ...]:
        common = set(self.h.neighbors[u]) & set(self.h.neighbors[w])
        common -= {u, w}
        return tuple(sorted(common))

    def leaf_paths(self) -> Iterator[tuple[int, int, int]]:
        for u in self.level1():
            for w in self.children(u):
                for y in self.grandchildren(u, w):
                    yield (u, w, y)

    def level_sizes(self) -> tuple[int, int, int]:
        n1 = self.h.n
        n2 = sum(len(self.children(u)) for u in self.level1())
        n3 = sum(
            len(self.grandchildren(u, w))
            for u in self.level1()
            for w in self.children(u)
        )
        return (n1, n2, n3)


@dataclass(frozen=True)
class CandidateSet:
    """Per-block candidate assignments.

    ``triples`` holds image vertices in path order (end, middle, start
    position); n is the target graph's vertex count, kept for bound checks.
    """

    block: Block
    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.triples)

    def maps(self) -> Iterator[dict[int, int]]:
        """Each candidate as a position-to-vertex assignment."""
        i, mid, j = self.block.positions()
        for end_v, mid_v, start_v in self.triples:
            yield {j: end_v, mid: mid_v, i: start_v}

    def image_triples(self) -> set[frozenset[int]]:
        return {frozenset(t) for t in self.triples}


def build_search_tree(h: Graph, block: Block) -> SearchTree:
    return SearchTree(h=h, block=block)


def enumerate_candidates(tree: SearchTree) -> CandidateSet:
    """Collect the tree's leaf paths into a candidate set."""
    triples = tuple(tree.leaf_paths())
    cs = CandidateSet(block=tree.block, n=tree.h.n, triples=triples)
    assert len(cs) < max(tree.h.n, 2) ** 3
    return cs


def candidate_triples(h: Graph) -> np.ndarray:
    """Ordered triangles of h as an (t, 3) int32 array (fast path).

    Row order and content match the tree enumeration exactly; blocks differ
    only in where the triple lands, so one array serves every block.
    """
    return kernels.ordered_triangles(h.adj)


def candidate_set_for_block(h: Graph, block: Block, triples: np.ndarray | None = None) -> CandidateSet:
    """Dress the shared triple list with one block's positions."""
    if triples is None:
        triples = candidate_triples(h)
    return CandidateSet(
        block=block,
        n=h.n,
        triples=tuple((int(a), int(b), int(c)) for a, b, c in triples),
    )
