"""Named fixture graphs shared across the test modules."""

from itertools import combinations

from triblock import Graph

PRISM_TEXT = "6 9\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5\n"


def k_n(n):
    return Graph(n, list(combinations(range(n), 2)))


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path3():
    return Graph(3, [(0, 1), (1, 2)])


def prism():
    # Triangular prism: two triangles joined by a perfect matching; 3-regular.
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def two_triangles():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def octahedron():
    # K_{2,2,2}: complete minus the perfect matching 0-1, 2-3, 4-5.
    skip = ({0, 1}, {2, 3}, {4, 5})
    return Graph(6, [(u, v) for u, v in combinations(range(6), 2) if {u, v} not in skip])


def k33():
    return Graph(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def ladder9():
    # Three triangles with one cross triangle through their first corners.
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7), (7, 8), (6, 8)]
    return Graph(9, tri + [(0, 3), (3, 6), (6, 0)])


def asym9():
    # Triangle-tiled 9-vertex graph with a trivial automorphism group (no
    # 6-vertex triangle-tiled graph is asymmetric: the cross-edge pattern
    # between two triangles always leaves a swap symmetry).
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7), (7, 8), (6, 8)]
    return Graph(9, tri + [(0, 3), (0, 4), (1, 6), (3, 7)])


def triangle_count(g):
    """Independent triangle scan used as the oracle for candidate counts."""
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )
