import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triblock import (
    Graph,
    ParseError,
    apply_permutation,
    closed_neighborhood,
    induced_subgraph,
    is_connected,
    is_regular,
    open_neighborhood,
    parse_edge_list,
    to_edge_list_text,
    vertex_in_triangle,
)
from triblock.perms import inverse

from graphdata import PRISM_TEXT, cycle, k_n, path3, petersen, prism, two_triangles


class TestParse:
    def test_k3(self):
        g = parse_edge_list("3 3\n0 1\n1 2\n0 2")
        assert g == k_n(3)

    def test_edgeless(self):
        g = parse_edge_list("3 0")
        assert g.n == 3 and g.edge_count() == 0

    def test_prism_degrees(self):
        g = parse_edge_list(PRISM_TEXT)
        assert g.degrees() == (3, 3, 3, 3, 3, 3)

    def test_bytes_input(self):
        assert parse_edge_list(PRISM_TEXT.encode()) == prism()

    def test_comments_and_blanks_ignored(self):
        g = parse_edge_list("# triangle\n\n3 3\n0 1\n# mid\n1 2\n0 2\n")
        assert g == k_n(3)

    @pytest.mark.parametrize(
        "text,line",
        [
            ("nope\n0 1", 1),
            ("3 1\n0 3", 2),
            ("3 1\n0 0", 2),
            ("3 2\n0 1\n1 0", 3),
            ("3 2\n0 1", 2),
            ("3 1\n0 1\n1 2", 3),
            ("3 1\n0 1 2", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line

    def test_roundtrip(self):
        for g in (prism(), k_n(4), Graph(5), petersen()):
            assert parse_edge_list(to_edge_list_text(g)) == g


class TestNeighborhoods:
    def test_open_k3(self):
        assert open_neighborhood(k_n(3), 0) == {1, 2}

    def test_open_prism(self):
        assert open_neighborhood(prism(), 0) == {1, 2, 3}

    def test_open_edgeless(self):
        assert open_neighborhood(Graph(3), 0) == frozenset()

    def test_closed(self):
        assert closed_neighborhood(k_n(3), 0) == {0, 1, 2}
        assert closed_neighborhood(prism(), 0) == {0, 1, 2, 3}
        assert closed_neighborhood(Graph(3), 2) == {2}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            open_neighborhood(k_n(3), 3)
        with pytest.raises(ValueError):
            closed_neighborhood(k_n(3), -1)


class TestInduced:
    def test_prism_triangle(self):
        assert induced_subgraph(prism(), {0, 1, 2}) == k_n(3)

    def test_empty(self):
        assert induced_subgraph(prism(), set()).n == 0

    def test_single_edge(self):
        sub = induced_subgraph(k_n(3), {0, 1})
        assert sub.n == 2 and sub.has_edge(0, 1)

    def test_all_vertices_identity(self):
        g = prism()
        assert induced_subgraph(g, range(g.n)) == g

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(k_n(3), {0, 5})


class TestPredicates:
    def test_prism(self):
        assert is_connected(prism()) and is_regular(prism())

    def test_path(self):
        assert is_connected(path3()) and not is_regular(path3())

    def test_two_triangles_disconnected(self):
        assert not is_connected(two_triangles())

    def test_empty_graph_connected(self):
        assert is_connected(Graph(0)) and is_regular(Graph(0))

    def test_triangle_membership(self):
        assert vertex_in_triangle(k_n(3), 0)
        for v in range(5):
            assert not vertex_in_triangle(cycle(5), v)
        # Petersen has girth 5: no vertex lies in a triangle.
        for v in range(10):
            assert not vertex_in_triangle(petersen(), v)

    def test_triangle_membership_out_of_range(self):
        with pytest.raises(ValueError):
            vertex_in_triangle(k_n(3), 7)


class TestApplyPermutation:
    def test_complete_fixed(self):
        assert apply_permutation(k_n(3), (2, 0, 1)) == k_n(3)

    def test_identity(self):
        assert apply_permutation(prism(), tuple(range(6))) == prism()

    def test_path_reversal(self):
        assert apply_permutation(path3(), (2, 1, 0)) == path3()

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            apply_permutation(k_n(3), (0, 0, 1))
        with pytest.raises(ValueError):
            apply_permutation(k_n(3), (0, 1))


def _random_graph(n: int, mask: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@st.composite
def graph_and_perm(draw):
    n = draw(st.integers(min_value=0, max_value=8))
    mask = draw(st.integers(min_value=0, max_value=2 ** (n * (n - 1) // 2) - 1 if n > 1 else 0))
    p = draw(st.permutations(list(range(n))))
    return _random_graph(n, mask), tuple(p)


@settings(max_examples=80, deadline=None)
@given(graph_and_perm())
def test_apply_permutation_roundtrip(gp):
    g, p = gp
    assert apply_permutation(apply_permutation(g, p), inverse(p)) == g


@settings(max_examples=80, deadline=None)
@given(graph_and_perm())
def test_apply_permutation_preserves_degrees(gp):
    g, p = gp
    assert apply_permutation(g, p).degree_multiset() == g.degree_multiset()


@settings(max_examples=60, deadline=None)
@given(graph_and_perm())
def test_triangle_membership_matches_neighborhood_subgraph(gp):
    g, _ = gp
    for v in range(g.n):
        expected = induced_subgraph(g, open_neighborhood(g, v)).edge_count() > 0
        assert vertex_in_triangle(g, v) == expected


def test_adjacency_is_read_only():
    g = prism()
    with pytest.raises(ValueError):
        g.adj[0, 1] = 0
