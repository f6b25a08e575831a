import networkx as nx
import pytest
from hypothesis import given, strategies as st

from morsegraph.complex import ComplexError, from_facets
from morsegraph.families import (
    FamilySpec,
    attach_path,
    build,
    extended_star,
    is_tree,
    p_wedge,
    path,
)


def graph(K):
    G = nx.Graph()
    G.add_nodes_from(K.vertices)
    G.add_edges_from(K.simplices(1))
    return G


def edges(K):
    return len(K.simplices(1))


class TestPath:
    def test_point(self):
        K = path(0)
        assert K.vertices == ("v0",) and edges(K) == 0

    def test_edge(self):
        assert path(1).facets == [("v0", "v1")]

    def test_four(self):
        K = path(4)
        assert len(K.vertices) == 5 and edges(K) == 4

    def test_negative(self):
        with pytest.raises(ComplexError):
            path(-1)


class TestExtendedStar:
    def test_small_isomorphisms(self):
        assert nx.is_isomorphic(graph(extended_star(0, 1)), graph(path(2)))
        assert nx.is_isomorphic(graph(extended_star(1, 1)), graph(path(3)))

    def test_counts(self):
        K = extended_star(0, 3)
        assert len(K.vertices) == 7 and edges(K) == 6

    def test_labels(self):
        assert set(extended_star(1, 2).vertices) == {"c", "d", "a1", "b1", "a2", "b2"}
        assert {"d1", "d2"} <= set(extended_star(2, 1).vertices)

    def test_rejects_empty(self):
        with pytest.raises(ComplexError):
            extended_star(0, 0)

    @given(st.integers(0, 4), st.integers(0, 4))
    def test_edge_count(self, m, n):
        if m + n == 0:
            return
        K = extended_star(m, n)
        assert edges(K) == m + 2 * n
        assert is_tree(K)


class TestPWedge:
    @pytest.mark.parametrize("n,l", [(1, 1), (2, 1), (2, 3)])
    def test_zero_length_is_a_star(self, n, l):
        assert nx.is_isomorphic(graph(p_wedge(0, (0, n), (0, l))), graph(extended_star(0, n + l)))

    def test_counts(self):
        assert edges(p_wedge(3, (0, 2), (0, 2))) == 11
        assert edges(p_wedge(1, (1, 1), (1, 1))) == 7

    @pytest.mark.parametrize("t,first", [(3, "v0"), (4, "v-1"), (5, "v-2"), (0, "v0")])
    def test_path_labels_follow_residue(self, t, first):
        K = p_wedge(t, (0, 1), (0, 1))
        u = t // 3
        path_vertices = [v for v in K.vertices if v.startswith("v")]
        assert path_vertices[0] == first and path_vertices[-1] == f"v{3 * u}"

    def test_leaf_names(self):
        K = p_wedge(2, (1, 1), (1, 1))
        assert {"w", "w'", "a1", "b1", "c1", "d1"} <= set(K.vertices)

    @given(st.integers(0, 6), st.integers(0, 2), st.integers(0, 3),
           st.integers(0, 2), st.integers(0, 3))
    def test_is_tree(self, t, m, n, k, l):
        K = p_wedge(t, (m, n), (k, l))
        assert is_tree(K)
        assert edges(K) == t + m + 2 * n + k + 2 * l


class TestAttachPath:
    def test_point(self):
        K = attach_path(from_facets([["x"]]), "x", 3)
        assert nx.is_isomorphic(graph(K), graph(path(3)))

    def test_extends_path(self):
        assert nx.is_isomorphic(graph(attach_path(path(1), "v1", 1)), graph(path(2)))

    def test_counts(self):
        assert edges(attach_path(extended_star(0, 2), "c", 3)) == 7

    def test_unknown_vertex(self):
        with pytest.raises(ComplexError):
            attach_path(path(1), "zz", 1)

    def test_fresh_names_avoid_clashes(self):
        K = attach_path(from_facets([["p1", "x"]]), "x", 2)
        assert len(K.vertices) == 4 and is_tree(K)


class TestSpec:
    def test_names_and_build(self):
        assert FamilySpec("path", (4,)).name == "P_4"
        assert FamilySpec("extended_star", (1, 3)).name == "S_{1,3}"
        spec = FamilySpec("attach_path", (3,), base=FamilySpec("path", (1,)), at="v0")
        assert edges(build(spec)) == 4

    def test_validation(self):
        with pytest.raises(ComplexError):
            FamilySpec("path", (1, 2))
        with pytest.raises(ComplexError):
            FamilySpec("cycle", (3,))
        with pytest.raises(ComplexError):
            FamilySpec("attach_path", (3,))

    def test_not_a_tree(self):
        assert not is_tree(from_facets([["a", "b"], ["b", "c"], ["a", "c"]]))
        assert not is_tree(from_facets([["a", "b"], ["c"]]))
