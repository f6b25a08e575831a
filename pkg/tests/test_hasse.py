from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from morsegraph.complex import ComplexError, from_facets, is_flag, strong_collapse_core
from morsegraph.families import extended_star, path
from morsegraph.hasse import (
    HasseDiagram,
    ResourceLimitError,
    alternating_cycle_oracle,
    closed_vpath_oracle,
    critical_simplices,
    f_of_poset,
    hasse,
    is_acyclic_matching,
    is_gradient_vector_field,
    morse_complex,
    primitive_gvfs,
    remove_nodes,
)
from morsegraph.homology import SphereWedge, matches_signature, reduced_homology

import oracles
from strategies import complexes, trees

P1 = from_facets([["a", "b"]])
P2 = from_facets([["c", "a"], ["a", "b"]])
TRIANGLE = from_facets([["a", "b"], ["b", "c"], ["a", "c"]])
FULL = from_facets([["a", "b", "c"]])


class TestHasse:
    def test_sizes(self):
        assert (len(hasse(P1).nodes), len(hasse(P1).edges)) == (3, 2)
        assert (len(hasse(P2).nodes), len(hasse(P2).edges)) == (5, 4)
        assert (len(hasse(FULL).nodes), len(hasse(FULL).edges)) == (7, 9)

    @given(complexes())
    def test_edge_count_formula(self, K):
        H = hasse(K)
        assert len(H.edges) == sum(len(s) for s in K.simplices() if len(s) > 1)
        assert {(frozenset(a), frozenset(b)) for a, b in H.edges} == set(oracles.covers(K.simplex_set()))

    def test_text_export(self):
        assert hasse(P1).to_text() == "a -> a,b\nb -> a,b\n"

    def test_bad_edges_rejected(self):
        with pytest.raises(ComplexError):
            HasseDiagram((("a",),), ((("a",), ("a", "b")),))
        with pytest.raises(ComplexError):
            HasseDiagram((("a",), ("a", "b", "c")), ((("a",), ("a", "b", "c")),))


class TestRemoveNodes:
    def test_cut_leaf_center(self):
        H = remove_nodes(hasse(P2), [("c",)])
        assert set(H.nodes) == {("a",), ("b",), ("c", "a"), ("a", "b")}
        assert set(H.edges) == {(("a",), ("c", "a")), (("a",), ("a", "b")), (("b",), ("a", "b"))}

    def test_identity_and_everything(self):
        H = hasse(P2)
        assert remove_nodes(H, []) == H
        empty = remove_nodes(H, H.nodes)
        assert empty.nodes == () and empty.edges == ()

    def test_absent_node(self):
        with pytest.raises(ComplexError):
            remove_nodes(hasse(P1), [("z",)])


class TestAcyclicMatching:
    def test_empty_and_single(self):
        assert is_acyclic_matching(hasse(P1), [])
        assert is_acyclic_matching(hasse(P1), [(("a",), ("a", "b"))])

    def test_triangle_cycle(self):
        M = [(("a",), ("a", "b")), (("b",), ("b", "c")), (("c",), ("a", "c"))]
        res = is_acyclic_matching(hasse(TRIANGLE), M)
        assert not res
        assert res.cycle is not None and len(res.cycle) == 6

    def test_conflict_reported(self):
        res = is_acyclic_matching(hasse(P1), [(("a",), ("a", "b")), (("b",), ("a", "b"))])
        assert not res and res.conflict == ("a", "b")

    def test_foreign_edge(self):
        with pytest.raises(ComplexError):
            is_acyclic_matching(hasse(P1), [(("a",), ("a", "c"))])

    @pytest.mark.parametrize("K", [path(3), TRIANGLE, FULL], ids=["P3", "triangle", "2-simplex"])
    def test_exhaustive_against_oracles(self, K):
        H = hasse(K)
        cells = K.simplex_set()
        down = H.lower_neighbors()
        covers = lambda a, b: a in down[b]  # noqa: E731
        for M in oracles.all_matchings(H.edges):
            fast = bool(is_acyclic_matching(H, M))
            ref = oracles.matching_is_acyclic(cells, [(frozenset(a), frozenset(b)) for a, b in M])
            assert fast == ref == (not alternating_cycle_oracle(M, covers))


class TestFOfPoset:
    def test_single_edge(self):
        F = f_of_poset(hasse(P1))
        assert F.f_vector() == [2]

    def test_cut_diagram_is_s0(self):
        h = reduced_homology(f_of_poset(remove_nodes(hasse(P2), [("c",)])))
        assert matches_signature(h, SphereWedge(0, 1))

    def test_empty_diagram(self):
        assert f_of_poset(HasseDiagram((), ())).is_empty()

    def test_budget(self):
        with pytest.raises(ResourceLimitError):
            f_of_poset(hasse(path(4)), budget=5)


class TestPrimitives:
    def test_counts(self):
        assert [p.name for p in primitive_gvfs(P1)] == ["(a)b", "(b)a"]
        assert len(primitive_gvfs(P2)) == 4
        assert len(primitive_gvfs(extended_star(0, 2))) == 8

    def test_higher_names(self):
        names = [p.name for p in primitive_gvfs(FULL)]
        assert "(a,b|a,b,c)" in names and len(names) == 9


class TestGradient:
    def test_examples(self):
        K = path(2)
        assert is_gradient_vector_field(K, [(("v0",), ("v0", "v1")), (("v2",), ("v1", "v2"))])
        assert is_gradient_vector_field(K, [(("v0",), ("v0", "v1")), (("v1",), ("v1", "v2"))])
        cyc = [(("a",), ("a", "b")), (("b",), ("b", "c")), (("c",), ("a", "c"))]
        assert not is_gradient_vector_field(TRIANGLE, cyc)
        assert closed_vpath_oracle(TRIANGLE, cyc)

    def test_not_a_cover(self):
        with pytest.raises(ComplexError):
            is_gradient_vector_field(FULL, [(("a",), ("a", "b", "c"))])

    def test_double_use_is_not_a_field(self):
        assert not is_gradient_vector_field(P1, [(("a",), ("a", "b")), (("b",), ("a", "b"))])

    @given(complexes(max_vertices=5), st.data())
    def test_walk_oracle_agrees(self, K, data):
        edges = list(hasse(K).edges)
        chosen = data.draw(st.lists(st.sampled_from(edges), unique=True, max_size=6)) if edges else []
        used, field = set(), []
        for lo, up in chosen:
            if lo not in used and up not in used:
                field.append((lo, up))
                used.update((lo, up))
        assert is_gradient_vector_field(K, field) == (not closed_vpath_oracle(K, field))

    def test_critical(self):
        assert len(critical_simplices(P1, [])) == 3
        assert critical_simplices(path(1), [(("v0",), ("v0", "v1"))]) == {("v1",)}


class TestMorseComplex:
    def test_edge_gives_two_points(self):
        M = morse_complex(P1)
        assert M.simplex_set() == {frozenset(["(a)b"]), frozenset(["(b)a"])}

    def test_p2_collapses(self):
        core, _ = strong_collapse_core(morse_complex(path(2)))
        assert len(core.vertices) == 1

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            morse_complex(path(5), cap=8)

    @pytest.mark.parametrize("K", [P1, P2, TRIANGLE, FULL, path(3), extended_star(1, 1),
                                   from_facets([["a", "b"], ["c", "d"]])],
                             ids=["P1", "P2", "triangle", "2-simplex", "P3", "S11", "2K2"])
    def test_against_enumeration(self, K):
        assert morse_complex(K).simplex_set() == oracles.morse_by_enumeration(K.simplex_set(), K.vertices)

    @given(complexes(max_vertices=4, max_size=3, max_facets=4))
    def test_random_against_enumeration(self, K):
        if len(hasse(K).edges) > 12:
            return
        assert morse_complex(K).simplex_set() == oracles.morse_by_enumeration(K.simplex_set(), K.vertices)

    @given(trees(max_vertices=7))
    def test_forest_path_equals_f_of_poset(self, K):
        M = morse_complex(K)
        assert M == f_of_poset(hasse(K))
        assert is_flag(M)

    def test_flag_iff_tree(self):
        assert not is_flag(morse_complex(TRIANGLE))
        assert is_flag(morse_complex(extended_star(1, 2)))

    @given(trees(max_vertices=6))
    def test_sharing_pairs_never_adjacent(self, K):
        M = morse_complex(K)
        pairs = {p.name: set(p) for p in primitive_gvfs(K)}
        for x, y in combinations(M.vertices, 2):
            if pairs[x] & pairs[y]:
                assert frozenset([x, y]) not in M.simplex_set()
