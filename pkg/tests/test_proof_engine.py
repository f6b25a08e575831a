import pytest
from hypothesis import given, strategies as st

from morsegraph import proof_engine as pe
from morsegraph import rules
from morsegraph.complex import ComplexError, from_facets, join
from morsegraph.families import extended_star, p_wedge, path
from morsegraph.hasse import critical_simplices, is_gradient_vector_field, morse_complex
from morsegraph.homology import POINT, SphereWedge, euler_characteristic, reduced_homology

import oracles
from strategies import complexes, trees


def fs(*names):
    return frozenset(names)


class TestRootedGVF:
    def test_edge(self):
        g = pe.rooted_gvf(path(1), "v0")
        assert [p.name for p in g.field] == ["(v1)v0"]

    def test_star(self):
        g = pe.rooted_gvf(extended_star(0, 2), "c")
        assert g.simplex == fs("(b1)a1", "(a1)c", "(b2)a2", "(a2)c")

    def test_middle_of_p2(self):
        assert pe.rooted_gvf(path(2), "v1").simplex == fs("(v0)v1", "(v2)v1")

    def test_needs_tree(self):
        with pytest.raises(ComplexError):
            pe.rooted_gvf(from_facets([["a", "b"], ["b", "c"], ["a", "c"]]), "a")

    @given(trees(), st.data())
    def test_single_critical_root(self, K, data):
        root = data.draw(st.sampled_from(K.vertices))
        g = pe.rooted_gvf(K, root)
        assert len(g.field) == len(K.vertices) - 1
        assert is_gradient_vector_field(K, g.field)
        assert critical_simplices(K, g.field) == {(root,)}


class TestDelta:
    def test_s01(self):
        # the two cells that pair b1 and a1 the other way round lie in no star
        d = pe.delta_decomposition(extended_star(0, 1), "c")
        assert d.delta1 == {fs("(a1)b1"), fs("(a1)b1", "(c)a1")}
        assert reduced_homology(d.delta0).is_trivial()

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_s0n_has_n_plus_one(self, n):
        d = pe.delta_decomposition(extended_star(0, n), "c")
        assert len(d.delta1) == n + 1
        V = fs(*(f"(a{i})b{i}" for i in range(1, n + 1)))
        assert all(V <= c for c in d.delta1)

    @given(trees(min_vertices=2, max_vertices=6), st.data())
    def test_partition(self, K, data):
        root = data.draw(st.sampled_from(K.vertices))
        d = pe.delta_decomposition(K, root)
        cells = d.morse.simplex_set()
        d0 = d.delta0.simplex_set()
        assert d0 | d.delta1 == cells and not d0 & d.delta1
        assert reduced_homology(d.delta0).is_trivial()


class TestPathFamilies:
    def test_u0(self):
        f = pe.path_families(0, 2, 2)
        assert f.R == f.L == frozenset() and f.B == {-1: frozenset()} and f.C == {}

    def test_u1(self):
        f = pe.path_families(3, 2, 2)
        assert f.R == fs("(v1)v2", "(v2)v3")
        assert f.L == fs("(v0)v1", "(v1)v2")
        assert f.C[0] == fs("(v1)v2")

    @pytest.mark.parametrize("t", range(0, 10))
    def test_invariants(self, t):
        n, l = 2, 3
        f = pe.path_families(t, n, l)
        u = t // 3
        assert f.B[-1] == f.L and f.B[u - 1] == f.R
        assert len(f.V) == n + l and len(f.R) == len(f.L) == 2 * u
        assert all(f.C[j] < f.B[j] for j in range(u))

    def test_wrong_family(self):
        with pytest.raises(ComplexError):
            pe.path_families(3, 1, 1, morse=morse_complex(path(3)))


class TestRules:
    def test_family_tokens(self):
        assert rules.parse_family("C[j+1]") == ("C", 1)
        assert rules.parse_family("B[j]") == ("B", 0)
        assert rules.parse_family("R") == ("R", 0)
        assert rules.parse_family("(v0)a1") is None

    def test_rule_counts(self):
        assert [len(rules.RULES[r]) for r in range(3)] == [4, 5, 9]

    def test_j_ranges_are_explicit(self):
        for table in rules.RULES.values():
            for rule in table:
                if "j" in rule.variables():
                    assert "j" in rule.over

    def test_shifted_index_ranges(self):
        rule = next(r for r in rules.RULES_1 if r.id == "3u+1.2")
        assert list(rule.ranges(2, 2, 3)["j"]) == [-1, 0, 1]


class TestGreedy:
    def test_cone(self):
        cone = join(from_facets([["x"]]), from_facets([["a", "b"], ["b", "c"], ["a", "c"]]))
        rep = pe.greedy_morse(cone.simplex_set(), restarts=0, goal={0: 1})
        assert rep.counts == {0: 1} and rep.acyclic

    def test_circle(self):
        rep = pe.greedy_morse(from_facets([["a", "b"], ["b", "c"], ["a", "c"]]).simplex_set())
        assert rep.counts == {0: 1, 1: 1} and rep.acyclic

    def test_delta0_of_s02(self):
        d = pe.delta_decomposition(extended_star(0, 2), "c")
        assert pe.greedy_morse(d.delta0.simplex_set(), goal={0: 1}).counts == {0: 1}

    def test_budget(self):
        S1 = from_facets([["a", "b"], ["b", "c"], ["a", "c"]]).simplex_set()
        with pytest.raises(pe.RestartBudgetExhausted) as info:
            pe.greedy_morse(S1, restarts=3, goal={0: 1})
        assert info.value.attempts == 4

    @given(complexes(max_vertices=5), st.integers(0, 10))
    def test_matching_is_valid(self, K, seed):
        rep = pe.greedy_morse(K.simplex_set(), seed=seed)
        pairs = [(p.lower, p.upper) for p in rep.pairs]
        used = [c for p in pairs for c in p]
        assert len(used) == len(set(used))
        assert set(used) | set(rep.critical) == K.simplex_set()
        assert oracles.matching_is_acyclic(K.simplex_set(), pairs)
        assert sum((-1) ** d * m for d, m in rep.counts.items()) == euler_characteristic(K)


class TestS0n:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_counts(self, n):
        rep = pe.explicit_matching_s0n(n)
        assert rep.ok
        want = {0: 1} if n == 1 else {0: 1, n: n - 1}
        assert rep.counts == want
        M = morse_complex(extended_star(0, n))
        assert pe.verify_forman(M, rep, pe.s0n_prediction(n))

    def test_injected_mismatch(self):
        rep = pe.explicit_matching_s0n(3)
        M = morse_complex(extended_star(0, 3))
        broken = pe.MatchingReport(rep.pairs[1:], rep.critical, True)
        assert not pe.verify_forman(M, broken, SphereWedge(3, 2))

    def test_wrong_expectation(self):
        rep = pe.explicit_matching_s0n(2)
        assert not pe.verify_forman(morse_complex(extended_star(0, 2)), rep, POINT)

    def test_collapsible_case(self):
        M = morse_complex(extended_star(2, 1))
        rep = pe.greedy_morse(M.simplex_set(), goal={0: 1})
        assert pe.verify_forman(M, rep, POINT)

    def test_json(self):
        data = pe.explicit_matching_s0n(2).to_json()
        assert data["counts"] == {"0": 1, "2": 1}
        assert {"rule": "s0n.1", "lower": ["(a1)b1", "(a2)b2"],
                "upper": ["(c)a1", "(a1)b1", "(a2)b2"]} in data["pairs"]


class TestMainMatching:
    @pytest.mark.parametrize("t,n,l", [(0, 1, 1), (0, 2, 3), (1, 1, 2), (3, 1, 2), (4, 2, 1)])
    def test_small_cases_verify(self, t, n, l):
        rep = pe.explicit_matching_main(t, n, l)
        assert rep.ok, [f.reason for f in rep.failures]
        want = pe.main_prediction(t, n, l)
        assert pe.verify_forman(morse_complex(p_wedge(t, (0, n), (0, l))), rep, want)

    def test_degenerate(self):
        rep = pe.explicit_matching_main(5, 1, 2)
        assert rep.status == "degenerate" and not rep.ok
        assert rep.homology is not None

    def test_residue_two_cycle_is_named(self):
        rep = pe.explicit_matching_main(2, 2, 2)
        cyc = [f for f in rep.failures if f.rule == "cycle"]
        assert cyc, "expected the combined matching to contain a closed V-path"
        for rid in ("3u+2.5", "3u+2.6", "3u+2.7", "3u+2.8"):
            assert rid in cyc[0].reason
        assert not any(f.rule.startswith("structure") for f in rep.failures)

    def test_bad_parameters(self):
        with pytest.raises(ComplexError):
            pe.explicit_matching_main(1, 0, 2)


class TestPredictions:
    def test_kozlov_table(self):
        got = [str(pe.kozlov_prediction(s)) for s in range(1, 8)]
        assert got == ["S^0", "point", "S^1", "S^2", "point", "S^3", "S^4"]
        assert pe.kozlov_prediction(0) is None

    def test_main(self):
        assert pe.main_prediction(3, 2, 2) == SphereWedge(6, 3)
        assert pe.main_prediction(1, 2, 2) == SphereWedge(5, 3)
        assert pe.main_prediction(2, 2, 2) == POINT
        assert pe.main_prediction(2, 1, 1) is None

    def test_mixed(self):
        assert pe.s1s1_prediction(3, 1, 1) == POINT
        assert pe.s1s0_prediction(1, 1, 2) == SphereWedge(4, 2)
        assert pe.s1s0_prediction(2, 1, 2) == SphereWedge(5, 1)


class TestSurgery:
    def test_s1n_legs(self):
        rep = pe.hasse_surgery_s1n(2)
        assert rep.ok and rep.signature == SphereWedge(2, 1)
        assert [leg.name for leg in rep.legs][:2] == ["direct", "collapse"]
        assert [str(w) for w in rep.collapse] == ["(c)a1 <- (d)c", "(c)a2 <- (d)c"]

    def test_mirror(self):
        a = pe.hasse_surgery_mixed(1, 2, 1, 0, 1)
        assert a.ok and a.signature == pe.s1s0_prediction(1, 1, 2)

    def test_invalid(self):
        with pytest.raises(ComplexError):
            pe.hasse_surgery_mixed(1, 1, 1, 0, 0)
        with pytest.raises(ComplexError):
            pe.hasse_surgery_s1n(0)


class TestLemmas:
    def test_domination_on_p2(self):
        K = from_facets([["a", "b"], ["b", "c"]])
        assert pe.check_domination_lemma(K, ("a", "b"), "c")

    def test_domination_in_s12(self):
        assert pe.check_domination_lemma(extended_star(1, 2), ("d", "c"), "a1")

    def test_domination_precondition(self):
        with pytest.raises(ComplexError):
            pe.check_domination_lemma(path(3), ("v1", "v2"), "v3")
        with pytest.raises(ComplexError):
            pe.check_domination_lemma(path(2), ("v0", "v1"), "v0")

    @pytest.mark.parametrize("K,v", [(path(1), "v0"), (extended_star(0, 2), "c"),
                                     (from_facets([["x"]]), "x"), (path(2), "v1")])
    def test_suspension(self, K, v):
        assert pe.check_suspension(K, v, 1)
