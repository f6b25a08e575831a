"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from morsegraph.complex import from_facets


@st.composite
def complexes(draw, max_vertices: int = 6, max_size: int = 4, max_facets: int = 6):
    n = draw(st.integers(1, max_vertices))
    labels = [f"x{i}" for i in range(n)]
    facets = draw(st.lists(st.sets(st.sampled_from(labels), min_size=1, max_size=max_size),
                           min_size=1, max_size=max_facets))
    return from_facets([sorted(f, key=labels.index) for f in facets])


@st.composite
def trees(draw, min_vertices: int = 1, max_vertices: int = 7):
    n = draw(st.integers(min_vertices, max_vertices))
    if n == 1:
        return from_facets([["t0"]])
    edges = [(f"t{draw(st.integers(0, i - 1))}", f"t{i}") for i in range(1, n)]
    return from_facets(edges, order=[f"t{i}" for i in range(n)])


def int_matrices(max_rows: int = 8, max_cols: int = 8, lo: int = -9, hi: int = 9):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r)))
