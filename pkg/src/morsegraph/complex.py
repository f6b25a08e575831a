"""Finite abstract simplicial complexes.

Simplices are stored as ascending tuples of vertex *indices* into the
complex's label order; the public API speaks in label tuples.  The empty
simplex is never stored; only the reduced chain complex knows about it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "ComplexError",
    "SimplicialComplex",
    "DominationWitness",
    "from_facets",
    "from_simplices",
    "star",
    "star_cluster",
    "is_flag",
    "find_dominated",
    "first_dominated",
    "delete_vertex",
    "strong_collapse_core",
    "join",
    "disjoint_union",
    "relabel",
]


class ComplexError(ValueError):
    """Invalid input for a complex operation (unknown vertex, bad order, ...)."""


class SimplicialComplex:
    """An immutable finite simplicial complex.

    Build instances with :func:`from_facets` or :func:`from_simplices`
    rather than calling the constructor directly.
    """

    __slots__ = ("_labels", "_index", "_by_dim", "_lookup", "_facets")

    def __init__(self, labels: Sequence[str], by_dim: list[list[tuple[int, ...]]],
                 facets: tuple[tuple[int, ...], ...]):
        self._labels = tuple(labels)
        self._index = {v: i for i, v in enumerate(self._labels)}
        self._by_dim = by_dim
        self._lookup = {}
        for simplices in by_dim:
            for pos, s in enumerate(simplices):
                self._lookup[s] = pos
        self._facets = facets

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertex labels in the complex's total order."""
        return self._labels

    @property
    def dim(self) -> int:
        return len(self._by_dim) - 1

    @property
    def facets(self) -> list[tuple[str, ...]]:
        return [self.labels_of(f) for f in self._facets]

    @property
    def facet_indices(self) -> tuple[tuple[int, ...], ...]:
        return self._facets

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ComplexError(f"unknown vertex {label!r}") from None

    def labels_of(self, simplex: Iterable[int]) -> tuple[str, ...]:
        return tuple(self._labels[i] for i in simplex)

    def key(self, simplex: Iterable[str]) -> tuple[int, ...]:
        """Index tuple of a label collection, sorted by vertex order."""
        return tuple(sorted({self.index(v) for v in simplex}))

    def simplex(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Normalize a label collection into an ordered simplex of this complex."""
        return self.labels_of(self.key(labels))

    def indexed(self, p: int) -> list[tuple[int, ...]]:
        """All ``p``-simplices as index tuples, in canonical (lexicographic) order."""
        if 0 <= p < len(self._by_dim):
            return self._by_dim[p]
        return []

    def simplices(self, p: int | None = None) -> list[tuple[str, ...]]:
        if p is None:
            return [self.labels_of(s) for layer in self._by_dim for s in layer]
        return [self.labels_of(s) for s in self.indexed(p)]

    def position(self, simplex: tuple[int, ...]) -> int:
        """Position of an index tuple within its dimension layer."""
        return self._lookup[simplex]

    def f_vector(self) -> list[int]:
        return [len(layer) for layer in self._by_dim]

    def __len__(self) -> int:
        return len(self._lookup)

    def __contains__(self, simplex) -> bool:
        try:
            key = self.key(simplex)
        except ComplexError:
            return False
        return key in self._lookup

    def contains_key(self, key: tuple[int, ...]) -> bool:
        return key in self._lookup

    def all_keys(self):
        for layer in self._by_dim:
            yield from layer

    def simplex_set(self) -> set[frozenset[str]]:
        """Label-set view, convenient for comparisons across complexes."""
        return {frozenset(self.labels_of(s)) for s in self.all_keys()}

    def graph_edges(self) -> list[tuple[int, int]]:
        return list(self.indexed(1))

    def neighbors(self) -> list[int]:
        """Adjacency bitmasks of the 1-skeleton, indexed by vertex."""
        adj = [0] * len(self._labels)
        for a, b in self.indexed(1):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    def is_empty(self) -> bool:
        return not self._by_dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.simplex_set() == other.simplex_set()

    def __hash__(self):
        return hash(frozenset(self.simplex_set()))

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={len(self._labels)}, f={self.f_vector()})"


@dataclass(frozen=True)
class DominationWitness:
    dominated: str
    dominator: str

    def __str__(self) -> str:
        return f"{self.dominated} <- {self.dominator}"


# -- construction ---------------------------------------------------------

def _resolve_order(facets: list[list[str]], order: Sequence[str] | None) -> list[str]:
    if order is None:
        seen: dict[str, None] = {}
        for f in facets:
            for v in f:
                seen.setdefault(v, None)
        return list(seen)
    order = list(order)
    if len(set(order)) != len(order):
        raise ComplexError("vertex order lists a label more than once")
    known = set(order)
    for f in facets:
        for v in f:
            if v not in known:
                raise ComplexError(f"label {v!r} missing from the supplied vertex order")
    return order


def _maximal(keys: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    keys = sorted(set(keys), key=lambda s: (-len(s), s))
    result: list[tuple[int, ...]] = []
    as_sets: list[frozenset[int]] = []
    for k in keys:
        ks = frozenset(k)
        if not any(ks <= f for f in as_sets):
            result.append(k)
            as_sets.append(ks)
    return sorted(result, key=lambda s: (len(s), s))


def _build(labels: Sequence[str], keys: set[tuple[int, ...]], facets=None) -> SimplicialComplex:
    top = max((len(k) for k in keys), default=0)
    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(top)]
    for k in keys:
        by_dim[len(k) - 1].append(k)
    for layer in by_dim:
        layer.sort()
    if facets is None:
        covered: set[tuple[int, ...]] = set()
        for layer in by_dim[1:]:
            for s in layer:
                for i in range(len(s)):
                    covered.add(s[:i] + s[i + 1:])
        facets = [k for layer in by_dim for k in layer if k not in covered]
    return SimplicialComplex(labels, by_dim, tuple(facets))


def from_facets(facets: Iterable[Iterable[str]], order: Sequence[str] | None = None) -> SimplicialComplex:
    """Downward closure of ``facets``.

    Redundant entries (faces of other entries) are absorbed.  The vertex
    order defaults to first appearance; an explicit ``order`` must list each
    label exactly once.  Labels in ``order`` that occur in no facet are
    dropped.
    """
    raw = [list(dict.fromkeys(f)) for f in facets]
    if any(not f for f in raw):
        raise ComplexError("facets must be nonempty")
    labels = _resolve_order(raw, order)
    used = {v for f in raw for v in f}
    labels = [v for v in labels if v in used]
    index = {v: i for i, v in enumerate(labels)}
    tops = _maximal(tuple(sorted(index[v] for v in f)) for f in raw)
    keys: set[tuple[int, ...]] = set()
    for f in tops:
        for r in range(1, len(f) + 1):
            keys.update(combinations(f, r))
    return _build(labels, keys, tops)


def from_simplices(labels: Sequence[str], keys: Iterable[tuple[int, ...]]) -> SimplicialComplex:
    """Complex from an already downward-closed family of index tuples.

    Used by generators (Morse complexes, stars) that enumerate every face
    themselves.  Closure is checked.
    """
    keys = set(keys)
    for k in keys:
        if len(k) > 1:
            for i in range(len(k)):
                face = k[:i] + k[i + 1:]
                if face not in keys:
                    raise ComplexError(f"family not closed: {k} lacks face {face}")
    used = sorted({v for k in keys for v in k})
    if len(used) != len(labels):
        remap = {old: new for new, old in enumerate(used)}
        labels = [labels[i] for i in used]
        keys = {tuple(remap[v] for v in k) for k in keys}
    return _build(labels, keys)


def _subcomplex(K: SimplicialComplex, facet_keys: Iterable[tuple[int, ...]]) -> SimplicialComplex:
    # facets of K form an antichain, so no absorption pass is needed
    facet_keys = list(facet_keys)
    used = sorted({v for f in facet_keys for v in f})
    remap = {old: new for new, old in enumerate(used)}
    tops = sorted((tuple(remap[v] for v in f) for f in facet_keys), key=lambda s: (len(s), s))
    keys: set[tuple[int, ...]] = set()
    for f in tops:
        for r in range(1, len(f) + 1):
            keys.update(combinations(f, r))
    return _build([K.vertices[i] for i in used], keys, tops)


# -- operations -----------------------------------------------------------

def star(K: SimplicialComplex, v: str) -> SimplicialComplex:
    """All simplices ``s`` of ``K`` with ``s ∪ {v}`` in ``K``."""
    i = K.index(v)
    return _subcomplex(K, (f for f in K.facet_indices if i in f))


def star_cluster(K: SimplicialComplex, sigma: Iterable[str]) -> SimplicialComplex:
    """Union of the stars of the vertices of ``sigma``."""
    key = K.key(sigma)
    if not K.contains_key(key):
        raise ComplexError(f"{K.labels_of(key)} is not a simplex of the complex")
    members = set(key)
    return _subcomplex(K, (f for f in K.facet_indices if members.intersection(f)))


def is_flag(K: SimplicialComplex) -> bool:
    """True iff every clique of the 1-skeleton spans a simplex."""
    adj = K.neighbors()
    for layer in K._by_dim[1:] if K.dim >= 1 else []:
        for s in layer:
            common = ~0
            for v in s:
                common &= adj[v]
            common >>= s[-1] + 1
            w = s[-1] + 1
            while common:
                if common & 1 and not K.contains_key(s + (w,)):
                    return False
                common >>= 1
                w += 1
    return True


def _dominators(K: SimplicialComplex, i: int, containing: list[list[int]]) -> list[int]:
    facets = containing[i]
    if not facets:
        return []
    common = set(K.facet_indices[facets[0]])
    for fi in facets[1:]:
        common.intersection_update(K.facet_indices[fi])
    common.discard(i)
    return sorted(common)


def _facet_incidence(K: SimplicialComplex) -> list[list[int]]:
    containing: list[list[int]] = [[] for _ in K.vertices]
    for fi, f in enumerate(K.facet_indices):
        for v in f:
            containing[v].append(fi)
    return containing


def find_dominated(K: SimplicialComplex) -> list[DominationWitness]:
    """Every ordered pair (v', v) such that each facet containing v' contains v."""
    containing = _facet_incidence(K)
    out = []
    for i, label in enumerate(K.vertices):
        for j in _dominators(K, i, containing):
            out.append(DominationWitness(label, K.vertices[j]))
    return out


def first_dominated(K: SimplicialComplex) -> DominationWitness | None:
    containing = _facet_incidence(K)
    for i, label in enumerate(K.vertices):
        doms = _dominators(K, i, containing)
        if doms:
            return DominationWitness(label, K.vertices[doms[0]])
    return None


def is_dominated_by(K: SimplicialComplex, dominated: str, dominator: str) -> bool:
    i, j = K.index(dominated), K.index(dominator)
    if i == j:
        return False
    return all(j in f for f in K.facet_indices if i in f)


def delete_vertex(K: SimplicialComplex, v: str) -> SimplicialComplex:
    """Full subcomplex on every vertex except ``v``."""
    i = K.index(v)
    kept = [tuple(x for x in f if x != i) for f in K.facet_indices]
    return from_facets((K.labels_of(f) for f in kept if f), order=K.vertices)


def strong_collapse_core(K: SimplicialComplex) -> tuple[SimplicialComplex, list[DominationWitness]]:
    """Delete the first dominated vertex until none is left.

    Returns the core together with the collapse sequence.  ``K`` is strongly
    collapsible exactly when the core is a single vertex.
    """
    steps = []
    while True:
        w = first_dominated(K)
        if w is None:
            return K, steps
        steps.append(w)
        K = delete_vertex(K, w.dominated)


def _fresh(label: str, taken: set[str]) -> str:
    while label in taken:
        label += "'"
    return label


def relabel(K: SimplicialComplex, mapping: dict[str, str]) -> SimplicialComplex:
    labels = [mapping.get(v, v) for v in K.vertices]
    if len(set(labels)) != len(labels):
        raise ComplexError("relabeling is not injective")
    return from_facets(([mapping.get(v, v) for v in f] for f in K.facets), order=labels)


def _disjoint_labels(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    taken = set(K.vertices)
    mapping = {}
    for v in L.vertices:
        new = _fresh(v, taken)
        taken.add(new)
        mapping[v] = new
    return relabel(L, mapping)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join ``K * L``; clashing labels of ``L`` get primes appended."""
    if K.is_empty():
        return L
    if L.is_empty():
        return K
    L = _disjoint_labels(K, L)
    facets = [f + g for f in K.facets for g in L.facets]
    return from_facets(facets, order=K.vertices + L.vertices)


def disjoint_union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    L = _disjoint_labels(K, L)
    return from_facets(K.facets + L.facets, order=K.vertices + L.vertices)


EMPTY = SimplicialComplex((), [], ())
