"""Hasse diagrams, acyclic matchings, gradient vector fields and Morse complexes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .complex import ComplexError, SimplicialComplex, from_simplices

__all__ = [
    "ResourceLimitError",
    "RegularPair",
    "HasseDiagram",
    "AcyclicityCheck",
    "pair_name",
    "hasse",
    "remove_nodes",
    "remove_edges",
    "is_acyclic_matching",
    "alternating_cycle_oracle",
    "f_of_poset",
    "morse_complex",
    "primitive_gvfs",
    "is_gradient_vector_field",
    "closed_vpath_oracle",
    "critical_simplices",
    "DEFAULT_CAP",
    "DEFAULT_BUDGET",
]

DEFAULT_CAP = 64
DEFAULT_BUDGET = 5_000_000

Simplex = tuple[str, ...]


class ResourceLimitError(RuntimeError):
    """A Morse complex would exceed the configured size guard."""


def pair_name(lower: Simplex, upper: Simplex) -> str:
    """``(u)v`` for a vertex/edge pair, ``(a,b|a,b,c)`` in higher dimensions."""
    if len(lower) == 1:
        rest = [v for v in upper if v not in lower]
        return f"({lower[0]}){rest[0]}"
    return f"({','.join(lower)}|{','.join(upper)})"


class RegularPair(NamedTuple):
    lower: Simplex
    upper: Simplex

    @property
    def name(self) -> str:
        return pair_name(self.lower, self.upper)


@dataclass(frozen=True)
class HasseDiagram:
    """Cover relations ``lower -> upper`` among a set of simplices.

    ``nodes`` may be a proper subset of a complex's simplices (node or edge
    deletion); every edge joins two present nodes of consecutive dimension.
    """

    nodes: tuple[Simplex, ...]
    edges: tuple[tuple[Simplex, Simplex], ...]

    def __post_init__(self):
        present = set(self.nodes)
        for lo, up in self.edges:
            if lo not in present or up not in present:
                raise ComplexError(f"edge {lo} -> {up} joins an absent node")
            if len(up) != len(lo) + 1:
                raise ComplexError(f"edge {lo} -> {up} is not a cover relation")

    @property
    def names(self) -> list[str]:
        return [pair_name(lo, up) for lo, up in self.edges]

    def edge_index(self) -> dict[tuple[Simplex, Simplex], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def lower_neighbors(self) -> dict[Simplex, list[Simplex]]:
        down: dict[Simplex, list[Simplex]] = {v: [] for v in self.nodes}
        for lo, up in self.edges:
            down[up].append(lo)
        return down

    def components(self) -> list["HasseDiagram"]:
        """Connected components (as undirected graphs), in node order."""
        parent = {v: v for v in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for lo, up in self.edges:
            parent[find(lo)] = find(up)
        groups: dict[Simplex, list[Simplex]] = {}
        for v in self.nodes:
            groups.setdefault(find(v), []).append(v)
        out = []
        for members in groups.values():
            keep = set(members)
            out.append(HasseDiagram(tuple(members),
                                    tuple(e for e in self.edges if e[0] in keep)))
        return out

    def to_text(self) -> str:
        """One ``lower -> upper`` line per edge, vertices comma-separated."""
        return "".join(f"{','.join(lo)} -> {','.join(up)}\n" for lo, up in self.edges)


def hasse(K: SimplicialComplex) -> HasseDiagram:
    """Full cover diagram of ``K``.

    Nodes are ordered by dimension then canonically; edges by upper simplex,
    then lower simplex.
    """
    nodes = tuple(K.simplices())
    edges = []
    for p in range(1, K.dim + 1):
        for up in K.indexed(p):
            lows = sorted(up[:i] + up[i + 1:] for i in range(len(up)))
            upper = K.labels_of(up)
            edges.extend((K.labels_of(lo), upper) for lo in lows)
    return HasseDiagram(nodes, tuple(edges))


def remove_nodes(H: HasseDiagram, drop: Iterable[Simplex]) -> HasseDiagram:
    drop = set(map(tuple, drop))
    missing = drop.difference(H.nodes)
    if missing:
        raise ComplexError(f"nodes not in diagram: {sorted(missing)}")
    return HasseDiagram(tuple(v for v in H.nodes if v not in drop),
                        tuple(e for e in H.edges if e[0] not in drop and e[1] not in drop))


def remove_edges(H: HasseDiagram, drop: Iterable[tuple[Simplex, Simplex]]) -> HasseDiagram:
    drop = {(tuple(lo), tuple(up)) for lo, up in drop}
    missing = drop.difference(H.edges)
    if missing:
        raise ComplexError(f"edges not in diagram: {sorted(missing)}")
    return HasseDiagram(H.nodes, tuple(e for e in H.edges if e not in drop))


# -- acyclicity ------------------------------------------------------------

class AcyclicityCheck(NamedTuple):
    """Outcome of a matching check; truthy iff the matching is acyclic.

    On failure exactly one of ``conflict`` (a node used twice) or ``cycle``
    (an alternating cycle, listed as ``[a1, b1, a2, b2, ...]``) is set.
    """

    ok: bool
    conflict: object = None
    cycle: list | None = None

    def __bool__(self) -> bool:
        return self.ok


def _find_cycle(pairs: Sequence[tuple], faces_of) -> list | None:
    # Reverse the matched edges of the downward Hasse digraph.  Every node
    # on a directed cycle is matched, so the search runs on matched nodes
    # only: lower -> upper along a matched edge, upper -> each other face
    # that is itself the lower end of a matched edge.
    up_of = {lo: up for lo, up in pairs}
    succ = {}
    for lo, up in pairs:
        succ[lo] = [f for f in faces_of(up) if f != lo and f in up_of]
    state: dict = {}
    for start in up_of:
        if start in state:
            continue
        stack = [(start, iter(succ[start]))]
        trail = [start]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                trail.pop()
                state[node] = 2
                continue
            mark = state.get(nxt)
            if mark == 1:
                loop = trail[trail.index(nxt):]
                cycle = []
                for a in loop:
                    cycle += [a, up_of[a]]
                return cycle
            if mark is None:
                state[nxt] = 1
                trail.append(nxt)
                stack.append((nxt, iter(succ[nxt])))
    return None


def _simplex_faces(up: Simplex) -> list[Simplex]:
    return [up[:i] + up[i + 1:] for i in range(len(up))]


def is_acyclic_matching(H: HasseDiagram, M: Iterable[tuple[Simplex, Simplex]]) -> AcyclicityCheck:
    """Partial-matching and acyclicity test for edges ``M`` of ``H``."""
    M = [(tuple(lo), tuple(up)) for lo, up in M]
    known = set(H.edges)
    for e in M:
        if e not in known:
            raise ComplexError(f"{e} is not an edge of the diagram")
    used: set = set()
    for lo, up in M:
        for node in (lo, up):
            if node in used:
                return AcyclicityCheck(False, conflict=node)
            used.add(node)
    down = H.lower_neighbors()
    cycle = _find_cycle(M, lambda up: down[up])
    if cycle is not None:
        return AcyclicityCheck(False, cycle=cycle)
    return AcyclicityCheck(True)


def alternating_cycle_oracle(M: Sequence[tuple[Simplex, Simplex]], covers) -> bool:
    """Brute-force search for ``b1 > a1 < b2 > a2 < ... < b_{p+1} = b1``.

    ``covers(a, b)`` tells whether ``a`` is covered by ``b``.  Every ordered
    selection of ``p >= 2`` distinct matched pairs is tried, so this is only
    for tiny matchings.  Returns True when such a cycle exists.
    """
    M = list(M)
    for p in range(2, len(M) + 1):
        for seq in permutations(M, p):
            if all(covers(seq[i][0], seq[(i + 1) % p][1]) for i in range(p)):
                return True
    return False


# -- f(P) and Morse complexes ----------------------------------------------

def _matching_complex(H: HasseDiagram, budget: int) -> list[tuple[int, ...]]:
    node_id = {v: i for i, v in enumerate(H.nodes)}
    ends = [(node_id[lo], node_id[up]) for lo, up in H.edges]
    touching: list[int] = [0] * len(H.nodes)
    for e, (a, b) in enumerate(ends):
        touching[a] |= 1 << e
        touching[b] |= 1 << e
    conflict = [touching[a] | touching[b] for a, b in ends]
    down = H.lower_neighbors()

    level = [(e,) for e in range(len(ends))]
    admitted: set[tuple[int, ...]] = set(level)
    out = list(level)
    while level:
        nxt = []
        for s in level:
            mask = 0
            for e in s:
                mask |= conflict[e]
            for e in range(s[-1] + 1, len(ends)):
                if mask >> e & 1:
                    continue
                cand = s + (e,)
                if any(cand[:i] + cand[i + 1:] not in admitted for i in range(len(cand) - 1)):
                    continue
                pairs = [H.edges[x] for x in cand]
                if _find_cycle(pairs, lambda up: down[up]) is not None:
                    continue
                nxt.append(cand)
        admitted.update(nxt)
        out.extend(nxt)
        if len(out) > budget:
            raise ResourceLimitError(f"f(P) exceeds the simplex budget of {budget}")
        level = nxt
    return out


def f_of_poset(H: HasseDiagram, budget: int = DEFAULT_BUDGET) -> SimplicialComplex:
    """Complex whose simplices are the nonempty acyclic matchings of ``H``.

    Built level by level: a set of edges is admitted when all of its
    one-smaller subsets were admitted and it passes the acyclicity test.
    Vertex labels are the edge names of ``H``.
    """
    return from_simplices(H.names, _matching_complex(H, budget))


def _is_forest(K: SimplicialComplex) -> bool:
    if K.dim > 1:
        return False
    n = len(K.vertices)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in K.indexed(1):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def primitive_gvfs(K: SimplicialComplex) -> list[RegularPair]:
    """All single-pair gradient vector fields, in Hasse edge order."""
    return [RegularPair(lo, up) for lo, up in hasse(K).edges]


def morse_complex(K: SimplicialComplex, cap: int = DEFAULT_CAP,
                  budget: int = DEFAULT_BUDGET) -> SimplicialComplex:
    """The Morse complex of ``K``; vertex ``i`` is the ``i``-th primitive GVF.

    For forests every matching of the Hasse diagram is acyclic, so the
    complex is the clique complex of the "shares no simplex" graph and is
    enumerated with the clique kernel.  Everything else goes through
    :func:`f_of_poset`.
    """
    H = hasse(K)
    if len(H.edges) > cap:
        raise ResourceLimitError(
            f"{len(H.edges)} primitive gradient vector fields exceed the cap of {cap}")
    if not _is_forest(K):
        return f_of_poset(H, budget)
    node_id = {v: i for i, v in enumerate(H.nodes)}
    ends = [(node_id[lo], node_id[up]) for lo, up in H.edges]
    full = (1 << len(ends)) - 1
    touching = [0] * len(H.nodes)
    for e, (a, b) in enumerate(ends):
        touching[a] |= 1 << e
        touching[b] |= 1 << e
    adj = [full & ~(touching[a] | touching[b]) for a, b in ends]
    masks = kernels.clique_masks(adj)
    if len(masks) > budget:
        raise ResourceLimitError(f"Morse complex exceeds the simplex budget of {budget}")
    keys = []
    for m in masks:
        key = []
        while m:
            low = m & -m
            key.append(low.bit_length() - 1)
            m ^= low
        keys.append(tuple(key))
    return from_simplices(H.names, keys)


# -- vector fields on K ----------------------------------------------------

def _normalize_field(K: SimplicialComplex, V) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    pairs = []
    for lo, up in V:
        a, b = K.key(lo), K.key(up)
        if not (K.contains_key(a) and K.contains_key(b)) or len(b) != len(a) + 1 \
                or not set(a) <= set(b):
            raise ComplexError(f"({lo}, {up}) is not a cover pair of the complex")
        pairs.append((a, b))
    return pairs


def is_gradient_vector_field(K: SimplicialComplex, V: Iterable[tuple[Simplex, Simplex]]) -> bool:
    """Discrete vector field with no closed V-path (reversed-digraph test)."""
    pairs = _normalize_field(K, V)
    seen: set = set()
    for a, b in pairs:
        if a in seen or b in seen:
            return False
        seen.update((a, b))
    return _find_cycle(pairs, _simplex_faces) is None


def closed_vpath_oracle(K: SimplicialComplex, V: Iterable[tuple[Simplex, Simplex]]) -> bool:
    """Walk V-paths ``a0, b0, a1, b1, ...`` literally; True if one closes up.

    Only meant for small fields: every V-path from every pair is expanded
    until it returns to its start or dies out (paths are bounded by the
    number of pairs since a repeated ``a`` closes a loop).
    """
    pairs = _normalize_field(K, V)
    partner = dict(pairs)
    for a0, b0 in pairs:
        frontier = [(a0, b0, frozenset([a0]))]
        while frontier:
            a, b, visited = frontier.pop()
            for i in range(len(b)):
                nxt = b[:i] + b[i + 1:]
                if nxt == a:
                    continue
                if nxt == a0:
                    return True
                if nxt in partner and nxt not in visited:
                    frontier.append((nxt, partner[nxt], visited | {nxt}))
    return False


def critical_simplices(K: SimplicialComplex, V: Iterable[tuple[Simplex, Simplex]]) -> set[Simplex]:
    paired = set()
    for a, b in _normalize_field(K, V):
        paired.update((a, b))
    return {K.labels_of(s) for s in K.all_keys() if s not in paired}
