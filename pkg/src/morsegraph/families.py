"""Generators for the trees studied here, with the labels used in the proofs.

Paths carry vertices ``v0..vu``.  In an extended star the center is ``c``,
length-2 arms are ``c - a_i - b_i`` and length-1 leaves are ``d`` (``d1..dm``
when there are several).  For ``P_t v S_{m,n} v S_{k,l}`` the left arms are
``a_i b_i``, the right arms ``c_s d_s`` and the leaves ``w`` / ``w'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import ComplexError, SimplicialComplex, from_facets

__all__ = [
    "FamilySpec",
    "path",
    "extended_star",
    "p_wedge",
    "attach_path",
    "is_tree",
    "path_offset",
    "build",
]


def _edges_complex(vertices: list[str], edges: list[tuple[str, str]]) -> SimplicialComplex:
    if not edges:
        return from_facets([[vertices[0]]])
    return from_facets(edges, order=vertices)


def path(u: int, start: int = 0) -> SimplicialComplex:
    """Path of length ``u`` on ``v{start} .. v{start+u}``."""
    if u < 0:
        raise ComplexError("path length must be nonnegative")
    names = [f"v{start + i}" for i in range(u + 1)]
    return _edges_complex(names, list(zip(names, names[1:])))


def _leaf_names(prefix: str, m: int, suffix: str = "") -> list[str]:
    if m == 1:
        return [prefix + suffix]
    return [f"{prefix}{suffix}{i}" for i in range(1, m + 1)]


def extended_star(m: int, n: int) -> SimplicialComplex:
    """``S_{m,n}``: ``m`` leaves of length 1 and ``n`` arms of length 2 glued at ``c``."""
    if m < 0 or n < 0 or m + n < 1:
        raise ComplexError("extended star needs m, n >= 0 and m + n >= 1")
    vertices = ["c"]
    edges = []
    for d in _leaf_names("d", m):
        vertices.append(d)
        edges.append(("c", d))
    for i in range(1, n + 1):
        vertices += [f"a{i}", f"b{i}"]
        edges += [("c", f"a{i}"), (f"a{i}", f"b{i}")]
    return _edges_complex(vertices, edges)


def path_offset(t: int, left: tuple[int, int], right: tuple[int, int]) -> int:
    """Index of the left path endpoint.

    Only the two-sided ``S_{0,n}`` wedges use shifted labels: the right
    endpoint is ``v{3u}`` and the left one ``v0``, ``v-1`` or ``v-2``
    according to ``t mod 3``.
    """
    if left[0] == 0 and right[0] == 0:
        return -(t % 3)
    return 0


def p_wedge(t: int, left: tuple[int, int], right: tuple[int, int]) -> SimplicialComplex:
    """``P_t`` with the centers of ``S_left`` and ``S_right`` glued to its two ends."""
    if t < 0:
        raise ComplexError("path length must be nonnegative")
    (m, n), (k, l) = left, right
    if min(m, n, k, l) < 0:
        raise ComplexError("star parameters must be nonnegative")
    start = path_offset(t, left, right)
    names = [f"v{start + i}" for i in range(t + 1)]
    lc, rc = names[0], names[-1]
    vertices = list(names)
    edges = list(zip(names, names[1:]))
    for w in _leaf_names("w", m):
        vertices.append(w)
        edges.append((lc, w))
    for i in range(1, n + 1):
        vertices += [f"a{i}", f"b{i}"]
        edges += [(lc, f"a{i}"), (f"a{i}", f"b{i}")]
    for w in _leaf_names("w", k, "'"):
        vertices.append(w)
        edges.append((rc, w))
    for s in range(1, l + 1):
        vertices += [f"c{s}", f"d{s}"]
        edges += [(rc, f"c{s}"), (f"c{s}", f"d{s}")]
    return _edges_complex(vertices, edges)


def attach_path(K: SimplicialComplex, v: str, u: int, prefix: str = "p") -> SimplicialComplex:
    """``K`` with a fresh path of length ``u`` hanging off vertex ``v``."""
    K.index(v)
    if u < 1:
        raise ComplexError("attached path needs length >= 1")
    taken = set(K.vertices)
    fresh = []
    for i in range(1, u + 1):
        name = f"{prefix}{i}"
        while name in taken:
            name += "'"
        taken.add(name)
        fresh.append(name)
    chain = [v] + fresh
    facets = list(K.facets) + list(zip(chain, chain[1:]))
    return from_facets(facets, order=list(K.vertices) + fresh)


def is_tree(K: SimplicialComplex) -> bool:
    """1-dimensional (or a point), connected, and ``|E| = |V| - 1``."""
    if K.is_empty() or K.dim > 1:
        return False
    n = len(K.vertices)
    edges = K.indexed(1)
    if len(edges) != n - 1:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(x) for x in range(n)}) == 1


@dataclass(frozen=True)
class FamilySpec:
    """Parametrised description of a generated graph.

    ``kind`` is one of ``path``, ``extended_star``, ``p_wedge`` or
    ``attach_path``.  ``params`` holds the integers for that kind:
    ``(u,)``, ``(m, n)``, ``(t, m, n, k, l)`` and ``(u,)`` respectively;
    ``attach_path`` additionally needs ``base`` and ``at``.
    """

    kind: str
    params: tuple[int, ...]
    base: "FamilySpec | None" = None
    at: str | None = field(default=None)

    def __post_init__(self):
        expected = {"path": 1, "extended_star": 2, "p_wedge": 5, "attach_path": 1}
        if self.kind not in expected:
            raise ComplexError(f"unknown family kind {self.kind!r}")
        if len(self.params) != expected[self.kind]:
            raise ComplexError(f"{self.kind} takes {expected[self.kind]} parameter(s)")
        if self.kind == "attach_path" and (self.base is None or self.at is None):
            raise ComplexError("attach_path needs a base family and an attachment vertex")

    @property
    def name(self) -> str:
        p = self.params
        if self.kind == "path":
            return f"P_{p[0]}"
        if self.kind == "extended_star":
            return f"S_{{{p[0]},{p[1]}}}"
        if self.kind == "p_wedge":
            return f"P_{p[0]} v S_{{{p[1]},{p[2]}}} v S_{{{p[3]},{p[4]}}}"
        return f"{self.base.name} v_{self.at} P_{p[0]}"


def build(spec: FamilySpec) -> SimplicialComplex:
    p = spec.params
    if spec.kind == "path":
        return path(p[0])
    if spec.kind == "extended_star":
        return extended_star(*p)
    if spec.kind == "p_wedge":
        return p_wedge(p[0], (p[1], p[2]), (p[3], p[4]))
    return attach_path(build(spec.base), spec.at, p[0])
