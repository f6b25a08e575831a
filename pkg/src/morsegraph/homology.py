"""Reduced integral homology via Smith normal form.

Boundary matrices are kept sparse.  All ``+-1`` pivots are eliminated first
(each contributes an invariant factor 1); the small residual block left over
goes through a dense Smith normal form with exact Python integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from . import kernels
from .complex import SimplicialComplex

__all__ = [
    "SparseMatrix",
    "SNFResult",
    "HomologyProfile",
    "SphereWedge",
    "POINT",
    "boundary_matrix",
    "smith_normal_form",
    "invariant_factors",
    "reduced_homology",
    "rational_betti",
    "matches_signature",
    "signature_of",
    "euler_characteristic",
    "join_betti",
    "homology_report",
]

RANK_PRIME = 2_147_483_647


@dataclass
class SparseMatrix:
    """Column-sparse integer matrix: ``cols[j]`` maps row index to entry."""

    nrows: int
    ncols: int
    cols: list[dict[int, int]]

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, a in col.items():
                out[i][j] = a
        return out


def boundary_matrix(K: SimplicialComplex, p: int) -> SparseMatrix:
    """Simplicial boundary ``C_p -> C_{p-1}`` in canonical simplex order.

    The face obtained by deleting the vertex in position ``i`` gets sign
    ``(-1)**i``.  ``p = 0`` gives the augmentation row (all ones).
    """
    if p < 0 or p > K.dim:
        raise ValueError(f"dimension {p} outside 0..{K.dim}")
    cells = K.indexed(p)
    if p == 0:
        return SparseMatrix(1, len(cells), [{0: 1} for _ in cells])
    cols = []
    for s in cells:
        col = {}
        for i in range(len(s)):
            col[K.position(s[:i] + s[i + 1:])] = -1 if i % 2 else 1
        cols.append(col)
    return SparseMatrix(len(K.indexed(p - 1)), len(cells), cols)


@dataclass
class SNFResult:
    diagonal: list[int]
    rank: int
    left: list[list[int]] | None = None
    right: list[list[int]] | None = None


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]], transforms: bool = False) -> SNFResult:
    """Smith normal form of a dense integer matrix.

    Pivots on the entry of least absolute value and restores divisibility
    by folding a non-divisible row into the pivot row.  With
    ``transforms=True`` the result carries unimodular ``left``/``right``
    with ``left @ A @ right == diag``.
    """
    D = [list(map(int, row)) for row in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        rs, rd = D[src], D[dst]
        for k in range(n):
            if rs[k]:
                rd[k] += q * rs[k]
        if U is not None:
            us, ud = U[src], U[dst]
            for k in range(m):
                if us[k]:
                    ud[k] += q * us[k]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in D:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = D[i][j]
                if a and (best is None or abs(a) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
            best = None
            for i in range(t + 1, m):
                if D[i][t] and (best is None or abs(D[i][t]) < abs(D[best[0]][best[1]])):
                    best = (i, t)
            for j in range(t + 1, n):
                if D[t][j] and (best is None or abs(D[t][j]) < abs(D[best[0]][best[1]])):
                    best = (t, j)
            if best is not None:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
            best = (t, t)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            if U is not None:
                U[t] = [-a for a in U[t]]
    diagonal = [D[i][i] for i in range(min(m, n))]
    return SNFResult(diagonal, sum(1 for d in diagonal if d), U, V)


def invariant_factors(M: SparseMatrix) -> tuple[int, list[int]]:
    """``(rank, nontrivial factors > 1)`` of a sparse integer matrix."""
    units, residual = kernels.unit_eliminate(M.cols, M.nrows)
    if not residual:
        return units, []
    rows = sorted({r for col in residual for r in col})
    where = {r: i for i, r in enumerate(rows)}
    dense = [[0] * len(residual) for _ in rows]
    for j, col in enumerate(residual):
        for r, a in col.items():
            dense[where[r]][j] = a
    snf = smith_normal_form(dense)
    return units + snf.rank, [d for d in snf.diagonal if d > 1]


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers and torsion per dimension ``0..dim``.

    ``empty`` marks the void complex, whose only reduced homology sits in
    degree -1 (``betti_minus_one == 1``).
    """

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    empty: bool = False

    @property
    def betti_minus_one(self) -> int:
        return 1 if self.empty else 0

    def padded(self) -> list[int]:
        """Betti numbers indexed from degree -1."""
        return [self.betti_minus_one] + list(self.betti)

    def is_trivial(self) -> bool:
        return not self.empty and not any(self.betti) and not any(self.torsion)

    def shifted(self, k: int) -> "HomologyProfile":
        """Profile of the ``k``-fold suspension."""
        if k == 0:
            return self
        betti = [0] * k + list(self.betti)
        torsion = [()] * k + list(self.torsion)
        if self.empty:
            betti[k - 1] = 1
        return HomologyProfile(tuple(betti), tuple(torsion))

    def trimmed(self) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        betti, torsion = list(self.betti), list(self.torsion)
        while betti and not betti[-1] and not torsion[-1]:
            betti.pop()
            torsion.pop()
        return tuple(betti), tuple(torsion)

    def same_as(self, other: "HomologyProfile") -> bool:
        """Equality up to trailing zero degrees."""
        return self.empty == other.empty and self.trimmed() == other.trimmed()


def reduced_homology(K: SimplicialComplex) -> HomologyProfile:
    if K.is_empty():
        return HomologyProfile((), (), empty=True)
    counts = K.f_vector()
    ranks = []
    factors = []
    for p in range(K.dim + 1):
        r, tors = invariant_factors(boundary_matrix(K, p))
        ranks.append(r)
        factors.append(tors)
    ranks.append(0)
    factors.append([])
    betti = tuple(counts[i] - ranks[i] - ranks[i + 1] for i in range(K.dim + 1))
    torsion = tuple(tuple(sorted(factors[i + 1])) for i in range(K.dim + 1))
    return HomologyProfile(betti, torsion)


def rational_betti(K: SimplicialComplex, prime: int = RANK_PRIME) -> tuple[int, ...]:
    """Reduced Betti numbers from ranks over GF(prime), independent of the SNF path."""
    if K.is_empty():
        return ()
    counts = K.f_vector()
    ranks = [kernels.rank_mod_p(boundary_matrix(K, p).cols, len(K.indexed(p - 1)) if p else 1, prime)
             for p in range(K.dim + 1)] + [0]
    return tuple(counts[i] - ranks[i] - ranks[i + 1] for i in range(K.dim + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** i * c for i, c in enumerate(K.f_vector()))


@dataclass(frozen=True)
class SphereWedge:
    """A wedge of ``count`` copies of ``S^dim``; ``count == 0`` is a point."""

    dim: int = 0
    count: int = 0

    @property
    def is_point(self) -> bool:
        return self.count == 0

    def __str__(self) -> str:
        if self.is_point:
            return "point"
        if self.count == 1:
            return f"S^{self.dim}"
        return f"(S^{self.dim})^v{self.count}"

    def to_json(self):
        return None if self.is_point else {"dim": self.dim, "count": self.count}


POINT = SphereWedge()


def matches_signature(h: HomologyProfile, s: SphereWedge) -> bool:
    """Homological certificate: a point is acyclic, a wedge has one free group."""
    if h.empty or any(h.torsion):
        return False
    if s.is_point:
        return not any(h.betti)
    return all(b == (s.count if i == s.dim else 0) for i, b in enumerate(h.betti)) \
        and s.dim < len(h.betti)


def signature_of(h: HomologyProfile) -> SphereWedge | None:
    """The wedge of spheres this profile is consistent with, if any."""
    if h.empty or any(h.torsion):
        return None
    nonzero = [(i, b) for i, b in enumerate(h.betti) if b]
    if not nonzero:
        return POINT
    if len(nonzero) == 1:
        return SphereWedge(*nonzero[0])
    return None


def join_betti(*profiles: Sequence[int]) -> list[int]:
    """Reduced Betti numbers (indexed from -1) of a join, over a field.

    ``H~_{m+1}(K*L) = sum_{i+j=m} H~_i(K) (x) H~_j(L)``, with the empty complex
    acting as the unit ``S^-1``.
    """
    acc = [1]
    for prof in profiles:
        out = [0] * (len(acc) + len(prof))
        for i, a in enumerate(acc):
            if a:
                for j, b in enumerate(prof):
                    # degrees i-1 and j-1 land in degree i+j-1, index i+j
                    out[i + j] += a * b
        acc = out
    while len(acc) > 1 and not acc[-1]:
        acc.pop()
    return acc


def homology_report(K: SimplicialComplex, name: str, profile: HomologyProfile | None = None) -> str:
    """JSON report with stable key order."""
    h = profile or reduced_homology(K)
    data = {
        "complex": name,
        "dims": K.dim,
        "reduced_betti": list(h.betti),
        "torsion": [list(t) for t in h.torsion],
        "euler": euler_characteristic(K),
    }
    return json.dumps(data)
