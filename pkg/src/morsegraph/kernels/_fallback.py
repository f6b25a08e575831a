"""Pure-Python versions of the hot kernels.

Semantics are identical to the compiled ``_ckernels`` module; these are
used when the extension is not built, and as the reference in the
kernel-agreement tests.
"""

from __future__ import annotations


def clique_masks(adj: list[int]) -> list[int]:
    """Every nonempty clique of a graph on at most 64 vertices, as bitmasks.

    ``adj[v]`` is the neighbour bitmask of vertex ``v``.  Output order is
    depth-first with lower vertices first, so it is deterministic.
    """
    out: list[int] = []
    n = len(adj)
    stack = [(1 << v, adj[v] & ~((1 << (v + 1)) - 1)) for v in reversed(range(n))]
    while stack:
        clique, cand = stack.pop()
        out.append(clique)
        ext = []
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            ext.append((clique | low, cand & adj[w]))
        stack.extend(reversed(ext))
    return out


def unit_eliminate(cols: list[dict[int, int]], nrows: int) -> tuple[int, list[dict[int, int]]]:
    """Eliminate every reachable +-1 pivot of a sparse integer matrix.

    ``cols`` maps row index to nonzero entry, one dict per column.  Each
    pivot contributes an invariant factor 1; the residual block (surviving
    columns restricted to surviving rows) carries the rest of the Smith form.
    Returns ``(pivot_count, residual_columns)``.
    """
    cols = [dict(c) for c in cols]
    row_cols: list[set[int]] = [set() for _ in range(nrows)]
    for j, c in enumerate(cols):
        for r in c:
            row_cols[r].add(j)
    alive = [True] * len(cols)
    pivots = 0
    progress = True
    while progress:
        progress = False
        for j in range(len(cols)):
            if not alive[j]:
                continue
            col = cols[j]
            best = -1
            for r in sorted(col):
                a = col[r]
                if (a == 1 or a == -1) and (best < 0 or len(row_cols[r]) < len(row_cols[best])):
                    best = r
            if best < 0:
                continue
            e = col[best]
            for k in list(row_cols[best]):
                if k == j:
                    continue
                target = cols[k]
                factor = target[best] * e
                for r, a in col.items():
                    v = target.get(r, 0) - factor * a
                    if v:
                        if r not in target:
                            row_cols[r].add(k)
                        target[r] = v
                    elif r in target:
                        del target[r]
                        row_cols[r].discard(k)
            for r in col:
                row_cols[r].discard(j)
            alive[j] = False
            row_cols[best] = set()
            pivots += 1
            progress = True
    residual = [cols[j] for j in range(len(cols)) if alive[j] and cols[j]]
    return pivots, residual


def rank_mod_p(cols: list[dict[int, int]], nrows: int, p: int) -> int:
    """Rank over GF(p) by sparse column reduction on lowest row index."""
    pivot_of: dict[int, dict[int, int]] = {}
    rank = 0
    for c in cols:
        col = {r: a % p for r, a in c.items() if a % p}
        while col:
            low = max(col)
            other = pivot_of.get(low)
            if other is None:
                inv = pow(col[low], p - 2, p)
                pivot_of[low] = {r: a * inv % p for r, a in col.items()}
                rank += 1
                break
            f = col[low]
            for r, a in other.items():
                v = (col.get(r, 0) - f * a) % p
                if v:
                    col[r] = v
                else:
                    col.pop(r, None)
    return rank
