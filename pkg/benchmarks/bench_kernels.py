"""Compiled kernels vs the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.  Each row
times one kernel on inputs taken from real Morse complexes and reports the
best of N runs for both implementations.
"""

from __future__ import annotations

import argparse
import timeit

from morsegraph.families import p_wedge
from morsegraph.hasse import hasse, morse_complex
from morsegraph.homology import RANK_PRIME, boundary_matrix
from morsegraph.kernels import _fallback

try:
    from morsegraph.kernels import _ckernels
except ImportError:
    _ckernels = None


def clique_input(t, left, right):
    H = hasse(p_wedge(t, left, right))
    node_id = {v: i for i, v in enumerate(H.nodes)}
    ends = [(node_id[a], node_id[b]) for a, b in H.edges]
    full = (1 << len(ends)) - 1
    touching = [0] * len(H.nodes)
    for e, (a, b) in enumerate(ends):
        touching[a] |= 1 << e
        touching[b] |= 1 << e
    return [full & ~(touching[a] | touching[b]) for a, b in ends]


def cases():
    adj = clique_input(2, (0, 2), (0, 3))
    yield "clique_masks  P_2 v S02 v S03", lambda k: k.clique_masks(adj)
    M = morse_complex(p_wedge(2, (0, 2), (0, 2)))
    for p in (4, 5):
        B = boundary_matrix(M, p)
        cols, nrows = B.cols, B.nrows
        yield (f"unit_eliminate d{p} ({B.nrows}x{B.ncols})",
               lambda k, cols=cols, nrows=nrows: k.unit_eliminate([dict(c) for c in cols], nrows))
        yield (f"rank_mod_p     d{p} ({B.nrows}x{B.ncols})",
               lambda k, cols=cols, nrows=nrows: k.rank_mod_p([dict(c) for c in cols], nrows, RANK_PRIME))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the fallback can be timed")
    print(f"{'kernel':<38} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<38} {py:>10.4f} {'-':>10} {'-':>8}")
            continue
        assert fn(_ckernels) == fn(_fallback)
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<38} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
