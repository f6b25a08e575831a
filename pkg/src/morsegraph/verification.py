"""Verification rows: one stated homotopy type against one computation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import ComplexError, disjoint_union, join, strong_collapse_core
from .complex import delete_vertex, is_dominated_by
from .families import FamilySpec, attach_path, build, extended_star, p_wedge, path
from .hasse import DEFAULT_BUDGET, DEFAULT_CAP, morse_complex
from .homology import (
    POINT,
    HomologyProfile,
    SphereWedge,
    join_betti,
    matches_signature,
    reduced_homology,
    signature_of,
)
from . import proof_engine as pe

__all__ = ["VerificationRow", "THEOREMS", "run_theorem"]

THEOREMS = ("kozlov", "s0n", "s1n", "main", "s1s1", "s1s0", "suspension", "join", "strong-collapse")


@dataclass
class VerificationRow:
    theorem: str
    params: dict[str, int | str]
    predicted: SphereWedge | None
    computed: HomologyProfile
    status: str
    matching: dict[int, int] | None = None
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        sig = signature_of(self.computed)
        return {
            "theorem": self.theorem,
            "params": self.params,
            "predicted": None if self.predicted is None else str(self.predicted),
            "computed": {
                "reduced_betti": list(self.computed.betti),
                "torsion": [list(t) for t in self.computed.torsion],
                "empty": self.computed.empty,
                "signature": None if sig is None else str(sig),
            },
            "matching": None if self.matching is None else {str(k): v for k, v in self.matching.items()},
            "status": self.status,
            "diagnostics": self.diagnostics,
        }

    def to_text(self) -> str:
        sig = signature_of(self.computed)
        shown = str(sig) if sig is not None else f"betti={list(self.computed.betti)}"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{self.status.upper():<10} {self.theorem:<16} {params:<28} " \
               f"stated={self.predicted if self.predicted is not None else '-'} computed={shown}"
        if self.matching is not None:
            line += f" critical={self.matching}"
        return line


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _kozlov(max_len: int, cap, budget):
    for s in range(1, max_len + 1):
        h = reduced_homology(morse_complex(path(s), cap=cap, budget=budget))
        want = pe.kozlov_prediction(s)
        yield VerificationRow("kozlov", {"s": s}, want, h, _status(matches_signature(h, want)))


def _s0n(n: int, seed, restarts, cap, budget):
    M = morse_complex(extended_star(0, n), cap=cap, budget=budget)
    h = reduced_homology(M)
    want = pe.s0n_prediction(n)
    report = pe.explicit_matching_s0n(n, seed=seed, restarts=restarts)
    ok = matches_signature(h, want) and report.ok and pe.verify_forman(M, report, want)
    return VerificationRow("s0n", {"m": 0, "n": n}, want, h, _status(ok), report.counts,
                           [f"{f.rule}: {f.reason}" for f in report.failures])


def _surgery_row(theorem, params, rep: pe.SurgeryReport) -> VerificationRow:
    return VerificationRow(theorem, params, rep.predicted, rep.profile, _status(rep.ok), None,
                           [f"{leg.name}: {leg.status} ({leg.detail})" for leg in rep.legs])


def _main(t, n, l, seed, restarts, cap, budget):
    params = {"t": t, "n": n, "l": l, "m": 0, "k": 0}
    M = morse_complex(p_wedge(t, (0, n), (0, l)), cap=cap, budget=budget)
    h = reduced_homology(M)
    want = pe.main_prediction(t, n, l)
    if want is None:
        sig = signature_of(h)
        return VerificationRow("main", params, None, h, "degenerate", None,
                               [f"stated count (n-1)(l-1)-1 = {(n - 1) * (l - 1) - 1} is negative; "
                                f"computed {sig if sig is not None else list(h.betti)}"])
    report = pe.explicit_matching_main(t, n, l, seed=seed, restarts=restarts, morse=M)
    ok = matches_signature(h, want) and report.ok
    diag = [f"{f.rule}: {f.reason}" for f in report.failures]
    if not matches_signature(h, want):
        diag.insert(0, f"homology: computed betti {list(h.betti)} differ from stated {want}")
    return VerificationRow("main", params, want, h, _status(ok), report.counts, diag)


def _suspension(base: FamilySpec, at: str | None, t: int, cap, budget):
    K = build(base)
    v = at or K.vertices[0]
    h0 = reduced_homology(morse_complex(K, cap=cap, budget=budget))
    longer = attach_path(K, v, 3 * t)
    h = reduced_homology(morse_complex(longer, cap=cap, budget=budget))
    want = signature_of(h0.shifted(2 * t))
    ok = pe.check_suspension(K, v, t, cap=cap, budget=budget)
    return VerificationRow("suspension", {"base": base.name, "at": v, "t": t}, want, h, _status(ok))


def _join(a: int, b: int, cap, budget):
    K, L = path(a), path(b, start=a + 1)
    MK = morse_complex(K, cap=cap, budget=budget)
    ML = morse_complex(L, cap=cap, budget=budget)
    M = morse_complex(disjoint_union(K, L), cap=cap, budget=budget)
    h = reduced_homology(M)
    betti = join_betti(reduced_homology(MK).padded(), reduced_homology(ML).padded())
    nonzero = [(i - 1, x) for i, x in enumerate(betti) if x]
    if not nonzero:
        want = POINT
    else:
        want = SphereWedge(*nonzero[0]) if len(nonzero) == 1 and nonzero[0][0] >= 0 else None
    same = M == join(MK, ML)
    diag = [] if same else ["M(K+L) differs from M(K)*M(L) as a complex"]
    return VerificationRow("join", {"K": f"P_{a}", "L": f"P_{b}"}, want, h, _status(same), None, diag)


def _strong_collapse(m: int, n: int, cap, budget):
    M = morse_complex(extended_star(m, n), cap=cap, budget=budget)
    h = reduced_homology(M)
    core, steps = strong_collapse_core(M)
    cur, diag, valid = M, [], True
    for w in steps:
        if not is_dominated_by(cur, w.dominated, w.dominator):
            valid = False
            diag.append(f"witness {w} does not hold")
        cur = delete_vertex(cur, w.dominated)
    diag.append(f"{len(steps)} strong collapse(s), core has {len(core.vertices)} vertex(es)")
    ok = valid and len(core.vertices) == 1 and h.is_trivial()
    return VerificationRow("strong-collapse", {"m": m, "n": n}, POINT, h, _status(ok), None, diag)


def _need(**kw):
    missing = [k for k, v in kw.items() if v is None]
    if missing:
        raise ComplexError("missing parameter(s): " + ", ".join("--" + k for k in missing))


def run_theorem(theorem: str, *, t: int | None = None, n: int | None = None, l: int | None = None,
                m: int | None = None, max_len: int = 7, base: FamilySpec | None = None,
                at: str | None = None, seed: int = 0, restarts: int = 32,
                cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET) -> list[VerificationRow]:
    """Rows for one theorem; parameters left out fall back to small default sweeps."""
    if theorem == "kozlov":
        return list(_kozlov(max_len, cap, budget))
    if theorem == "s0n":
        return [_s0n(k, seed, restarts, cap, budget) for k in ([n] if n else [1, 2, 3])]
    if theorem == "s1n":
        return [_surgery_row("s1n", {"m": 1, "n": k}, pe.hasse_surgery_s1n(k, cap, budget))
                for k in ([n] if n else [1, 2, 3])]
    if theorem == "main":
        _need(t=t, n=n, l=l)
        return [_main(t, n, l, seed, restarts, cap, budget)]
    if theorem in ("s1s1", "s1s0"):
        _need(t=t, n=n, l=l)
        right = 1 if theorem == "s1s1" else 0
        rep = pe.hasse_surgery_mixed(t, n, l, 1, right, cap, budget)
        return [_surgery_row(theorem, {"t": t, "n": n, "l": l, "m": 1, "k": right}, rep)]
    if theorem == "suspension":
        bases = [base] if base else [FamilySpec("path", (1,)), FamilySpec("extended_star", (0, 2))]
        return [_suspension(b, at, t or 1, cap, budget) for b in bases]
    if theorem == "join":
        return [_join(a, b, cap, budget) for a in (1, 2) for b in (1, 2)]
    if theorem == "strong-collapse":
        if m is not None and m < 2:
            raise ComplexError("strong collapsibility needs m >= 2 leaves")
        cases = [(m or 2, n)] if n else [(m or 2, 1), (m or 2, 2)]
        return [_strong_collapse(a, b, cap, budget) for a, b in cases]
    raise ComplexError(f"unknown theorem {theorem!r}")
