"""Matching tables for the Morse complexes of ``P_t v S_{0,n} v S_{0,l}``.

Each :class:`Rule` is one displayed line ``lhs <-> rhs``.  A side lists the
primitive gradient vector fields added to the common block ``V`` (all
``(a_i)b_i`` and ``(c_s)d_s``) plus at most one path family (``R``, ``L``,
``B[j]``, ``C[j]``, ``C[j+1]``).  ``{R}`` stands for the right center
``v{3u}``; ``{i}``, ``{s}``, ``{n}``, ``{l}`` are substituted per instance.
Index ranges default to ``i = 1..n`` and ``s = 1..l``; ``j`` ranges are
always explicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

Range = Callable[[int, int, int], range]


@dataclass(frozen=True)
class Rule:
    id: str
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    over: dict[str, Range] = field(default_factory=dict)

    def variables(self) -> list[str]:
        text = " ".join(self.lhs + self.rhs)
        found = [v for v in ("i", "s") if "{" + v + "}" in text]
        if "[j" in text:
            found.append("j")
        return found

    def ranges(self, n: int, l: int, u: int) -> dict[str, range]:
        default = {"i": range(1, n + 1), "s": range(1, l + 1)}
        out = {}
        for v in self.variables():
            if v in self.over:
                out[v] = self.over[v](n, l, u)
            elif v in default:
                out[v] = default[v]
            else:
                raise ValueError(f"rule {self.id}: no range for {v}")
        return out


_FAMILY = re.compile(r"^(R|L|B|C)(?:\[j([+-]\d+)?\])?$")


def parse_family(token: str) -> tuple[str, int] | None:
    """``"C[j+1]"`` -> ``("C", 1)``; primitive names give ``None``."""
    m = _FAMILY.match(token)
    if not m:
        return None
    return m.group(1), int(m.group(2) or 0)


def _j(lo: int, hi_offset: int) -> Range:
    # j = lo .. u + hi_offset
    return lambda n, l, u: range(lo, u + hi_offset + 1)


# t = 3u: left center v0
RULES_0 = (
    Rule("3u.1", ("R",), ("(v0)a1", "R")),
    Rule("3u.2", ("({R})c{s}", "B[j]"), ("(v0)a1", "({R})c{s}", "B[j]"), {"j": _j(0, -1)}),
    Rule("3u.3", ("({R})c{s}", "C[j]"), ("(v0)a1", "({R})c{s}", "C[j]"), {"j": _j(0, -1)}),
    Rule("3u.4", ("(v0)a{i}", "({R})c{s}", "B[j]"), ("(v0)a{i}", "({R})c{s}", "C[j]"),
         {"i": lambda n, l, u: range(2, n + 1), "j": _j(0, -1)}),
)
CRITICAL_0 = (
    Rule("3u.crit.a", ("(v0)a{i}", "R"), (), {"i": lambda n, l, u: range(2, n + 1)}),
    Rule("3u.crit.c", ("({R})c{s}", "L"), ()),
)

# t = 3u + 1: left center v-1
RULES_1 = (
    Rule("3u+1.1", ("(v-1)v0", "R"), ("(v-1)v0", "({R})c1", "R")),
    Rule("3u+1.2", ("(v-1)v0", "({R})c1", "B[j]"), ("(v-1)v0", "({R})c1", "C[j+1]"),
         {"j": _j(-1, -2)}),
    Rule("3u+1.3", ("(v-1)v0", "({R})c{s}", "B[j]"), ("(v-1)v0", "({R})c{s}", "C[j]"),
         {"s": lambda n, l, u: range(2, l + 1), "j": _j(0, -1)}),
    Rule("3u+1.4", ("({R})c{s}", "L"), ("(v-1)v0", "({R})c{s}", "L"),
         {"s": lambda n, l, u: range(2, l + 1)}),
    Rule("3u+1.5", ("({R})c1", "L"), ("(v-1)a1", "({R})c1", "L")),
)
CRITICAL_1 = (
    Rule("3u+1.crit", ("(v-1)a{i}", "({R})c{s}", "L"), ()),
)

# t = 3u + 2: left center v-2
RULES_2 = (
    Rule("3u+2.1", ("(v-1)v0", "R"), ("(v-2)v-1", "(v-1)v0", "R")),
    Rule("3u+2.2", ("(v-2)v-1", "(v-1)v0", "({R})c{s}", "B[j]"),
         ("(v-2)v-1", "(v-1)v0", "({R})c{s}", "C[j]"), {"j": _j(0, -1)}),
    Rule("3u+2.3", ("(v-1)v0", "({R})c{s}", "B[j]"), ("(v-1)v0", "({R})c{s}", "C[j+1]"),
         {"j": _j(-1, -2)}),
    Rule("3u+2.4", ("(v-2)a{i}", "(v-1)v0", "({R})c{s}", "B[j]"),
         ("(v-2)a{i}", "(v-1)v0", "({R})c{s}", "C[j+1]"), {"j": _j(-1, -2)}),
    Rule("3u+2.5", ("(v-2)a{i}", "(v-1)v0", "R"), ("(v-2)a{i}", "(v-1)v0", "({R})c1", "R"),
         {"i": lambda n, l, u: range(1, n)}),
    Rule("3u+2.6", ("(v-1)v0", "({R})c{s}", "R"), ("(v-2)a1", "(v-1)v0", "({R})c{s}", "R"),
         {"s": lambda n, l, u: range(2, l + 1)}),
    Rule("3u+2.7", ("(v-2)a{n}", "(v-1)v0", "R"), ("(v-2)a{n}", "(v-1)v0", "({R})c{l}", "R")),
    Rule("3u+2.8", ("(v-1)v0", "({R})c1", "R"), ("(v-2)a{n}", "(v-1)v0", "({R})c1", "R")),
    Rule("3u+2.9", ("(v-2)v-1", "({R})c{s}", "L"), ("(v-2)v-1", "(v-1)v0", "({R})c{s}", "L")),
)
CRITICAL_2 = (
    Rule("3u+2.crit", ("(v-2)a{i}", "(v-1)v0", "({R})c{s}", "R"), ()),
)

RULES = {0: RULES_0, 1: RULES_1, 2: RULES_2}
# the residue-2 critical family also excludes i = 1, s = 1 and (i, s) = (n, l)
CRITICAL = {0: CRITICAL_0, 1: CRITICAL_1, 2: CRITICAL_2}


def critical_filter(residue: int, n: int, l: int) -> Callable[[dict[str, int]], bool]:
    if residue == 1:
        return lambda env: (env["i"], env["s"]) != (1, 1)
    if residue == 2:
        return lambda env: env["i"] != 1 and env["s"] != 1 and (env["i"], env["s"]) != (n, l)
    return lambda env: True


# S_{0,n}: a single line on top of V = {(a_i)b_i}
RULES_S0N = (Rule("s0n.1", (), ("(c)a1",)),)
CRITICAL_S0N = (Rule("s0n.crit", ("(c)a{i}",), (), {"i": lambda n, l, u: range(2, n + 1)}),)
