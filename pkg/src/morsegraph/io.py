"""Reading and writing ``.facets`` files.

One facet per line, labels separated by single spaces, ``#`` starts a
comment line.  Vertex order is the order of first appearance.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .complex import ComplexError, SimplicialComplex, from_facets

__all__ = ["FacetsParseError", "parse_facets", "read_facets", "format_facets", "write_facets"]


class FacetsParseError(ComplexError):
    pass


def parse_facets(text: str) -> SimplicialComplex:
    facets = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        labels = stripped.split()
        if len(set(labels)) != len(labels):
            raise FacetsParseError(f"line {lineno}: repeated vertex in a facet")
        facets.append(labels)
    if not facets:
        raise FacetsParseError("no facets found")
    return from_facets(facets)


def read_facets(path: str | Path) -> SimplicialComplex:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FacetsParseError(f"{path}: not UTF-8 ({exc.reason})") from exc
    return parse_facets(text)


def format_facets(K: SimplicialComplex, header: Iterable[str] = ()) -> str:
    """Facets in canonical order, each listed in the complex's vertex order."""
    lines = [f"# {h}" for h in header]
    lines += [" ".join(f) for f in K.facets]
    return "\n".join(lines) + "\n"


def write_facets(K: SimplicialComplex, path: str | Path, header: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_facets(K, header))
