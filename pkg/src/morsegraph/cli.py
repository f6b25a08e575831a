"""``morsegraph`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource guard exceeded.
"""

from __future__ import annotations

import json
import sys
from functools import wraps

import click

from .complex import ComplexError, strong_collapse_core
from .families import FamilySpec, attach_path, build
from .hasse import DEFAULT_BUDGET, DEFAULT_CAP, ResourceLimitError, morse_complex
from .homology import homology_report, reduced_homology, signature_of
from .io import format_facets, read_facets
from .verification import THEOREMS, run_theorem

EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 1, 2, 3

_KINDS = {"path": "path", "ext-star": "extended_star", "p-wedge": "p_wedge"}


def _guarded(fn):
    @wraps(fn)
    def run(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ResourceLimitError as exc:
            click.echo(f"resource limit: {exc}", err=True)
            sys.exit(EXIT_RESOURCE)
        except (ComplexError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
    return run


def _pair(text: str | None, what: str) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise click.BadParameter(f"{what} must look like 'm,n'") from None
    return a, b


def parse_family(text: str) -> FamilySpec:
    """``path:4``, ``ext-star:1,3`` or ``p-wedge:3,0,2,0,2``."""
    kind, _, rest = text.partition(":")
    if kind not in _KINDS or not rest:
        raise click.BadParameter(f"cannot read family {text!r}")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise click.BadParameter(f"cannot read family {text!r}") from None
    return FamilySpec(_KINDS[kind], params)


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


@click.group()
@click.version_option(package_name="morsegraph")
def main():
    """Morse complexes of graphs and checks of their homotopy types."""


@main.command()
@click.option("--family", "kind", type=click.Choice(sorted(_KINDS)), required=True)
@click.option("--len", "length", type=int, help="Path length (number of edges).")
@click.option("--m", type=int, help="Length-1 leaves of an extended star.")
@click.option("--n", type=int, help="Length-2 arms of an extended star.")
@click.option("--t", type=int, help="Length of the connecting path.")
@click.option("--left", help="Left star as 'm,n'.")
@click.option("--right", help="Right star as 'k,l'.")
@click.option("--attach", help="Hang a path 'VERTEX:LEN' off the generated graph.")
@click.option("-o", "--out", default="-", show_default=True)
@_guarded
def generate(kind, length, m, n, t, left, right, attach, out):
    """Write a graph family as a .facets file."""
    if kind == "path":
        if length is None:
            raise click.UsageError("--len is required for paths")
        spec = FamilySpec("path", (length,))
    elif kind == "ext-star":
        if m is None or n is None:
            raise click.UsageError("--m and --n are required for extended stars")
        spec = FamilySpec("extended_star", (m, n))
    else:
        lp, rp = _pair(left, "--left"), _pair(right, "--right")
        if t is None or lp is None or rp is None:
            raise click.UsageError("--t, --left and --right are required for p-wedge")
        spec = FamilySpec("p_wedge", (t, *lp, *rp))
    header = [spec.name]
    K = build(spec)
    if attach:
        v, _, u = attach.rpartition(":")
        if not v or not u.isdigit():
            raise click.BadParameter("--attach must look like 'VERTEX:LEN'")
        K = attach_path(K, v, int(u))
        header = [f"{spec.name} v_{v} P_{u}"]
    _emit(format_facets(K, header), out)


@main.command()
@click.argument("infile", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", default="-", show_default=True)
@click.option("--cap", default=DEFAULT_CAP, show_default=True, help="Max primitive GVFs.")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True, help="Max simplices.")
@_guarded
def morse(infile, out, cap, budget):
    """Build the Morse complex of a .facets complex."""
    M = morse_complex(read_facets(infile), cap=cap, budget=budget)
    _emit(format_facets(M, [f"Morse complex of {infile}"]), out)
    summary = "".join(f"dim {p}: {c}\n" for p, c in enumerate(M.f_vector()))
    click.echo(summary, nl=False, err=(out == "-"))


@main.command()
@click.argument("infile", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON report.")
@_guarded
def homology(infile, as_json):
    """Reduced integral homology of a .facets complex."""
    K = read_facets(infile)
    h = reduced_homology(K)
    if as_json:
        click.echo(homology_report(K, infile, h))
        return
    click.echo(f"reduced betti: {list(h.betti)}")
    click.echo(f"torsion: {[list(t) for t in h.torsion]}")
    sig = signature_of(h)
    click.echo(f"signature: {sig if sig is not None else 'not a wedge of equal spheres'}")


@main.command()
@click.option("--theorem", type=click.Choice(THEOREMS), required=True)
@click.option("--t", type=int)
@click.option("--n", type=int)
@click.option("--l", type=int)
@click.option("--m", type=int)
@click.option("--max-len", default=7, show_default=True, help="Longest path for kozlov.")
@click.option("--base", help="Base graph for suspension, e.g. 'path:1' or 'ext-star:0,2'.")
@click.option("--at", help="Attachment vertex for suspension.")
@click.option("--seed", default=0, show_default=True, help="Seed for greedy restarts only.")
@click.option("--restarts", default=32, show_default=True)
@click.option("--cap", default=DEFAULT_CAP, show_default=True)
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@_guarded
def verify(theorem, t, n, l, m, max_len, base, at, seed, restarts, cap, budget, as_json):
    """Check a stated homotopy type against computation."""
    spec = parse_family(base) if base else None
    rows = run_theorem(theorem, t=t, n=n, l=l, m=m, max_len=max_len, base=spec, at=at,
                       seed=seed, restarts=restarts, cap=cap, budget=budget)
    if as_json:
        click.echo(json.dumps([r.to_json() for r in rows], indent=2))
    else:
        for r in rows:
            click.echo(r.to_text())
            if r.status != "pass":
                for d in r.diagnostics:
                    click.echo(f"    {d}")
    if any(r.status not in ("pass", "degenerate") for r in rows):
        sys.exit(EXIT_FAIL)


@main.command()
@click.argument("infile", type=click.Path(exists=True, dir_okay=False))
@_guarded
def core(infile):
    """Strong-collapse a complex and print the domination sequence."""
    K = read_facets(infile)
    C, steps = strong_collapse_core(K)
    for w in steps:
        click.echo(f"collapse {w}")
    click.echo("core facets:")
    click.echo(format_facets(C), nl=False)
    if len(C.vertices) == 1:
        click.echo("strongly collapsible")
    else:
        click.echo(f"not strongly collapsible: core has {len(C.vertices)} vertices")


if __name__ == "__main__":
    main()
