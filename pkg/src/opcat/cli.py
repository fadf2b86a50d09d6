"""Command-line workbench.

Every command reads and writes the JSON envelopes of
:mod:`opcat.io_json` and exits with

* ``0`` -- the input is valid / the certificate holds,
* ``1`` -- the structure was readable but a law or certificate fails,
* ``2`` -- the file cannot be parsed, fails its schema, or a
  construction cannot be carried out.

Outputs are deterministic: fixed cell orderings, canonical JSON, no
timestamps.
"""

from __future__ import annotations

import sys

import click

from . import io_json
from .errors import OpcatError, UndecidedAtBound, UnsupportedPresentation
from .fixtures import (boolean_poset_moncat, cyclic_moncat, k2cat,
                       standard_simplex, terminal_2cat, trivial_moncat,
                       walking_arrow_2cat)
from .freemon import adjunction_check, phi0, phi_tr3, presentation_equal
from .grothendieck import (canonical_fibration, check_split_fibration,
                           extract_operad, roundtrip_fibration,
                           roundtrip_operad)
from .operadic import bouquets, from_2category, para, terminal_odot
from .operadic import to_simplicial as _operadic_to_simplicial
from .operads import operad_from_2cat, operad_from_moncat
from .simplicial import certify_levelwise_iso
from .twocat import dec_nerve_iso, duskin_nerve
from .operadic import validate_operadic


def _fail(message) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _load(path, expect=None):
    try:
        return io_json.load(path, expect)
    except OpcatError as exc:
        _fail(exc)


def _run(fn, *args):
    try:
        return fn(*args)
    except OpcatError as exc:
        _fail(exc)


def _write(obj, out) -> None:
    io_json.save(obj, out)
    click.echo(f"wrote {out}")


def _finish(report) -> None:
    click.echo(report.summary())
    sys.exit(0 if report.ok else 1)


def _levels(X) -> str:
    return " ".join(str(c) for c in X.cells)


@click.group()
def main():
    """Verification workbench for finite unary operadic 2-categories."""


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--kind", "expect", default=None,
              help="Require this envelope kind.")
def validate(path, expect):
    """Load a structure file and run its validator."""
    obj = _load(path, expect)
    workspace = io_json.Workspace()
    report = workspace.add("input", obj)
    _finish(report)


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="nerve.json", show_default=True,
              help="Output file for the simplicial set.")
def nerve(path, out):
    """Write the nerve of a 2-category (3-truncated simplicial set)."""
    K = _load(path, "two-category")
    N = _run(duskin_nerve, K)
    _write(N, out)
    click.echo(f"levels: {_levels(N)}")


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="dec.json", show_default=True,
              help="Output file for the comparison map.")
def dec(path, out):
    """Certify that the décalage of the extended nerve matches the
    lax-slice sum, writing the comparison map."""
    K = _load(path, "two-category")
    m = _run(dec_nerve_iso, K)
    _write(m, out)
    click.echo(f"levels: {_levels(m.source)}")
    _finish(certify_levelwise_iso(m))


@main.command("para")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="para.json", show_default=True,
              help="Output file for the operadic category.")
def para_cmd(path, out):
    """Build the parametrized-morphism operadic category of a strict
    monoidal category."""
    M = _load(path, "monoidal-category")
    O = _run(para, M)
    _write(O, out)
    click.echo(f"levels: {_levels(_operadic_to_simplicial(O))}")
    _finish(validate_operadic(O))


@main.command()
@click.argument("base", type=click.Path(exists=True, dir_okay=False))
@click.argument("operad", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="groth.json", show_default=True,
              help="Output file for the split fibration.")
def groth(base, operad, out):
    """Build the total operadic category of an operad over a base and
    write its canonical split fibration."""
    O = _load(base, "operadic-category")
    P = _load(operad, "operad")
    F = _run(canonical_fibration, O, P)
    _write(F, out)
    click.echo(
        f"total levels: {_levels(_operadic_to_simplicial(F.projection.source))}")
    _finish(check_split_fibration(F))


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="extract.json", show_default=True,
              help="Output file for the operad.")
def extract(path, out):
    """Extract the operad of a split fibration."""
    F = _load(path, "split-fibration")
    P = _run(extract_operad, F)
    _write(P, out)
    click.echo(f"fibers: {' '.join(str(C.n_objects) for C in P.fibers)}")


@main.command()
@click.argument("base", type=click.Path(exists=True, dir_okay=False))
@click.argument("operad", type=click.Path(exists=True, dir_okay=False))
def roundtrip(base, operad):
    """Certify both round trips: extracting the total structure of an
    operad returns it, and rebuilding a fibration from its extracted
    operad is isomorphic over the base."""
    O = _load(base, "operadic-category")
    P = _load(operad, "operad")
    cert_back = _run(roundtrip_operad, O, P)
    F = _run(canonical_fibration, O, P)
    cert_forth = _run(roundtrip_fibration, F)
    click.echo(cert_back.summary())
    click.echo(cert_forth.summary())
    sys.exit(0 if cert_back.ok and cert_forth.ok else 1)


@main.command()
@click.argument("sset", type=click.Path(exists=True, dir_okay=False))
@click.argument("moncat", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default=None,
              help="Also write the presentation of the simplicial set.")
@click.option("--bound", default=None, type=int,
              help="Also decide the presentation's relation sides equal "
                   "within this rewrite bound.")
def adjoint(sset, moncat, out, bound):
    """Certify the free/nerve adjunction on a 3-truncated simplicial set
    and a strict monoidal category: monoidal assignments out of the
    free presentation biject with simplicial maps into the nerve."""
    X = _load(sset, "simplicial-set")
    M = _load(moncat, "monoidal-category")
    cert = _run(adjunction_check, X, M)
    status = "bijection certified" if cert.ok else "FAILED"
    click.echo(f"counts {cert.left} = {cert.right}, {status}")
    for detail in cert.details:
        click.echo(f"  {detail}")
    P = _run(phi_tr3, X)
    if out is not None:
        _write(P, out)
    if bound is not None:
        _word_problem_check(P, bound)
    sys.exit(0 if cert.ok else 1)


def _word_problem_check(P, bound) -> None:
    pairs = [(rel[i], rel[j]) for rel in P.relations
             for i in range(len(rel)) for j in range(i + 1, len(rel))]
    if not pairs:
        click.echo("no relations; nothing to decide")
        return
    try:
        for left, right in pairs:
            if not presentation_equal(P, (left,), (right,), bound=bound):
                click.echo(f"relation sides decided UNEQUAL at bound {bound}")
                sys.exit(1)
    except UnsupportedPresentation as exc:
        click.echo(f"word problem skipped: {exc}")
        return
    except UndecidedAtBound as exc:
        click.echo(f"undecided at bound {exc.bound}")
        return
    click.echo(f"relation sides decided equal within bound {bound}")


_EXAMPLES = {
    "odot": terminal_odot,
    "bouquets2": lambda: bouquets(2),
    "bouquets3": lambda: bouquets(3),
    "paraZ2": lambda: para(cyclic_moncat(2)),
    "paraZ3": lambda: para(cyclic_moncat(3)),
    "fromArrow": lambda: from_2category(walking_arrow_2cat()),
    "walking_arrow": walking_arrow_2cat,
    "K2cat": k2cat,
    "terminal2cat": terminal_2cat,
    "moncatTrivial": trivial_moncat,
    "moncatZ2": lambda: cyclic_moncat(2),
    "moncatZ3": lambda: cyclic_moncat(3),
    "moncatBool": boolean_poset_moncat,
    "operadZ2": lambda: operad_from_moncat(cyclic_moncat(2)),
    "operadZ3": lambda: operad_from_moncat(cyclic_moncat(3)),
    "operadArrow": lambda: operad_from_2cat(walking_arrow_2cat()),
    "simplex0": lambda: standard_simplex(0),
    "simplex1": lambda: standard_simplex(1),
    "simplex2": lambda: standard_simplex(2),
    "simplex3": lambda: standard_simplex(3),
    "arrowNerve": lambda: duskin_nerve(walking_arrow_2cat()),
    "phi0_3": lambda: phi0(3),
}


@main.command()
@click.argument("name", required=False)
@click.option("--out", default=None, help="Output file [default: NAME.json].")
def examples(name, out):
    """Write a named example structure; without a name, list them."""
    if name is None or name not in _EXAMPLES:
        if name is not None:
            click.echo(f"unknown example {name!r}; available:", err=True)
        else:
            click.echo("available examples:", err=True)
        for known in sorted(_EXAMPLES):
            click.echo(f"  {known}", err=True)
        sys.exit(2 if name is not None else 0)
    _write(_EXAMPLES[name](), out or f"{name}.json")
