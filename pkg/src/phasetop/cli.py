"""Command-line front end: queries, mesh file I/O, and verification.

Vectors are comma-separated entries ("z" for the zero element, signs as
+/-/0), model points are semicolon-separated disc coordinates r@a with
rational r and angle a in turns, cell labels use -1/U/L/F/1 tokens.
"""

from __future__ import annotations

import json
import sys

import click

from .phase import hyper_sum_list, sign_hyper_sum_list
from .covectors import (
    enumerate_covectors,
    format_phase_vector,
    format_sign_vector,
    is_covector,
    parse_phase_vector,
    parse_sign_vector,
)
from .order_complex import delta_member, parse_model_point
from .cells import (
    format_cell_label,
    in_pn,
    meet,
    nu,
    parse_cell_label,
    pn_elements,
)
from .gluing import verify_slice_claims
from .mesh import (
    FullSpacePieces,
    assemble_full,
    assemble_slice,
    complex_from_doc,
    complex_to_doc,
)
from .homology import betti
from .suites import SUITES, run_suite


def _die(message: str) -> None:
    raise click.ClickException(message)


@click.group()
def main():
    """Exact tools for phase covectors, cell meshes, and homology."""


# ---------------------------------------------------------------------------
# hyperfield arithmetic
# ---------------------------------------------------------------------------


@main.group()
def hf():
    """Hyperfield arithmetic."""


@hf.command("sum")
@click.option("--field", type=click.Choice(["phase", "sign"]), required=True)
@click.option("--elems", required=True,
              help="comma-separated elements, e.g. 0,1/2,z or +,-,0")
def hf_sum(field, elems):
    """Multivalued sum of a list of elements."""
    try:
        if field == "phase":
            xs = list(parse_phase_vector(elems))
            click.echo(str(hyper_sum_list(xs)))
        else:
            xs = list(parse_sign_vector(elems))
            out = sorted(sign_hyper_sum_list(xs))
            click.echo("{" + ", ".join(str(s) for s in out) + "}")
    except ValueError as exc:
        _die(str(exc))


# ---------------------------------------------------------------------------
# covectors
# ---------------------------------------------------------------------------


@main.group()
def covector():
    """Covector predicates and enumeration."""


@covector.command("check")
@click.option("--v", "v_text", required=True,
              help="unit phase vector, no zero entries")
@click.option("--x", "x_text", required=True,
              help="candidate covector, z entries allowed")
def covector_check(v_text, x_text):
    """True iff zero lies in the twisted sum of v and x."""
    try:
        v = parse_phase_vector(v_text)
        x = parse_phase_vector(x_text)
        click.echo("true" if is_covector(v, x) else "false")
    except ValueError as exc:
        _die(str(exc))


@covector.command("enumerate")
@click.option("--field", type=click.Choice(["phase", "sign"]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, default=None,
              help="grid density for the phase field (even)")
def covector_enumerate(field, n, m):
    """All nonzero covectors of the all-ones vector, one per line."""
    try:
        out = enumerate_covectors(field, n, m)
    except ValueError as exc:
        _die(str(exc))
    for x in out:
        if field == "phase":
            click.echo(format_phase_vector(x))
        else:
            click.echo(format_sign_vector(x))


# ---------------------------------------------------------------------------
# the covector space model
# ---------------------------------------------------------------------------


@main.group()
def delta():
    """Points of the covector space model."""


@delta.command("member")
@click.option("--v", "v_text", required=True, help="coefficient vector")
@click.option("--z", "z_text", required=True,
              help="model point, e.g. 1@0;1/2@1/4")
def delta_member_cmd(v_text, z_text):
    """True iff the disc tuple lies in the covector space of v."""
    try:
        v = parse_phase_vector(v_text)
        z = parse_model_point(z_text)
        click.echo("true" if delta_member(v, z) else "false")
    except ValueError as exc:
        _die(str(exc))


# ---------------------------------------------------------------------------
# the cell poset
# ---------------------------------------------------------------------------


@main.group()
def pn():
    """The finite poset of cell labels."""


def _parse_label_in(text: str, n: int):
    try:
        x = parse_cell_label(text)
    except ValueError as exc:
        _die(str(exc))
    if len(x) != n:
        _die(f"label {text!r} has {len(x)} coordinates, expected {n}")
    if not in_pn(x):
        _die(f"label {text!r} is not an admissible cell")
    return x


@pn.command("list")
@click.option("--n", type=int, required=True)
def pn_list(n):
    """All cell labels, one per line."""
    try:
        cells = pn_elements(n)
    except ValueError as exc:
        _die(str(exc))
    for x in cells:
        click.echo(format_cell_label(x))


@pn.command("meet")
@click.option("--n", type=int, required=True)
@click.option("--x", "x_text", required=True)
@click.option("--y", "y_text", required=True)
def pn_meet(n, x_text, y_text):
    """Greatest lower bound of two cell labels."""
    x = _parse_label_in(x_text, n)
    y = _parse_label_in(y_text, n)
    click.echo(format_cell_label(meet(x, y)))


@pn.command("nu")
@click.option("--n", type=int, required=True)
@click.option("--x", "x_text", required=True)
def pn_nu(n, x_text):
    """Cell dimension of a label."""
    x = _parse_label_in(x_text, n)
    click.echo(str(nu(x)))


# ---------------------------------------------------------------------------
# gluing verification
# ---------------------------------------------------------------------------


@main.group()
def glue():
    """Gluing hypotheses on the chart families."""


@glue.command("verify-slice")
@click.option("--n", type=int, required=True)
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def glue_verify_slice(n, samples, seed):
    """Combinatorial and sampled checks for the slice chart families."""
    try:
        rep = verify_slice_claims(n, samples=samples, seed=seed)
    except ValueError as exc:
        _die(str(exc))
    click.echo(rep.to_text(), nl=False)
    if not rep.passed:
        sys.exit(1)


# ---------------------------------------------------------------------------
# meshes and homology
# ---------------------------------------------------------------------------


@main.group()
def mesh():
    """Simplicial meshes written as JSON documents."""


@mesh.command("slice")
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, required=True, help="edges per half-circle")
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              required=True)
def mesh_slice(n, m, out_path):
    """Mesh the glued slice and write it to a file."""
    try:
        K = assemble_slice(n, m)
    except ValueError as exc:
        _die(str(exc))
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_doc(K, n, m), fh, indent=2, sort_keys=True)
        fh.write("\n")
    click.echo(f"wrote {out_path}: slice n={n} m={m},"
               f" {len(K.tops)} top simplices")


@mesh.command("full")
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, required=True, help="edges per half-circle")
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              required=True)
def mesh_full(n, m, out_path):
    """Mesh the full covector space and write it to a file."""
    try:
        K = assemble_full(n, m)
    except ValueError as exc:
        _die(str(exc))
    if isinstance(K, FullSpacePieces):
        _die("chart interfaces did not match; no single complex produced"
             " (use the Mayer-Vietoris fallback on the pieces)")
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_doc(K, n, m), fh, indent=2, sort_keys=True)
        fh.write("\n")
    click.echo(f"wrote {out_path}: full space n={n} m={m},"
               f" {len(K.tops)} top simplices")


@main.command("homology")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False),
              required=True)
@click.option("--field", type=click.Choice(["q", "f2"]), default="q",
              show_default=True)
def homology_cmd(in_path, field):
    """Betti numbers of a mesh document."""
    with open(in_path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            _die(f"not a JSON document: {exc}")
    try:
        K, _, _ = complex_from_doc(doc)
        click.echo(str(betti(K, field)))
    except ValueError as exc:
        _die(str(exc))


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


@main.command("verify")
@click.argument("suite", type=click.Choice(SUITES + ("all",)))
@click.option("--max-n", type=int, default=None,
              help="cap on n (never widens a suite's documented range)")
@click.option("--m", type=int, default=None, help="cap on grid density")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              default=None, help="write the report as canonical JSON")
def verify(suite, max_n, m, seed, report_path):
    """Run a named verification suite; exit 0 only if it passes."""
    try:
        rep = run_suite(suite, max_n=max_n, m=m, seed=seed)
    except ValueError as exc:
        _die(str(exc))
    click.echo(rep.to_text(), nl=False)
    if report_path:
        with open(report_path, "wb") as fh:
            fh.write(rep.to_bytes())
        click.echo(f"report written to {report_path}")
    if not rep.passed:
        sys.exit(1)


if __name__ == "__main__":
    main()
