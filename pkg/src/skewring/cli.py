"""Command line interface.

Exit codes: 0 success, 3 negative verdict or failing suite, 1 usage error,
2 input or realization error.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

import click

from . import harness
from .classify import PRESENTATIONS, classify, named_group
from .coeffring import RingClass, RingError, parse_ring, ring_class
from .groupcore import (
    FiniteGroup,
    GroupError,
    Subgroup,
    load_cayley_file,
    realize,
    subgroup_closure,
    with_e_factor,
)
from .groupring import GroupRingError, is_skew_commutative
from .orient import Orientation, enumerate_kernels, quotient_rank
from .presdsl import PresentationError, parse_word_list

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_NEGATIVE = 0, 1, 2, 3

INPUT_ERRORS = (PresentationError, GroupError, RingError, GroupRingError, OSError, KeyError)

_E_SUFFIX = re.compile(r"(.+?)xC2(?:\^(\d+))?")


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def resolve_group(text: str) -> FiniteGroup:
    """A presentation, a named group (optionally ``xC2^r``), or a Cayley table file."""
    s = text.strip()
    if s.startswith("<"):
        return realize(s)
    if s in PRESENTATIONS or s == "Q8xC2":
        return named_group(s)
    m = _E_SUFFIX.fullmatch(s)
    if m and (m.group(1) in PRESENTATIONS or m.group(1) == "Q8xC2"):
        r = int(m.group(2) or 1)
        return with_e_factor(named_group(m.group(1)), r)
    path = Path(s)
    if path.is_file():
        return load_cayley_file(path)
    raise InputError(f"cannot interpret group {text!r}: not a presentation, named group or file")


def resolve_kernel(g: FiniteGroup, text: str) -> Subgroup:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if tokens and all(t.isdigit() for t in tokens):
        idx = [int(t) for t in tokens]
        if any(i >= g.order for i in idx):
            raise InputError(f"element index out of range for group of order {g.order}")
        seeds = idx
    else:
        if not g.gen_names:
            raise InputError("this group has no generator names; give the kernel as element indices")
        seeds = [g.evaluate(w) for w in parse_word_list(text, g.gen_names)]
    n = subgroup_closure(g, seeds)
    if 2 * len(n) != g.order:
        raise InputError(f"kernel {n.label()} has order {len(n)}, index {g.order // len(n)} (need 2)")
    return n


def _orientation(group, kernel):
    try:
        g = resolve_group(group)
        n = resolve_kernel(g, kernel)
    except INPUT_ERRORS as e:
        raise InputError(str(e)) from e
    return g, n


def _ring(text):
    try:
        return parse_ring(text)
    except RingError as e:
        raise click.BadParameter(str(e), param_hint="--ring") from e


group_opt = click.option("--group", "-g", required=True,
                         help="Presentation '<a,b | ...>', named group such as G[16,4]xC2^2, or Cayley table file.")
kernel_opt = click.option("--kernel", "-k", required=True,
                          help="Comma-separated generator words (or element indices for table files).")
ring_opt = click.option("--ring", "-r", default="z", show_default=True, help="z or z/<m>.")


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Commutativity of antisymmetric elements in oriented group rings."""


@cli.command()
@group_opt
@kernel_opt
@ring_opt
def check(group, kernel, ring):
    """Brute-force decision with a witness commutator."""
    r = _ring(ring)
    g, n = _orientation(group, kernel)
    verdict = is_skew_commutative(Orientation(g, n), r)
    click.echo(f"group {g.label or '(presented)'} order {g.order}, kernel {n.label()}, ring {r}")
    click.echo(f"generators: {len(verdict.generators)}")
    if verdict.commutative:
        click.echo("commutative")
        return EXIT_OK
    click.echo(f"not commutative ({verdict.failing_pairs} noncommuting generator pairs)")
    click.echo(f"witness: {verdict.summary()}")
    return EXIT_NEGATIVE


@cli.command()
@group_opt
def kernels(group):
    """List every index-2 subgroup."""
    try:
        g = resolve_group(group)
    except INPUT_ERRORS as e:
        raise InputError(str(e)) from e
    ks = enumerate_kernels(g)
    click.echo(f"order {g.order}, quotient rank {quotient_rank(g)}, {len(ks)} kernels")
    for i, k in enumerate(ks):
        click.echo(f"{i:3d}  {k.label()}")
    return EXIT_OK


@cli.command(name="classify")
@group_opt
@kernel_opt
@click.option("--ringclass", "-c", type=click.Choice([rc.value for rc in RingClass]), default=None,
              help="Ring class; defaults to the class of --ring.")
@ring_opt
def classify_cmd(group, kernel, ringclass, ring):
    """Structural prediction (case id)."""
    rc = RingClass.parse(ringclass) if ringclass else ring_class(_ring(ring))
    g, n = _orientation(group, kernel)
    if g.is_abelian:
        click.echo("abelian group (predict: commutative)")
        return EXIT_OK
    case = classify(g, n, rc)
    click.echo(str(case) if case else "no case (predict: not commutative)")
    return EXIT_OK


def _emit(report, fmt, out):
    text = harness.report_emit(report, fmt)
    if out:
        Path(out).write_text(text)
        click.echo(f"wrote {out}")
        click.echo(report.notes[0] if report.notes else "")
    else:
        click.echo(text, nl=False)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


fmt_opt = click.option("--format", "fmt", type=click.Choice(["plain", "tsv"]), default="plain",
                       show_default=True)
out_opt = click.option("--out", "-o", type=click.Path(dir_okay=False), default=None)


@cli.command(name="verify-paper")
@fmt_opt
@out_opt
def verify_paper_cmd(fmt, out):
    """Reproduce the published kernel tables."""
    return _emit(harness.verify_paper(), fmt, out)


@cli.command(name="census")
@click.option("--max-rank", type=click.IntRange(0, 4), default=2, show_default=True)
@click.option("--rings", default="z,z/4,z/8", show_default=True)
@fmt_opt
@out_opt
def census_cmd(max_rank, rings, fmt, out):
    """Brute force versus classifier over the catalog."""
    rs = [_ring(t) for t in rings.split(",") if t.strip()]
    if not rs:
        raise click.BadParameter("no rings given", param_hint="--rings")
    try:
        report = harness.census(max_rank, rs)
    except ValueError as e:
        raise InputError(str(e)) from e
    return _emit(report, fmt, out)


@cli.command()
@group_opt
@kernel_opt
@ring_opt
def audit(group, kernel, ring):
    """Check necessary conditions on a commutative instance."""
    r = _ring(ring)
    g, n = _orientation(group, kernel)
    try:
        findings = harness.audit_commutative_instance(g, n, r)
    except ValueError as e:
        raise InputError(str(e)) from e
    for f in findings:
        click.echo(f"{'VIOLATED' if f.violated else 'ok':8s} {f.assertion:28s} {f.detail}")
    return EXIT_NEGATIVE if any(f.violated for f in findings) else EXIT_OK


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="skewring", standalone_mode=False)
    except click.exceptions.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except click.exceptions.Exit as e:
        return e.exit_code
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
