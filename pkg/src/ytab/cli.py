"""Command-line interface.

Every command prints exact rationals by default (lowest terms, integers
bare); `--format decimal` renders 10 significant digits and
`--format json` wraps the value in an envelope with keys command,
params, value, and optionally decimal and seed.

Exit codes: 0 success, 1 failed oracle check, 2 usage or parse error,
3 refused resource cap.
"""

from __future__ import annotations

import json
from fractions import Fraction

import click

from . import __version__
from .errors import AntichainViolation, CapExceeded
from .involutions import f_exact
from .probabilities import (
    OCCUPANCY_CELLS,
    CellAssignment,
    RationalMatrix,
    empirical_prob_subtableau,
    format_decimal,
    format_rational,
    joint_table_12_13,
    limit_prob_shapes,
    limit_prob_subtableau,
    occupancy_table,
    prob_cell_equals,
    prob_cells_assignment,
    prob_two_columns,
)
from .shapes import Cell, Partition
from .tableaux import StandardTableau
from . import config


class CapRefused(click.ClickException):
    """Resource-cap refusal; carries the estimated cost in its message."""

    exit_code = 3


def _guard(fn, *args, **kwargs):
    """Run a domain call, mapping domain errors onto CLI exit codes."""
    try:
        return fn(*args, **kwargs)
    except CapExceeded as exc:
        raise CapRefused(str(exc)) from None
    except (AntichainViolation, ValueError) as exc:
        raise click.UsageError(str(exc)) from None


def _emit_scalar(command: str, params: dict, value: Fraction, fmt: str, seed=None) -> None:
    if fmt == "plain":
        click.echo(format_rational(value))
    elif fmt == "decimal":
        click.echo(format_decimal(value))
    else:
        payload = {
            "command": command,
            "params": {"version": __version__, **params},
            "value": format_rational(value, json_style=True),
            "decimal": format_decimal(value),
        }
        if seed is not None:
            payload["seed"] = seed
        click.echo(json.dumps(payload))


def _emit_matrix(command: str, params: dict, matrix: RationalMatrix, fmt: str) -> None:
    if fmt == "csv":
        click.echo(matrix.to_csv(), nl=False)
    else:
        payload = {
            "command": command,
            "params": {
                "version": __version__,
                **params,
                "row_labels": list(matrix.row_labels),
                "col_labels": list(matrix.col_labels),
            },
            "value": matrix.to_json_value(),
        }
        click.echo(json.dumps(payload))


_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "decimal", "json"]),
    default="plain",
    show_default=True,
    help="Output rendering.",
)


@click.group()
@click.version_option(version=__version__, prog_name="ytab")
def cli() -> None:
    """Exact distributions of standard Young tableau entries."""


@cli.group()
def prob() -> None:
    """Limiting probabilities (exact rationals)."""


@prob.command("cell")
@click.option("--row", type=int, required=True, help="Cell row (1-based).")
@click.option("--col", type=int, required=True, help="Cell column (1-based).")
@click.option("--k", type=int, required=True, help="Entry value.")
@_format_option
def prob_cell(row: int, col: int, k: int, fmt: str) -> None:
    """Probability that cell (row, col) holds entry k."""
    value = _guard(prob_cell_equals, row, col, k)
    _emit_scalar("prob cell", {"row": row, "col": col, "k": k}, value, fmt)


@prob.command("cells")
@click.option(
    "--assign",
    required=True,
    help='Assignment string, e.g. "(1,2)=2;(1,3)=3".',
)
@click.option(
    "--max-value",
    type=int,
    default=config.MAX_ASSIGN_VALUE,
    show_default=True,
    help="Cap on the largest assigned value.",
)
@_format_option
def prob_cells(assign: str, max_value: int, fmt: str) -> None:
    """Probability that several cells hold the assigned entries."""
    assignment = _guard(CellAssignment.parse, assign)
    value = _guard(prob_cells_assignment, assignment, cap=max_value)
    _emit_scalar("prob cells", {"assign": str(assignment)}, value, fmt)


@prob.command("shapes")
@click.option(
    "--shapes",
    "shapes_text",
    default=None,
    help='Semicolon-separated partitions, e.g. "2;1,1".',
)
@click.option(
    "--two-columns",
    "two_columns_k",
    type=int,
    default=None,
    help="Probability that the k-prefix has at most two columns.",
)
@_format_option
def prob_shapes(shapes_text: str | None, two_columns_k: int | None, fmt: str) -> None:
    """Probability that the prefix shape lies in an antichain of shapes."""
    if (shapes_text is None) == (two_columns_k is None):
        raise click.UsageError("give exactly one of --shapes or --two-columns")
    if two_columns_k is not None:
        value = _guard(prob_two_columns, two_columns_k)
        _emit_scalar("prob shapes", {"two_columns": two_columns_k}, value, fmt)
        return
    parts = [p for p in shapes_text.split(";") if p.strip()]
    if not parts:
        raise click.UsageError("empty shape list")
    shapes = [_guard(Partition.parse, p) for p in parts]
    value = _guard(limit_prob_shapes, shapes)
    _emit_scalar("prob shapes", {"shapes": [str(s) for s in shapes]}, value, fmt)


@prob.command("subtableau")
@click.option(
    "--file",
    "path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help='Tableau JSON file: {"rows": [[1,2,5],[3,4]]}.',
)
@click.option(
    "--empirical-n",
    type=int,
    default=None,
    help="Report the exact finite-n fraction instead of the limit.",
)
@click.option(
    "--max-n",
    type=int,
    default=config.MAX_ENUM_N,
    show_default=True,
    help="Enumeration cap for --empirical-n.",
)
@_format_option
def prob_subtableau(path: str, empirical_n: int | None, max_n: int, fmt: str) -> None:
    """Probability that a huge tableau contains the given prefix."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    t = _guard(StandardTableau.from_json, text)
    params: dict = {"file": path}
    if empirical_n is None:
        value = _guard(limit_prob_subtableau, t)
    else:
        params["empirical_n"] = empirical_n
        value = _guard(empirical_prob_subtableau, empirical_n, t, cap=max_n)
    _emit_scalar("prob subtableau", params, value, fmt)


@cli.group()
def exact() -> None:
    """Exact integer counts."""


@exact.command("f12")
@click.option("--n", type=int, default=None, help="Tableau size.")
@click.option("--k", type=int, default=None, help="Entry at cell (1,2).")
@click.option("--table", "as_table", is_flag=True, help="Print the full triangle.")
@click.option("--n-max", type=int, default=9, show_default=True, help="Last row of --table.")
@_format_option
def exact_f12(n: int | None, k: int | None, as_table: bool, n_max: int, fmt: str) -> None:
    """Count n-cell tableaux whose (1,2) entry is k."""
    if as_table:
        if n is not None or k is not None:
            raise click.UsageError("--table does not take --n/--k")
        if n_max < 2:
            raise click.UsageError("--n-max must be at least 2")
        if fmt == "decimal":
            raise click.UsageError("decimal format does not apply to tables")
        rows = [
            (m, [_guard(f_exact, m, j) for j in range(1, m + 1)])
            for m in range(2, n_max + 1)
        ]
        if fmt == "plain":
            for m, values in rows:
                click.echo(f"n={m}: " + ",".join(str(v) for v in values))
        else:
            payload = {
                "command": "exact f12",
                "params": {"version": __version__, "n_max": n_max},
                "value": [
                    {"n": m, "values": [f"{v}/1" for v in values]} for m, values in rows
                ],
            }
            click.echo(json.dumps(payload))
        return
    if n is None or k is None:
        raise click.UsageError("give --n and --k, or --table")
    if n < 2:
        raise click.UsageError(f"n must be at least 2, got {n}")
    value = _guard(f_exact, n, k)
    _emit_scalar("exact f12", {"n": n, "k": k}, Fraction(value), fmt)


@cli.group()
def table() -> None:
    """Reproduce the occupancy and joint probability tables."""


_table_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
    help="Output rendering.",
)

_jobs_option = click.option(
    "--jobs",
    type=int,
    default=1,
    show_default=True,
    help="Worker processes; results do not depend on this.",
)


def _parse_cells(text: str) -> tuple[Cell, ...]:
    cells = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        pieces = part.split(",")
        if len(pieces) != 2:
            raise click.UsageError(f"cannot parse cell {part!r}; expected row,col")
        try:
            cells.append(Cell(int(pieces[0]), int(pieces[1])))
        except ValueError:
            raise click.UsageError(f"cannot parse cell {part!r}") from None
    if not cells:
        raise click.UsageError("empty cell list")
    return tuple(cells)


@table.command("occupancy")
@click.option("--k-max", type=int, required=True, help="Largest entry value row.")
@click.option(
    "--cells",
    "cells_text",
    default=None,
    help='Columns as "r,c" pairs separated by ";"; default is the standard seven.',
)
@_table_format_option
@_jobs_option
def table_occupancy(k_max: int, cells_text: str | None, fmt: str, jobs: int) -> None:
    """Single-cell occupancy probabilities for k = 2..k-max."""
    cells = OCCUPANCY_CELLS if cells_text is None else _parse_cells(cells_text)
    matrix = _guard(occupancy_table, k_max, cells, jobs=jobs)
    _emit_matrix("table occupancy", {"k_max": k_max}, matrix, fmt)


@table.command("joint")
@click.option("--r-max", type=int, required=True, help="Largest (1,2) entry.")
@click.option("--s-max", type=int, required=True, help="Largest (1,3) entry.")
@_table_format_option
@_jobs_option
def table_joint(r_max: int, s_max: int, fmt: str, jobs: int) -> None:
    """Joint distribution of the (1,2) and (1,3) entries."""
    matrix = _guard(joint_table_12_13, r_max, s_max, jobs=jobs)
    _emit_matrix("table joint", {"r_max": r_max, "s_max": s_max}, matrix, fmt)


@cli.command("quasirandom")
@click.option(
    "--family",
    "family_name",
    type=click.Choice(["all", "involutions", "fpf-involutions"]),
    required=True,
)
@click.option("--n", type=int, required=True, help="Member size.")
@click.option("--k", type=int, required=True, help="Pattern length.")
@click.option(
    "--mode",
    type=click.Choice(["exact", "sample"]),
    default="exact",
    show_default=True,
)
@click.option("--samples", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--max-n",
    type=int,
    default=None,
    help="Raise the family's exact-enumeration cap.",
)
@click.option(
    "--pattern-cap",
    type=int,
    default=config.MAX_PATTERNS,
    show_default=True,
    help="Cap on the number of scanned patterns.",
)
@_jobs_option
def quasirandom_cmd(
    family_name: str,
    n: int,
    k: int,
    mode: str,
    samples: int,
    seed: int,
    max_n: int | None,
    pattern_cap: int,
    jobs: int,
) -> None:
    """Maximum pattern deviation of a family slice, as a JSON report.

    Sample mode always runs single-threaded so that a seed fully
    determines the output.
    """
    from .quasirandom import deviation, deviation_mc, get_family

    family = _guard(get_family, family_name)
    params = {"family": family_name, "n": n, "k": k, "mode": mode}
    if mode == "exact":
        report = _guard(
            deviation, family, n, k, cap=max_n, pattern_cap=pattern_cap, jobs=jobs
        )
        payload = {
            "command": "quasirandom",
            "params": {"version": __version__, **params},
            "value": report.to_json_dict(),
        }
    else:
        result = _guard(
            deviation_mc, family, n, k, samples=samples, seed=seed, pattern_cap=pattern_cap
        )
        payload = {
            "command": "quasirandom",
            "params": {"version": __version__, **params, "samples": samples},
            "value": result,
            "seed": seed,
        }
    click.echo(json.dumps(payload))


@cli.command("oracle")
@click.option(
    "--suite",
    type=click.Choice(["parseval", "fform", "theorem1", "sandwich", "zset"]),
    required=True,
)
@click.option("--k-max", type=int, default=None, help="Range cap for k-indexed suites.")
@click.option("--n-max", type=int, default=None, help="Range cap for n-indexed suites.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "json"]),
    default="plain",
    show_default=True,
)
@click.pass_context
def oracle_cmd(ctx: click.Context, suite: str, k_max: int | None, n_max: int | None, fmt: str) -> None:
    """Run a cross-module invariant suite; exit 1 if any check fails."""
    from . import oracles

    runner = {
        "parseval": lambda: oracles.suite_parseval(8 if k_max is None else k_max),
        "fform": lambda: oracles.suite_fform(10 if n_max is None else n_max),
        "theorem1": lambda: oracles.suite_theorem1(14 if n_max is None else n_max),
        "sandwich": lambda: oracles.suite_sandwich(8 if n_max is None else n_max),
        "zset": lambda: oracles.suite_zset(6 if k_max is None else k_max),
    }[suite]
    checks = _guard(runner)
    failed = [c for c in checks if not c.passed]
    if fmt == "plain":
        for c in checks:
            if c.passed:
                click.echo(f"PASS {c.name}")
            else:
                click.echo(f"FAIL {c.name}: {c.detail}")
    else:
        payload = {
            "command": "oracle",
            "params": {"version": __version__, "suite": suite},
            "value": [
                {"check": c.name, "passed": c.passed, **({"detail": c.detail} if c.detail else {})}
                for c in checks
            ],
        }
        click.echo(json.dumps(payload))
    if failed:
        ctx.exit(1)


def main() -> None:
    cli(prog_name="ytab")


if __name__ == "__main__":
    main()
