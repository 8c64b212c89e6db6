import traceback
from contextlib import contextmanager
from enum import Enum
from typing import Optional

import typer

from abacus_partitions.asymptotics.bounds import check_pairs_crude_upper, run_all_bounds
from abacus_partitions.asymptotics.lemmas import certify_epsilon_bound, fit_epsilon_constant
from abacus_partitions.asymptotics.ratios import RatioKind, infer_b, ratio_table
from abacus_partitions.config import get_settings, load_settings, use_settings
from abacus_partitions.enumeration import CountKind, count_table, p_table, t_table
from abacus_partitions.errors import (
    AbacusError,
    DomainError,
    IndexOutOfRange,
    InvalidTree,
    LimitExceeded,
    MalformedInput,
    NoConvergence,
    NotWeaklyDecreasing,
)
from abacus_partitions.logger import log_danger, log_info, log_success, set_verbose
from abacus_partitions.partitions.abacus import (
    normalized_display,
    to_bead_sequence,
    two_quotient,
)
from abacus_partitions.partitions.partition import conjugate, parse_partition
from abacus_partitions.partitions.tree import QuotientTree, tree_decode, tree_encode
from abacus_partitions.series.identities import IDENTITIES, get_identity
from abacus_partitions.utils.export import OutputFormat, to_csv, to_json

app = typer.Typer(
    name="abacus",
    help="Exact 2-runner abacus calculus for integer partitions.",
    rich_markup_mode="markdown",
    no_args_is_help=True,
)

USAGE_ERRORS = (
    MalformedInput,
    NotWeaklyDecreasing,
    InvalidTree,
    LimitExceeded,
    IndexOutOfRange,
    DomainError,
    ValueError,
)

EXIT_FAILED = 1
EXIT_USAGE = 2


class AsymptoticKind(str, Enum):
    P = "p"
    T = "t"
    S = "s"
    Q = "q"
    SP = "sp"
    QP = "qp"
    B = "b"


@contextmanager
def _handled(command: str):
    """Maps library errors onto the exit-code contract."""
    try:
        yield
    except typer.Exit:
        raise
    except USAGE_ERRORS as e:
        log_danger(f"Usage Error: {e}")
        typer.echo(f"Usage: abacus {command} --help", err=True)
        raise typer.Exit(code=EXIT_USAGE)
    except NoConvergence as e:
        log_danger(f"Numerical Error: {e}")
        raise typer.Exit(code=EXIT_FAILED)
    except AbacusError as e:
        log_danger(f"Error: {e}")
        raise typer.Exit(code=EXIT_FAILED)
    except Exception as e:
        log_danger(f"An unexpected error occurred: {e}")
        traceback.print_exc()
        raise typer.Exit(code=EXIT_FAILED)


def _cap(n: int, what: str):
    limit = get_settings().max_n
    if n > limit:
        raise LimitExceeded(f"{what} {n} exceeds the table cap {limit} (set ABACUS_MAX_N to raise it).")
    if n < 0:
        raise IndexOutOfRange(f"{what} must be non-negative, got {n}.")


def _parse_points(text: str) -> list[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise MalformedInput(f"--points must be comma-separated integers, got {text!r}.")


FORMAT_OPTION = typer.Option(OutputFormat.TEXT, "--format", "-f", help="Output format: text, json or csv.")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Print progress diagnostics to stderr."),
):
    """
    Partitions on the binary abacus: cores, quotients, counts, identities and bounds.
    """
    set_verbose(verbose)
    try:
        use_settings(load_settings())
    except ValueError as e:
        log_danger(f"Configuration Error: {e}")
        raise typer.Exit(code=EXIT_USAGE)
    log_info(f"Settings: {get_settings().model_dump()}")


@app.command()
def show(
    partition: str = typer.Argument(..., help='Partition as "p1,p2,...,pk" ("" for the empty partition).'),
    abacus: bool = typer.Option(False, "--abacus", help="Print the normalized abacus display and bead sequence."),
    rim: bool = typer.Option(False, "--rim", help="Print the bead sequence of the rim."),
    conjugate_: bool = typer.Option(False, "--conjugate", help="Print the conjugate partition."),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Shows a partition, its rim sequence, abacus display or conjugate.
    """
    with _handled("show"):
        parsed = parse_partition(partition)
        sequence = to_bead_sequence(parsed)
        display = normalized_display(parsed)
        conjugated = conjugate(parsed)

        if fmt is OutputFormat.JSON:
            typer.echo(to_json({
                "partition": str(parsed),
                "size": parsed.size,
                "sequence": sequence.text,
                "display": [[".O"[a], ".O"[b]] for a, b in display.rows],
                "conjugate": str(conjugated),
            }))
        elif fmt is OutputFormat.CSV:
            typer.echo(to_csv(["row", "runner0", "runner1"], (
                (row, ".O"[a], ".O"[b]) for row, (a, b) in enumerate(display.rows)
            )))
        elif abacus:
            if display.rows:
                typer.echo(display.render())
            typer.echo(f"sequence: {sequence.text}")
        elif rim:
            typer.echo(sequence.text)
        elif conjugate_:
            typer.echo(str(conjugated))
        else:
            typer.echo(f"partition: {parsed}")
            typer.echo(f"size: {parsed.size}")
            if parsed:
                typer.echo(parsed.young_diagram())


@app.command("core-quotient")
def core_quotient(
    partition: str = typer.Argument(..., help='Partition as "p1,p2,...,pk".'),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Prints the 2-core (as its staircase index) and the 2-quotient (mu, nu).
    """
    with _handled("core-quotient"):
        parsed = parse_partition(partition)
        result = two_quotient(parsed)
        fields = {
            "partition": str(parsed),
            "core_index": result.core_index,
            "core": str(result.core),
            "mu": str(result.mu),
            "nu": str(result.nu),
        }
        if fmt is OutputFormat.JSON:
            typer.echo(to_json(fields))
        elif fmt is OutputFormat.CSV:
            typer.echo(to_csv(list(fields), [list(fields.values())]))
        else:
            typer.echo(f"core: ({result.core}) m={result.core_index}")
            typer.echo(f"quotient: ({result.mu}) | ({result.nu})")
            typer.echo(
                f"size: {parsed.size} = {result.core.size} + 2*({result.mu.size}+{result.nu.size})"
            )


@app.command()
def tree(
    partition: Optional[str] = typer.Argument(None, help='Partition as "p1,p2,...,pk".'),
    decode: Optional[str] = typer.Option(None, "--decode", help='Tree JSON such as {"label": 2} to turn back into a partition.'),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Encodes a partition as its labelled binary quotient tree, or decodes one.
    """
    with _handled("tree"):
        if decode is not None:
            decoded = tree_decode(QuotientTree.from_json(decode))
            if partition is not None and parse_partition(partition) != decoded:
                log_danger(f"Tree decodes to ({decoded}), not ({partition}).")
                raise typer.Exit(code=EXIT_FAILED)
            typer.echo(to_json({"partition": str(decoded)}) if fmt is OutputFormat.JSON else str(decoded))
            return

        if partition is None:
            raise MalformedInput("Give a partition to encode or --decode <json>.")
        encoded = tree_encode(parse_partition(partition))
        if fmt is OutputFormat.TEXT:
            typer.echo(encoded.render())
        else:
            typer.echo(encoded.to_json())


@app.command()
def count(
    kind: CountKind = typer.Argument(..., help="p, t, s or q."),
    n: int = typer.Argument(..., help="Index to evaluate."),
    table: bool = typer.Option(False, "--table", help="Print the whole table 0..n."),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Exact values of p(n), t(n), s(n) or q(n) from the core-quotient recurrences.
    """
    with _handled("count"):
        _cap(n, "n")
        values = count_table(kind, n)
        if not table:
            value = values[n]
            typer.echo(to_json({"kind": kind.value, "n": n, "value": value}) if fmt is OutputFormat.JSON else str(value))
            return

        if fmt is OutputFormat.JSON:
            typer.echo(to_json(list(values.values)))
        elif fmt is OutputFormat.CSV:
            typer.echo(to_csv(["n", "value"], values.as_rows()))
        else:
            typer.echo("\n".join(f"{i} {v}" for i, v in values.as_rows()))


@app.command()
def verify(
    identity: str = typer.Argument(..., help=f"One of: {', '.join(IDENTITIES)}."),
    order: int = typer.Option(100, "--order", "-N", help="Compare coefficients up to x^order."),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Verifies a generating-function identity coefficient by coefficient.
    """
    with _handled("verify"):
        _cap(order, "order")
        verdict = get_identity(identity).verify(order)
        typer.echo(to_json(verdict) if fmt is OutputFormat.JSON else verdict.summary())
        if not verdict.equal:
            raise typer.Exit(code=EXIT_FAILED)
        log_success(f"{identity} verified to x^{order}")


@app.command()
def bounds(
    max_n: int = typer.Option(5000, "--max-n", help="Check every bound for 1 <= n <= max-n."),
    epsilon: Optional[float] = typer.Option(None, "--epsilon", help="Also fit and certify A(epsilon) for log p(n) <= A n^(1/2+epsilon)."),
    pairs: bool = typer.Option(False, "--pairs", help="Also check t(n) <= n e^(c sqrt(2n)) (builds a full t table)."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Threads for range checks (default from settings)."),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Checks the upper and lower bounds for p(n) against exact values.
    """
    with _handled("bounds"):
        _cap(max_n, "--max-n")
        table = p_table(max_n)
        reports = run_all_bounds(table, max_n, workers)
        if pairs:
            reports.append(check_pairs_crude_upper(t_table(max_n), max_n, workers))
        if epsilon is not None:
            bound = fit_epsilon_constant(epsilon, max_n, table)
            log_info(f"A({epsilon}) = {bound.A}")
            reports.append(certify_epsilon_bound(bound, table, max_n, workers))

        if fmt is OutputFormat.JSON:
            typer.echo(to_json(reports))
        elif fmt is OutputFormat.CSV:
            typer.echo(to_csv(
                ["bound", "n_lo", "n_hi", "holds", "first_violation", "min_slack", "max_slack"],
                ((r.bound_name, r.n_lo, r.n_hi, r.holds, r.first_violation if r.first_violation is not None else "",
                  r.min_slack, r.max_slack) for r in reports),
            ))
        else:
            for report in reports:
                typer.echo(report.summary())

        if not all(report.holds for report in reports):
            raise typer.Exit(code=EXIT_FAILED)


@app.command()
def asymptotics(
    kind: AsymptoticKind = typer.Argument(..., help="p, t, s, q, sp (s/p), qp (q/p) or b (implied constant)."),
    points: str = typer.Option(..., "--points", help="Comma-separated sample points, e.g. 100,500,1000."),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Compares exact counts with their leading-term asymptotic formulas.
    """
    with _handled("asymptotics"):
        sample = _parse_points(points)
        if kind is AsymptoticKind.B:
            rows = infer_b(sample)
            if fmt is OutputFormat.JSON:
                typer.echo(to_json(rows))
            else:
                typer.echo(to_csv(["n", "b"], ((row.n, row.b_digits) for row in rows)))
            return

        rows = ratio_table(RatioKind(kind.value), sample)
        if fmt is OutputFormat.JSON:
            typer.echo(to_json(rows))
        else:
            typer.echo(to_csv(["n", "exact", "estimate", "ratio"], (row.csv_row() for row in rows)))


if __name__ == "__main__":
    app()
