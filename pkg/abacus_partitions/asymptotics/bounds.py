"""
Range checks of inequalities for p(n) against exact tables.

Every check reports its slack in natural-log units (positive when the
inequality holds). Ranges are split into contiguous chunks evaluated by a
thread pool; each chunk uses its own mpmath context and the partial reports
are merged by the smallest violating n, so the result does not depend on the
number of workers.
"""

from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional, Sequence

from pydantic import BaseModel, Field

from abacus_partitions.asymptotics.constants import hardy_ramanujan_c, precision_context
from abacus_partitions.config import get_settings
from abacus_partitions.enumeration import CountTable
from abacus_partitions.errors import IndexOutOfRange
from abacus_partitions.logger import log_stage, log_warning


class BoundReport(BaseModel):
    """Outcome of checking one inequality over a range of n."""

    bound_name: str
    n_lo: int
    n_hi: int
    holds: bool = Field(..., description="True iff no n in the range violates the inequality.")
    first_violation: Optional[int] = None
    checked: int = Field(0, description="Number of indices evaluated.")
    max_slack: Optional[float] = Field(None, description="Largest log-scale margin observed.")
    min_slack: Optional[float] = Field(None, description="Smallest log-scale margin observed.")

    def summary(self) -> str:
        verdict = "holds" if self.holds else f"VIOLATED first at n={self.first_violation}"
        slack = ""
        if self.min_slack is not None:
            slack = f" (slack {self.min_slack:.6g} .. {self.max_slack:.6g})"
        return f"{self.bound_name} on [{self.n_lo}, {self.n_hi}]: {verdict}{slack}"


def merge_reports(bound_name: str, reports: Sequence[BoundReport]) -> BoundReport:
    """Combines partial reports; the first violation is the smallest one seen."""
    violations = [r.first_violation for r in reports if r.first_violation is not None]
    max_slacks = [r.max_slack for r in reports if r.max_slack is not None]
    min_slacks = [r.min_slack for r in reports if r.min_slack is not None]
    return BoundReport(
        bound_name=bound_name,
        n_lo=min((r.n_lo for r in reports), default=0),
        n_hi=max((r.n_hi for r in reports), default=0),
        holds=all(r.holds for r in reports),
        first_violation=min(violations) if violations else None,
        checked=sum(r.checked for r in reports),
        max_slack=max(max_slacks) if max_slacks else None,
        min_slack=min(min_slacks) if min_slacks else None,
    )


class BoundCheck(ABC):
    """An inequality in n, checked against an exact count table (p unless stated)."""

    name: str = ""
    n_lo: int = 1

    def __init__(self, table: CountTable):
        self.table = table

    def indices(self, n_max: int) -> Iterable[int]:
        return range(self.n_lo, n_max + 1)

    @abstractmethod
    def evaluate(self, n: int, ctx) -> tuple[bool, object]:
        """(holds, log-scale slack) at index n."""
        pass

    def _log_value(self, n: int, ctx):
        return ctx.log(ctx.mpf(self.table[n]))

    def _run_chunk(self, chunk: list[int], digits: int) -> BoundReport:
        ctx = precision_context(digits)
        first_violation = None
        slacks = []
        for n in chunk:
            holds, slack = self.evaluate(n, ctx)
            slacks.append(float(slack))
            if not holds and first_violation is None:
                first_violation = n
        return BoundReport(
            bound_name=self.name,
            n_lo=chunk[0],
            n_hi=chunk[-1],
            holds=first_violation is None,
            first_violation=first_violation,
            checked=len(chunk),
            max_slack=max(slacks),
            min_slack=min(slacks),
        )

    def run(self, n_max: int, workers: Optional[int] = None) -> BoundReport:
        settings = get_settings()
        workers = workers or settings.workers
        indices = list(self.indices(n_max))
        if indices and indices[-1] > self.table.order:
            raise IndexOutOfRange(
                f"{self.name} up to {indices[-1]} needs the table up to {indices[-1]}, "
                f"table stops at {self.table.order}."
            )
        if not indices:
            return BoundReport(bound_name=self.name, n_lo=self.n_lo, n_hi=n_max, holds=True)

        size = -(-len(indices) // workers)
        chunks = [indices[i: i + size] for i in range(0, len(indices), size)]
        log_stage("bounds", f"checking {self.name}", f"{len(indices)} indices, {len(chunks)} chunks")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(
                lambda chunk: self._run_chunk(chunk, settings.precision_digits), chunks
            ))

        report = merge_reports(self.name, reports)
        if not report.holds:
            log_warning(report.summary())
        return report


class ErdosUpperCheck(BoundCheck):
    """log p(n) <= c sqrt(n)."""

    name = "erdos-upper"

    def evaluate(self, n, ctx):
        slack = hardy_ramanujan_c(ctx) * ctx.sqrt(n) - self._log_value(n, ctx)
        return slack >= 0, slack


class MarotiLowerCheck(BoundCheck):
    """p(n) >= e^(2 sqrt n) / 14."""

    name = "maroti-lower"

    def evaluate(self, n, ctx):
        slack = self._log_value(n, ctx) - (2 * ctx.sqrt(n) - ctx.log(14))
        return slack >= 0, slack


class FourfoldSquareCheck(BoundCheck):
    """p(4m) >= p(m)^2, indexed by n = 4m."""

    name = "fourfold-square"
    n_lo = 4

    def indices(self, n_max):
        return range(4, n_max + 1, 4)

    def evaluate(self, n, ctx):
        m = n // 4
        holds = self.table[n] >= self.table[m] ** 2
        return holds, self._log_value(n, ctx) - 2 * self._log_value(m, ctx)


class SqrtLogLowerCheck(BoundCheck):
    """log p(n) >= (log 5 / 4) sqrt(n) for n >= 4."""

    name = "sqrt-log-lower"
    n_lo = 4

    def evaluate(self, n, ctx):
        slack = self._log_value(n, ctx) - ctx.log(5) / 4 * ctx.sqrt(n)
        return slack >= 0, slack


class PowerOfFourCheck(BoundCheck):
    """p(4^r) >= 5^(2^(r-1)) for r >= 1."""

    name = "power-of-four"
    n_lo = 4

    def indices(self, n_max):
        n = 4
        while n <= n_max:
            yield n
            n *= 4

    def evaluate(self, n, ctx):
        r = (n.bit_length() - 1) // 2
        floor = 5 ** (2 ** (r - 1))
        return self.table[n] >= floor, self._log_value(n, ctx) - ctx.log(floor)


class PowerBoundCheck(BoundCheck):
    """log p(n) <= A n^beta."""

    name = "epsilon-upper"

    def __init__(self, table: CountTable, constant: float, beta: float):
        super().__init__(table)
        self.constant = constant
        self.beta = beta

    def evaluate(self, n, ctx):
        slack = ctx.mpf(self.constant) * ctx.mpf(n) ** ctx.mpf(self.beta) - self._log_value(n, ctx)
        return slack >= 0, slack


class PairsCrudeUpperCheck(BoundCheck):
    """t(n) <= n e^(c sqrt(2n)); the table here is a t table."""

    name = "pairs-crude-upper"

    def evaluate(self, n, ctx):
        slack = ctx.log(n) + hardy_ramanujan_c(ctx) * ctx.sqrt(2 * n) - self._log_value(n, ctx)
        return slack >= 0, slack


def check_erdos_upper(table: CountTable, n_max: int, workers: Optional[int] = None) -> BoundReport:
    return ErdosUpperCheck(table).run(n_max, workers)


def check_maroti_lower(table: CountTable, n_max: int, workers: Optional[int] = None) -> BoundReport:
    return MarotiLowerCheck(table).run(n_max, workers)


def check_combinatorial_lower(table: CountTable, n_max: int, workers: Optional[int] = None) -> BoundReport:
    """p(4m) >= p(m)^2 for 4m <= n_max together with log p(n) >= (log 5 / 4) sqrt(n)."""
    return merge_reports("combinatorial-lower", [
        FourfoldSquareCheck(table).run(n_max, workers),
        SqrtLogLowerCheck(table).run(n_max, workers),
    ])


def check_power_of_four(table: CountTable, n_max: int, workers: Optional[int] = None) -> BoundReport:
    return PowerOfFourCheck(table).run(n_max, workers)


def check_pairs_crude_upper(t_values: CountTable, n_max: int, workers: Optional[int] = None) -> BoundReport:
    return PairsCrudeUpperCheck(t_values).run(n_max, workers)


def run_all_bounds(table: CountTable, n_max: int, workers: Optional[int] = None) -> list[BoundReport]:
    return [
        check_erdos_upper(table, n_max, workers),
        check_maroti_lower(table, n_max, workers),
        check_combinatorial_lower(table, n_max, workers),
        check_power_of_four(table, n_max, workers),
    ]
