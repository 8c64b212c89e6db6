from enum import Enum
from typing import Callable, Iterable, Optional

from pydantic import BaseModel, Field

from abacus_partitions.asymptotics.constants import precision_context
from abacus_partitions.asymptotics.estimates import (
    distinct_parts_proportion_estimate,
    hr_estimate,
    implied_b,
    q_estimate,
    s_estimate,
    self_conjugate_proportion_estimate,
    t_estimate,
)
from abacus_partitions.config import get_settings
from abacus_partitions.enumeration import CountTable, p_table, q_table, s_table, t_value
from abacus_partitions.errors import IndexOutOfRange
from abacus_partitions.logger import log_stage

SIG_FIGS = 10


class RatioKind(str, Enum):
    P = "p"
    T = "t"
    S = "s"
    Q = "q"
    SP = "sp"
    QP = "qp"


class RatioRow(BaseModel):
    """Exact value, leading-term estimate and their ratio at one n."""

    n: int
    exact: str = Field(..., description="Exact count (decimal) or, for proportions, a 20-digit value.")
    estimate: str = Field(..., description="Formula value, scientific notation, 10 significant figures.")
    ratio: float

    def csv_row(self) -> list[str]:
        return [str(self.n), self.exact, self.estimate, f"{self.ratio:.{SIG_FIGS}g}"]


class ConstantRow(BaseModel):
    """The constant b implied by the exact value p(n)."""

    n: int
    b: float
    b_digits: str


def _scientific(ctx, value) -> str:
    return ctx.nstr(value, SIG_FIGS, min_fixed=0, max_fixed=0)


def _check_points(points: list[int]):
    if not points:
        raise IndexOutOfRange("At least one sample point is required.")
    bad = [n for n in points if n < 1]
    if bad:
        raise IndexOutOfRange(f"Sample points must be >= 1, got {bad}.")
    limit = get_settings().max_n
    if max(points) > limit:
        raise IndexOutOfRange(f"Sample point {max(points)} exceeds the table cap {limit} (ABACUS_MAX_N).")


def _p_values(points: list[int], table: Optional[CountTable]) -> CountTable:
    top = max(points)
    if table is None:
        return p_table(top)
    if table.order < top:
        raise IndexOutOfRange(f"Sample point {top} is outside the p table 0..{table.order}.")
    return table


def ratio_table(kind: RatioKind, sample_points: Iterable[int],
                table: Optional[CountTable] = None) -> list[RatioRow]:
    """Exact value, estimate and ratio at each sample point, in the order given."""
    kind = RatioKind(kind)
    points = list(sample_points)
    _check_points(points)
    top = max(points)
    p = _p_values(points, table)
    ctx = precision_context()

    exact: Callable[[int], object]
    estimate: Callable[[int], object]
    if kind is RatioKind.P:
        exact, estimate = (lambda n: p[n]), hr_estimate
    elif kind is RatioKind.T:
        exact, estimate = (lambda n: t_value(n, p)), t_estimate
    elif kind is RatioKind.S:
        s = s_table(top, p)
        exact, estimate = (lambda n: s[n]), s_estimate
    elif kind is RatioKind.Q:
        q = q_table(top, p)
        exact, estimate = (lambda n: q[n]), q_estimate
    elif kind is RatioKind.SP:
        s = s_table(top, p)
        exact, estimate = (lambda n: ctx.mpf(s[n]) / p[n]), self_conjugate_proportion_estimate
    else:
        q = q_table(top, p)
        exact, estimate = (lambda n: ctx.mpf(q[n]) / p[n]), distinct_parts_proportion_estimate

    rows = []
    for n in points:
        value = exact(n)
        approx = estimate(n, ctx)
        text = str(value) if isinstance(value, int) else ctx.nstr(value, 20)
        rows.append(RatioRow(
            n=n,
            exact=text,
            estimate=_scientific(ctx, approx),
            ratio=float(ctx.mpf(value) / approx),
        ))
    log_stage("ratios", f"{kind.value} ratios computed", f"{len(rows)} points")
    return rows


def infer_b(sample_points: Iterable[int], table: Optional[CountTable] = None) -> list[ConstantRow]:
    """b_n = e^(c sqrt n) / (n p(n)), which tends to 4 sqrt(3)."""
    points = list(sample_points)
    _check_points(points)
    p = _p_values(points, table)
    ctx = precision_context()
    rows = []
    for n in points:
        b = implied_b(n, p[n], ctx)
        rows.append(ConstantRow(n=n, b=float(b), b_digits=ctx.nstr(b, 20)))
    return rows
