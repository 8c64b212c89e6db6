"""
Exact counting of partitions.

p(n) counts partitions of n, t(n) ordered pairs of partitions of total size
n, s(n) self-conjugate partitions and q(n) partitions into distinct parts.
The tables come from the core-quotient bijection:

    p(n) = sum over r of t((n - r(r+1)/2) / 2),  t(n) = sum_m p(m) p(n - m)
    s(n) = sum over r of p((n - r(r+1)/2) / 4)
    q(n) = sum over r of p((n - r(r+1)/2) / 2)

where each sum runs over the r for which the argument is a non-negative
integer. Brute-force generators serve as independent oracles.
"""

import threading
from enum import Enum
from typing import Iterator, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field

from abacus_partitions.config import get_settings
from abacus_partitions.errors import IndexOutOfRange, LimitExceeded
from abacus_partitions.logger import log_stage
from abacus_partitions.partitions.abacus import is_self_conjugate
from abacus_partitions.partitions.partition import Partition

BRUTE_COUNT_LIMIT = 40


class CountKind(str, Enum):
    P = "p"
    T = "t"
    S = "s"
    Q = "q"


class CountTable(BaseModel):
    """Exact values of one counting function at 0..N."""

    model_config = ConfigDict(frozen=True)

    kind: CountKind = Field(..., description="Which counting function the values belong to.")
    values: tuple[int, ...] = Field(..., min_length=1, description="values[n] for n = 0..N.")

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexOutOfRange(f"{self.kind.value}({n}) is outside the table 0..{self.order}.")
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def as_rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values))


def triangular_numbers(limit: int) -> Iterator[int]:
    """r(r+1)/2 for r = 0, 1, 2, ... while it does not exceed limit."""
    r = 0
    while r * (r + 1) // 2 <= limit:
        yield r * (r + 1) // 2
        r += 1


def _ascending(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in _ascending(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, limit: Optional[int] = None) -> list[Partition]:
    """All partitions of n in lexicographic order (brute force)."""
    limit = get_settings().brute_force_limit if limit is None else limit
    if n < 0:
        raise IndexOutOfRange(f"n must be non-negative, got {n}.")
    if n > limit:
        raise LimitExceeded(f"Refusing to generate partitions of {n} (limit {limit}).")
    return [Partition(parts) for parts in _ascending(n, n)]


def pairs_of(n: int, limit: Optional[int] = None) -> list[tuple[Partition, Partition]]:
    """All ordered pairs (mu, nu) with |mu| + |nu| = n."""
    by_size = [partitions_of(k, limit) for k in range(n + 1)]
    return [(mu, nu) for k in range(n + 1) for mu in by_size[k] for nu in by_size[n - k]]


def count_self_conjugate_brute(n: int) -> int:
    if n > BRUTE_COUNT_LIMIT:
        raise LimitExceeded(f"Brute-force counting is limited to n <= {BRUTE_COUNT_LIMIT}, got {n}.")
    return sum(1 for partition in partitions_of(n, BRUTE_COUNT_LIMIT) if is_self_conjugate(partition))


def count_distinct_parts_brute(n: int) -> int:
    if n > BRUTE_COUNT_LIMIT:
        raise LimitExceeded(f"Brute-force counting is limited to n <= {BRUTE_COUNT_LIMIT}, got {n}.")
    return sum(1 for partition in partitions_of(n, BRUTE_COUNT_LIMIT) if partition.has_distinct_parts())


def t_value(n: int, p_values: Union["CountTable", Sequence[int]]) -> int:
    """t(n) = sum_{m=0}^{n} p(m) p(n-m), folded over the symmetric halves."""
    p = p_values.values if isinstance(p_values, CountTable) else p_values
    if n >= len(p):
        raise IndexOutOfRange(f"t({n}) needs p up to {n}, table stops at {len(p) - 1}.")
    total = 2 * sum(p[m] * p[n - m] for m in range((n + 1) // 2))
    if n % 2 == 0:
        total += p[n // 2] ** 2
    return total


class _JointRecurrence:
    """Incrementally extended p and t values; p(n) only needs t up to n // 2."""

    def __init__(self):
        self._lock = threading.Lock()
        self.p: list[int] = [1]
        self.t: list[int] = [1]

    def _extend_t(self, k: int):
        while len(self.t) <= k:
            self.t.append(t_value(len(self.t), self.p))

    def extend_p(self, n_max: int) -> tuple[int, ...]:
        with self._lock:
            while len(self.p) <= n_max:
                n = len(self.p)
                self._extend_t(n // 2)
                self.p.append(sum(
                    self.t[(n - tri) // 2]
                    for tri in triangular_numbers(n)
                    if (n - tri) % 2 == 0
                ))
            return tuple(self.p[: n_max + 1])

    def extend_t(self, n_max: int) -> tuple[int, ...]:
        self.extend_p(n_max)
        with self._lock:
            self._extend_t(n_max)
            return tuple(self.t[: n_max + 1])


_recurrence = _JointRecurrence()


def _check_order(order: int):
    if order < 0:
        raise IndexOutOfRange(f"Table order must be non-negative, got {order}.")


def p_table(order: int) -> CountTable:
    _check_order(order)
    values = _recurrence.extend_p(order)
    log_stage("enumeration", "p table ready", f"0..{order}")
    return CountTable(kind=CountKind.P, values=values)


def t_table(order: int) -> CountTable:
    _check_order(order)
    values = _recurrence.extend_t(order)
    log_stage("enumeration", "t table ready", f"0..{order}")
    return CountTable(kind=CountKind.T, values=values)


def _sum_over_triangles(order: int, divisor: int, p: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        sum(p[(n - tri) // divisor] for tri in triangular_numbers(n) if (n - tri) % divisor == 0)
        for n in range(order + 1)
    )


def s_table(order: int, p: Optional[CountTable] = None) -> CountTable:
    _check_order(order)
    p_values = (p if p is not None else p_table(order // 4)).values
    if len(p_values) <= order // 4:
        raise IndexOutOfRange(f"s table to {order} needs p up to {order // 4}.")
    log_stage("enumeration", "s table ready", f"0..{order}")
    return CountTable(kind=CountKind.S, values=_sum_over_triangles(order, 4, p_values))


def q_table(order: int, p: Optional[CountTable] = None) -> CountTable:
    _check_order(order)
    p_values = (p if p is not None else p_table(order // 2)).values
    if len(p_values) <= order // 2:
        raise IndexOutOfRange(f"q table to {order} needs p up to {order // 2}.")
    log_stage("enumeration", "q table ready", f"0..{order}")
    return CountTable(kind=CountKind.Q, values=_sum_over_triangles(order, 2, p_values))


def count_table(kind: CountKind, order: int) -> CountTable:
    builders = {
        CountKind.P: p_table,
        CountKind.T: t_table,
        CountKind.S: s_table,
        CountKind.Q: q_table,
    }
    return builders[kind](order)
