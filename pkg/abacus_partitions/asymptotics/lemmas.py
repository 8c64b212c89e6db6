"""
Numerical counterparts of the two analytic lemmas behind the bounds.

fit_epsilon_constant finds, for f(x) = e^(A x^beta) with beta = 1/2 + eps,
the least A (by bisection) such that for every 1 <= n <= n_max

    sum_{0 <= s <= n/2} f(floor(n/2) - s) f(s) <= f(n) / n,

the condition under which induction on the core-quotient recurrence gives
p(n) <= f(n). The left side is evaluated as a log-sum-exp in doubles; the
resulting constant is then certified against exact p(n) at high precision.

gaussian_sum_check evaluates S_m = sum_{r=0}^{alpha m^(beta+theta)}
e^(-gamma r^2 / m^(2 beta)) against its limit sqrt(pi / (4 gamma)) m^beta.
"""

import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from abacus_partitions.asymptotics.bounds import BoundReport, PowerBoundCheck
from abacus_partitions.asymptotics.constants import precision_context
from abacus_partitions.enumeration import CountTable, p_table
from abacus_partitions.errors import DomainError, NoConvergence
from abacus_partitions.logger import log_stage


class EpsilonBound(BaseModel):
    """A constant A for which log p(n) <= A n^beta on the fitted range."""

    epsilon: float = Field(..., gt=0, lt=0.5)
    beta: float = Field(..., gt=0.5, lt=1.0, description="1/2 + epsilon.")
    A: float = Field(..., gt=0, description="Least feasible constant found by bisection.")
    n_max: int = Field(..., ge=1)
    iterations: int = 0
    certified: Optional[bool] = Field(None, description="log p(n) <= A n^beta held for all n <= n_max.")

    @model_validator(mode="after")
    def _beta_matches_epsilon(self):
        if not math.isclose(self.beta, 0.5 + self.epsilon, rel_tol=1e-12):
            raise ValueError(f"beta must equal 1/2 + epsilon, got {self.beta} for {self.epsilon}")
        return self


class _LemmaCondition:
    """Precomputed exponents for every n; feasibility is monotone in A."""

    def __init__(self, beta: float, n_max: int):
        self.rows = []
        for n in range(1, n_max + 1):
            k = n // 2
            s = np.arange(k + 1, dtype=float)
            h = (k - s) ** beta + s ** beta
            peak = float(h.max())
            self.rows.append((h - peak, peak, float(n) ** beta, math.log(n)))

    def holds(self, constant: float) -> bool:
        for offsets, peak, n_beta, log_n in self.rows:
            log_lhs = constant * peak + math.log(float(np.exp(constant * offsets).sum()))
            if log_lhs > constant * n_beta - log_n:
                return False
        return True


def certify_epsilon_bound(bound: EpsilonBound, table: CountTable, n_max: int,
                          workers: Optional[int] = None) -> BoundReport:
    """Checks log p(n) <= A n^beta for 1 <= n <= n_max with exact p(n)."""
    return PowerBoundCheck(table, bound.A, bound.beta).run(n_max, workers)


def fit_epsilon_constant(
    epsilon: float,
    n_max: int,
    table: Optional[CountTable] = None,
    bracket: tuple[float, float] = (1.0, 1e6),
    rel_width: float = 1e-6,
) -> EpsilonBound:
    if not 0 < epsilon < 0.5:
        raise DomainError(f"epsilon must lie in (0, 1/2), got {epsilon}.")
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}.")

    beta = 0.5 + epsilon
    condition = _LemmaCondition(beta, n_max)
    lo, hi = bracket
    iterations = 0

    if condition.holds(lo):
        hi = lo
    else:
        if not condition.holds(hi):
            raise NoConvergence(
                f"The lemma condition fails at A={hi} for epsilon={epsilon}; bracket {bracket} is too small."
            )
        while hi - lo > rel_width * hi:
            mid = (lo + hi) / 2
            if condition.holds(mid):
                hi = mid
            else:
                lo = mid
            iterations += 1

    log_stage("lemmas", "fitted epsilon constant", f"eps={epsilon}, A={hi:.9g}, {iterations} steps")
    bound = EpsilonBound(epsilon=epsilon, beta=beta, A=hi, n_max=n_max, iterations=iterations)
    report = certify_epsilon_bound(bound, table if table is not None else p_table(n_max), n_max)
    return bound.model_copy(update={"certified": report.holds})


class GaussianSum(BaseModel):
    """A truncated Gaussian sum and its limiting value."""

    terms: int
    sum: float
    limit: float
    ratio: float = Field(..., description="sum / limit.")
    corrected_ratio: float = Field(..., description="(sum - 1/2) / limit, removing the r = 0 endpoint bias.")
    integral: float = Field(..., description="The same Gaussian integrated over [0, upper].")
    sandwich_holds: bool = Field(..., description="sum - 1 <= integral <= sum.")


def gaussian_sum_check(alpha: float, beta: float, gamma: float, theta: float, m: int) -> GaussianSum:
    if min(alpha, beta, gamma, theta) <= 0:
        raise DomainError("alpha, beta, gamma and theta must all be positive.")
    if m < 1:
        raise DomainError(f"m must be at least 1, got {m}.")

    upper = math.floor(alpha * m ** (beta + theta))
    scale = float(m) ** (2 * beta)
    r = np.arange(upper + 1, dtype=float)
    total = float(np.exp(-gamma * r * r / scale).sum())
    limit = math.sqrt(math.pi / (4 * gamma)) * float(m) ** beta

    ctx = precision_context()
    integral = limit * float(ctx.erf(ctx.sqrt(gamma) * upper / ctx.mpf(m) ** beta))

    return GaussianSum(
        terms=upper + 1,
        sum=total,
        limit=limit,
        ratio=total / limit,
        corrected_ratio=(total - 0.5) / limit,
        integral=integral,
        sandwich_holds=total - 1 <= integral <= total,
    )
