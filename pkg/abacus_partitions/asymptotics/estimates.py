"""
Leading-term asymptotic formulas, evaluated with b = 4 sqrt(3):

    p(n) ~ e^(c sqrt n) / (b n)
    t(n) ~ e^(c sqrt(2n)) / n^(5/4) * 2^2 3^(1/4) / b^2
    s(n) ~ e^((c/2) sqrt n) / (2^(7/4) 3^(1/4) n^(3/4))
    q(n) ~ e^((c/sqrt 2) sqrt n) / (2^2 3^(1/4) n^(3/4))
    s(n)/p(n) ~ (6n)^(1/4) e^(-c sqrt(n) / 2)
    q(n)/p(n) ~ (3n)^(1/4) e^(-c sqrt(n) (1 - 1/sqrt 2))
"""

from typing import Optional

from mpmath.ctx_mp import MPContext

from abacus_partitions.asymptotics.constants import (
    hardy_ramanujan_b,
    hardy_ramanujan_c,
    precision_context,
)
from abacus_partitions.errors import DomainError


def _setup(n, ctx: Optional[MPContext]):
    if n < 1:
        raise DomainError(f"Asymptotic formulas need n >= 1, got {n}.")
    ctx = ctx or precision_context()
    return ctx, ctx.mpf(n), hardy_ramanujan_c(ctx)


def hr_estimate(n: int, ctx: Optional[MPContext] = None):
    ctx, x, c = _setup(n, ctx)
    return ctx.exp(c * ctx.sqrt(x)) / (hardy_ramanujan_b(ctx) * x)


def t_estimate(n: int, ctx: Optional[MPContext] = None):
    ctx, x, c = _setup(n, ctx)
    prefactor = 4 * ctx.root(3, 4) / hardy_ramanujan_b(ctx) ** 2
    return ctx.exp(c * ctx.sqrt(2 * x)) / x ** ctx.mpf(1.25) * prefactor


def s_estimate(n: int, ctx: Optional[MPContext] = None):
    ctx, x, c = _setup(n, ctx)
    denominator = ctx.mpf(2) ** ctx.mpf(1.75) * ctx.root(3, 4) * x ** ctx.mpf(0.75)
    return ctx.exp(c / 2 * ctx.sqrt(x)) / denominator


def q_estimate(n: int, ctx: Optional[MPContext] = None):
    ctx, x, c = _setup(n, ctx)
    denominator = 4 * ctx.root(3, 4) * x ** ctx.mpf(0.75)
    return ctx.exp(c / ctx.sqrt(2) * ctx.sqrt(x)) / denominator


def self_conjugate_proportion_estimate(n: int, ctx: Optional[MPContext] = None):
    ctx, x, c = _setup(n, ctx)
    return ctx.root(6 * x, 4) * ctx.exp(-c * ctx.sqrt(x) / 2)


def distinct_parts_proportion_estimate(n: int, ctx: Optional[MPContext] = None):
    ctx, x, c = _setup(n, ctx)
    return ctx.root(3 * x, 4) * ctx.exp(-c * ctx.sqrt(x) * (1 - 1 / ctx.sqrt(2)))


def p32_estimate(m: int, b=None, ctx: Optional[MPContext] = None):
    """p(32m) ~ e^(c sqrt(32m)) / (32m) * 2^2 3^(1/2) / b^2, for any candidate b."""
    ctx, _, c = _setup(m, ctx)
    b = hardy_ramanujan_b(ctx) if b is None else ctx.mpf(b)
    x = 32 * ctx.mpf(m)
    return ctx.exp(c * ctx.sqrt(x)) / x * 4 * ctx.sqrt(3) / b ** 2


def implied_b(n: int, p_n: int, ctx: Optional[MPContext] = None):
    """The b for which e^(c sqrt n) / (b n) equals p(n) exactly."""
    ctx, x, c = _setup(n, ctx)
    return ctx.exp(c * ctx.sqrt(x)) / (x * ctx.mpf(p_n))
