from typing import Optional

from mpmath.ctx_mp import MPContext
from pydantic import BaseModel, Field

from abacus_partitions.config import get_settings


def precision_context(digits: Optional[int] = None) -> MPContext:
    """
    A private mpmath context at the configured working precision.

    Each caller (and each worker thread) gets its own context, so precision
    changes never leak between concurrent computations.
    """
    ctx = MPContext()
    ctx.dps = digits if digits is not None else get_settings().precision_digits
    return ctx


def hardy_ramanujan_c(ctx: MPContext):
    """c = 2 sqrt(pi^2 / 6) = pi sqrt(2/3)."""
    return 2 * ctx.sqrt(ctx.pi ** 2 / 6)


def hardy_ramanujan_b(ctx: MPContext):
    """b = 4 sqrt(3)."""
    return 4 * ctx.sqrt(3)


class AsymptoticConstants(BaseModel):
    """The constants c and b of p(n) ~ e^(c sqrt n) / (b n), as decimal strings and floats."""

    c: float = Field(..., description="2 sqrt(pi^2 / 6), approximately 2.56510.")
    b: float = Field(..., description="4 sqrt(3), approximately 6.92820.")
    c_digits: str
    b_digits: str

    @classmethod
    def evaluate(cls, digits: Optional[int] = None) -> "AsymptoticConstants":
        ctx = precision_context(digits)
        c, b = hardy_ramanujan_c(ctx), hardy_ramanujan_b(ctx)
        return cls(
            c=float(c), b=float(b),
            c_digits=ctx.nstr(c, ctx.dps), b_digits=ctx.nstr(b, ctx.dps),
        )
