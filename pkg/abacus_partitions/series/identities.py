"""
Generating functions and coefficient-exact identity checks.

    P(x) = prod 1/(1 - x^n)          partitions
    Q(x) = prod (1 + x^n)            partitions into distinct parts
    theta(x) = sum x^(m(m+1)/2)      one term per 2-core

Checked identities (all modulo x^(N+1)):

    gauss          (1-x^2)(1-x^4)... / (1-x)(1-x^3)... = theta(x)
    quotient       P(x) = P(x^2)^2 theta(x)
    tree-product   P(x) = prod_m theta(x^(2^m))^(2^m)
    q-identities   Q(x) = P(x) / P(x^2) and Q(x) = P(x^2) theta(x)
"""

from abc import ABC, abstractmethod
from typing import Optional

from pydantic import BaseModel, Field, field_serializer

from abacus_partitions.errors import DomainError
from abacus_partitions.logger import log_stage
from abacus_partitions.series.truncated import TruncatedSeries


class Verdict(BaseModel):
    """Outcome of comparing two truncated series coefficient by coefficient."""

    identity: str = Field(..., description="Name of the identity (or the side pair) compared.")
    order: int = Field(..., description="Coefficients x^0..x^order were compared.")
    equal: bool
    mismatch_index: Optional[int] = Field(None, description="First exponent where the sides differ.")
    lhs_coefficient: Optional[int] = None
    rhs_coefficient: Optional[int] = None

    @field_serializer("lhs_coefficient", "rhs_coefficient")
    def _as_decimal(self, value: Optional[int]) -> Optional[str]:
        return None if value is None else str(value)

    def summary(self) -> str:
        if self.equal:
            return f"OK: identical to x^{self.order}"
        return (
            f"MISMATCH ({self.identity}) at x^{self.mismatch_index}: "
            f"lhs={self.lhs_coefficient}, rhs={self.rhs_coefficient}"
        )


def compare_series(identity: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> Verdict:
    if lhs.order != rhs.order:
        raise DomainError(f"Cannot compare series of orders {lhs.order} and {rhs.order}.")
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return Verdict(
                identity=identity, order=lhs.order, equal=False,
                mismatch_index=n, lhs_coefficient=a, rhs_coefficient=b,
            )
    return Verdict(identity=identity, order=lhs.order, equal=True)


def euler_product(order: int) -> TruncatedSeries:
    """P(x) = prod_{n>=1} 1/(1 - x^n); factors past x^order are 1."""
    series = TruncatedSeries.one(order)
    for n in range(1, order + 1):
        series = series.over_one_minus_power(n)
    return series


def theta_series(order: int) -> TruncatedSeries:
    coeffs = [0] * (order + 1)
    m = 0
    while m * (m + 1) // 2 <= order:
        coeffs[m * (m + 1) // 2] = 1
        m += 1
    return TruncatedSeries(coeffs)


def distinct_parts_product(order: int) -> TruncatedSeries:
    """Q(x) = prod_{n>=1} (1 + x^n)."""
    series = TruncatedSeries.one(order)
    for n in range(1, order + 1):
        series = series.times_binomial(n, sign=1)
    return series


def _product_of_binomials(order: int, exponents) -> TruncatedSeries:
    series = TruncatedSeries.one(order)
    for k in exponents:
        series = series.times_binomial(k)
    return series


def tree_levels(order: int) -> int:
    """Largest m with 2^m <= order; higher levels contribute 1."""
    return max(order.bit_length() - 1, 0)


class Identity(ABC):
    """An identity between generating functions, checked to a given order."""

    name: str = ""

    @abstractmethod
    def sides(self, order: int) -> list[tuple[str, TruncatedSeries, TruncatedSeries]]:
        """Labelled (lhs, rhs) pairs whose equality makes up the identity."""
        pass

    def verify(self, order: int) -> Verdict:
        if order < 1:
            raise DomainError(f"Identity checks need order >= 1, got {order}.")
        log_stage("series", f"checking {self.name}", f"to x^{order}")
        for label, lhs, rhs in self.sides(order):
            verdict = compare_series(label, lhs, rhs)
            if not verdict.equal:
                return verdict
        return Verdict(identity=self.name, order=order, equal=True)


class GaussIdentity(Identity):
    name = "gauss"

    def sides(self, order):
        evens = _product_of_binomials(order, range(2, order + 1, 2))
        odds = _product_of_binomials(order, range(1, order + 1, 2))
        return [(self.name, evens * odds.invert(), theta_series(order))]


class QuotientIdentity(Identity):
    name = "quotient"

    def sides(self, order):
        p = euler_product(order)
        return [(self.name, p, p.substitute(2) ** 2 * theta_series(order))]


class TreeProductIdentity(Identity):
    name = "tree-product"

    def __init__(self, extra_levels: int = 0):
        self.extra_levels = extra_levels

    def product(self, order: int) -> TruncatedSeries:
        theta = theta_series(order)
        result = TruncatedSeries.one(order)
        for m in range(tree_levels(order) + self.extra_levels + 1):
            result = result * theta.substitute(2 ** m) ** (2 ** m)
        return result

    def sides(self, order):
        return [(self.name, euler_product(order), self.product(order))]


class DistinctPartsIdentities(Identity):
    name = "q-identities"

    def sides(self, order):
        q = distinct_parts_product(order)
        p = euler_product(order)
        p_squared_argument = p.substitute(2)
        return [
            ("Q = P(x)/P(x^2)", q, p / p_squared_argument),
            ("Q = P(x^2) theta", q, p_squared_argument * theta_series(order)),
        ]


IDENTITIES = {
    GaussIdentity.name: GaussIdentity,
    QuotientIdentity.name: QuotientIdentity,
    TreeProductIdentity.name: TreeProductIdentity,
    DistinctPartsIdentities.name: DistinctPartsIdentities,
}


def get_identity(name: str) -> Identity:
    """Factory function for the identity registered under `name`."""
    try:
        return IDENTITIES[name.lower()]()
    except KeyError:
        raise DomainError(f"Unknown identity {name!r}; choose from {', '.join(IDENTITIES)}.")


def verify_gauss(order: int) -> Verdict:
    return GaussIdentity().verify(order)


def verify_quotient_identity(order: int) -> Verdict:
    return QuotientIdentity().verify(order)


def verify_tree_product(order: int) -> Verdict:
    return TreeProductIdentity().verify(order)


def verify_q_identities(order: int) -> Verdict:
    return DistinctPartsIdentities().verify(order)
