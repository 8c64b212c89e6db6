from typing import Iterable, Union

from abacus_partitions.errors import DomainError, IndexOutOfRange


class TruncatedSeries:
    """
    A formal power series c0 + c1*x + ... + cN*x^N with exact integer
    coefficients, computed modulo x^(N+1).

    Instances are immutable; every operation returns a new series. Binary
    operations require both operands to have the same order.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], order: int = -1):
        values = [int(c) for c in coeffs]
        if order >= 0:
            values = (values + [0] * (order + 1 - len(values)))[: order + 1]
        if not values:
            raise DomainError("A truncated series needs at least the constant coefficient.")
        self._coeffs = tuple(values)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: int = 1) -> "TruncatedSeries":
        coeffs = [0] * (order + 1)
        if exponent <= order:
            coeffs[exponent] = coefficient
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexOutOfRange(f"Coefficient x^{n} is outside 0..{self.order}.")
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self._coeffs):
            if n == 0:
                terms.append(f"{c}")
            elif n == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{n}")
        return " + ".join(terms)

    def _check_compatible(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise DomainError(f"Series orders differ: {self.order} and {other.order}.")

    def _lift(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries([other], self.order)
        self._check_compatible(other)
        return other

    def __add__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        other = self._lift(other)
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __sub__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        return self + (-self._lift(other))

    def __mul__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries([c * other for c in self._coeffs])
        self._check_compatible(other)
        order = self.order
        result = [0] * (order + 1)
        right = [(j, b) for j, b in enumerate(other._coeffs) if b]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in right:
                if i + j > order:
                    break
                result[i + j] += a * b
        return TruncatedSeries(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant coefficient must be +1 or -1."""
        a = self._coeffs
        if a[0] not in (1, -1):
            raise DomainError(f"Only series with constant term +-1 are invertible, got {a[0]}.")
        # a0 is its own inverse
        b = [a[0]]
        nonzero = [(i, c) for i, c in enumerate(a) if c and i]
        for n in range(1, self.order + 1):
            acc = 0
            for i, c in nonzero:
                if i > n:
                    break
                acc += c * b[n - i]
            b.append(-a[0] * acc)
        return TruncatedSeries(b)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.invert()

    def substitute(self, k: int) -> "TruncatedSeries":
        """The series with x replaced by x^k: c_j moves to x^(jk)."""
        if k < 1:
            raise DomainError(f"Substitution power must be positive, got {k}.")
        result = [0] * (self.order + 1)
        for j in range(0, self.order // k + 1):
            result[j * k] = self._coeffs[j]
        return TruncatedSeries(result)

    def with_coefficient(self, n: int, value: int) -> "TruncatedSeries":
        """Copy with the coefficient of x^n replaced."""
        if not 0 <= n <= self.order:
            raise IndexOutOfRange(f"Coefficient x^{n} is outside 0..{self.order}.")
        coeffs = list(self._coeffs)
        coeffs[n] = value
        return TruncatedSeries(coeffs)

    def times_binomial(self, k: int, sign: int = -1) -> "TruncatedSeries":
        """self * (1 + sign * x^k), in linear time."""
        coeffs = list(self._coeffs)
        for n in range(self.order, k - 1, -1):
            coeffs[n] += sign * coeffs[n - k]
        return TruncatedSeries(coeffs)

    def over_one_minus_power(self, k: int) -> "TruncatedSeries":
        """self / (1 - x^k), in linear time."""
        coeffs = list(self._coeffs)
        for n in range(k, self.order + 1):
            coeffs[n] += coeffs[n - k]
        return TruncatedSeries(coeffs)

    def to_json_list(self) -> list[str]:
        return [str(c) for c in self._coeffs]
