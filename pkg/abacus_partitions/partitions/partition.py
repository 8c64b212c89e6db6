from dataclasses import dataclass
from typing import Iterable, Iterator

from abacus_partitions.errors import MalformedInput, NotWeaklyDecreasing


@dataclass(frozen=True, order=True)
class Partition:
    """
    A partition: a weakly decreasing sequence of positive integers.

    The empty partition is the unique partition of 0. Instances are immutable
    and compare by their parts, so sorting a list of partitions gives
    lexicographic order.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for part in parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise MalformedInput(f"Parts must be positive integers, got {part!r}.")
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise NotWeaklyDecreasing(
                    f"Parts must be weakly decreasing: {parts[i]} < {parts[i + 1]} at position {i}."
                )
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        """Builds a partition from parts in any order, dropping zeros."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def young_diagram(self) -> str:
        """English-notation diagram, one row of '#' per part."""
        return "\n".join("#" * p for p in self.parts)

    def has_distinct_parts(self) -> bool:
        return all(self.parts[i] > self.parts[i + 1] for i in range(len(self.parts) - 1))


EMPTY = Partition()


def staircase(m: int) -> Partition:
    """The 2-core (m, m-1, ..., 1)."""
    return Partition(tuple(range(m, 0, -1)))


def parse_partition(text: str) -> Partition:
    """
    Parses "p1,p2,...,pk" into a Partition. The empty string (or only
    whitespace) is the empty partition.
    """
    stripped = text.strip()
    if not stripped:
        return EMPTY

    parts = []
    for token in stripped.split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise MalformedInput(f"Not an integer: {token!r} in {text!r}.")
        if value < 1:
            raise MalformedInput(f"Parts must be positive, got {value} in {text!r}.")
        parts.append(value)

    return Partition(tuple(parts))


def conjugate(partition: Partition) -> Partition:
    """Transpose of the Young diagram: column j has |{i : parts[i] >= j}| nodes."""
    return Partition(tuple(
        sum(1 for part in partition.parts if part >= j)
        for j in range(1, partition.largest + 1)
    ))
