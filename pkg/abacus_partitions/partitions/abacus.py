"""
The binary (2-runner) abacus.

A partition is written as a bead sequence by walking the rim of its Young
diagram from the southwest corner to the northeast corner: a SPACE for every
step right and a BEAD for every step up. Arranging the sequence row-major in
two columns (cell i goes to row i // 2 on runner i % 2) gives an abacus
display. A 2-hook is a bead with a space directly above it on the same
runner, and removing it slides that bead one row up.

Text encoding: '.' is a SPACE, 'O' is a BEAD.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from abacus_partitions.errors import DomainError, InvalidHookPosition, MalformedInput
from abacus_partitions.partitions.partition import (
    EMPTY,
    Partition,
    conjugate,
    staircase,
)

SPACE = False
BEAD = True

_TEXT = {SPACE: ".", BEAD: "O"}
_CELLS = {".": SPACE, "O": BEAD}


@dataclass(frozen=True)
class BeadSequence:
    """A finite run of cells, True for a bead and False for a space."""

    cells: tuple[bool, ...] = ()

    @classmethod
    def from_text(cls, text: str) -> "BeadSequence":
        try:
            return cls(tuple(_CELLS[ch] for ch in text.strip()))
        except KeyError as e:
            raise MalformedInput(f"Bead sequences use '.' and 'O' only, got {e.args[0]!r}.")

    @property
    def text(self) -> str:
        return "".join(_TEXT[cell] for cell in self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return self.text

    def is_canonical(self) -> bool:
        return not self.cells or (self.cells[0] == SPACE and self.cells[-1] == BEAD)

    def canonical(self) -> "BeadSequence":
        """Strips leading beads and trailing spaces."""
        cells = self.cells
        start = 0
        while start < len(cells) and cells[start] == BEAD:
            start += 1
        end = len(cells)
        while end > start and cells[end - 1] == SPACE:
            end -= 1
        return BeadSequence(cells[start:end])

    def with_leading_bead(self) -> "BeadSequence":
        return BeadSequence((BEAD,) + self.cells)


class HookPosition(NamedTuple):
    runner: int
    row: int


@dataclass(frozen=True)
class AbacusDisplay:
    """Rows of (runner 0, runner 1) cells."""

    rows: tuple[tuple[bool, bool], ...] = ()

    @classmethod
    def from_sequence(cls, sequence: BeadSequence) -> "AbacusDisplay":
        cells = sequence.cells
        if len(cells) % 2:
            cells = cells + (SPACE,)
        return cls(tuple((cells[i], cells[i + 1]) for i in range(0, len(cells), 2)))

    @classmethod
    def from_bead_rows(cls, runner0: Iterable[int], runner1: Iterable[int]) -> "AbacusDisplay":
        """Builds a display with beads at the given rows of each runner."""
        beads = (set(runner0), set(runner1))
        height = max((max(rows) + 1 for rows in beads if rows), default=0)
        return cls(tuple((row in beads[0], row in beads[1]) for row in range(height)))

    def to_sequence(self) -> BeadSequence:
        return BeadSequence(tuple(cell for row in self.rows for cell in row))

    def cell(self, runner: int, row: int) -> bool:
        return self.rows[row][runner]

    def bead_rows(self, runner: int) -> list[int]:
        """Rows holding a bead on the given runner, top to bottom."""
        return [row for row, cells in enumerate(self.rows) if cells[runner] == BEAD]

    def bead_count(self, runner: int) -> int:
        return sum(1 for cells in self.rows if cells[runner] == BEAD)

    def pushed_up(self) -> "AbacusDisplay":
        """Every bead slid as far up its runner as it will go."""
        return AbacusDisplay.from_bead_rows(
            range(self.bead_count(0)), range(self.bead_count(1))
        )

    def render(self) -> str:
        return "\n".join(f"{_TEXT[a]} {_TEXT[b]}" for a, b in self.rows)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class CoreQuotient:
    """A 2-core, given by its staircase index m, together with a 2-quotient (mu, nu)."""

    core_index: int
    quotient: tuple[Partition, Partition] = (EMPTY, EMPTY)

    def __post_init__(self):
        if self.core_index < 0:
            raise DomainError(f"core_index must be non-negative, got {self.core_index}.")

    @property
    def mu(self) -> Partition:
        return self.quotient[0]

    @property
    def nu(self) -> Partition:
        return self.quotient[1]

    @property
    def core(self) -> Partition:
        return staircase(self.core_index)

    @property
    def size(self) -> int:
        m = self.core_index
        return m * (m + 1) // 2 + 2 * (self.mu.size + self.nu.size)


def to_bead_sequence(partition: Partition) -> BeadSequence:
    """Rim walk: lambda_k spaces then a bead, then lambda_{k-1} - lambda_k spaces, and so on."""
    cells: list[bool] = []
    previous = 0
    for part in reversed(partition.parts):
        cells.extend([SPACE] * (part - previous))
        cells.append(BEAD)
        previous = part
    return BeadSequence(tuple(cells))


def from_bead_sequence(sequence: Union[BeadSequence, str]) -> Partition:
    """Each bead contributes a part equal to the number of spaces before it."""
    if isinstance(sequence, str):
        sequence = BeadSequence.from_text(sequence)
    spaces = 0
    parts: list[int] = []
    for cell in sequence.canonical().cells:
        if cell == BEAD:
            parts.append(spaces)
        else:
            spaces += 1
    parts.reverse()
    return Partition(tuple(parts))


def decode_display(display: AbacusDisplay) -> Partition:
    return from_bead_sequence(display.to_sequence())


def normalized_display(partition: Partition) -> AbacusDisplay:
    """
    Display whose 2-core has at least as many beads on runner 1 as on runner 0.

    A single leading bead swaps the runners, so one prepend always suffices.
    """
    sequence = to_bead_sequence(partition)
    display = AbacusDisplay.from_sequence(sequence)
    if display.bead_count(0) > display.bead_count(1):
        display = AbacusDisplay.from_sequence(sequence.with_leading_bead())
    return display


def removable_hooks(display: AbacusDisplay) -> list[HookPosition]:
    """Beads with a space directly above them, in reading order."""
    return [
        HookPosition(runner, row)
        for row in range(1, len(display.rows))
        for runner in (0, 1)
        if display.cell(runner, row) == BEAD and display.cell(runner, row - 1) == SPACE
    ]


def remove_hook(display: AbacusDisplay, position: HookPosition) -> AbacusDisplay:
    """Slides the bead at `position` one row up, removing a 2-hook."""
    runner, row = position
    if not (0 < row < len(display.rows)) or runner not in (0, 1):
        raise InvalidHookPosition(f"No cell at runner {runner}, row {row}.")
    if display.cell(runner, row) != BEAD or display.cell(runner, row - 1) != SPACE:
        raise InvalidHookPosition(
            f"Runner {runner}, row {row} is not a bead with a space above it."
        )

    rows = [list(cells) for cells in display.rows]
    rows[row][runner] = SPACE
    rows[row - 1][runner] = BEAD
    return AbacusDisplay(tuple((a, b) for a, b in rows))


def hook_removal_terminals(partition: Partition) -> set[Partition]:
    """Every partition reached by some maximal sequence of 2-hook removals."""
    terminals: set[Partition] = set()
    seen: set[Partition] = set()
    pending = [partition]
    while pending:
        current = pending.pop()
        if current in seen:
            continue
        seen.add(current)
        display = AbacusDisplay.from_sequence(to_bead_sequence(current))
        hooks = removable_hooks(display)
        if not hooks:
            terminals.add(current)
        for position in hooks:
            pending.append(decode_display(remove_hook(display, position)))
    return terminals


def two_core(partition: Partition) -> Partition:
    """The partition left after pushing every bead up; always a staircase."""
    return decode_display(normalized_display(partition).pushed_up())


def _runner_quotient(display: AbacusDisplay, runner: int) -> Partition:
    # the k-th bead from the top sits d_k rows below its pushed-up slot k
    return Partition.from_unsorted(
        row - k for k, row in enumerate(display.bead_rows(runner))
    )


def two_quotient(partition: Partition) -> CoreQuotient:
    display = normalized_display(partition)
    core = decode_display(display.pushed_up())
    return CoreQuotient(
        core_index=len(core),
        quotient=(_runner_quotient(display, 0), _runner_quotient(display, 1)),
    )


def _runner_rows(bead_count: int, quotient: Partition) -> list[int]:
    # lowest bead takes the largest part
    parts = quotient.parts
    return [
        k + (parts[bead_count - 1 - k] if bead_count - 1 - k < len(parts) else 0)
        for k in range(bead_count)
    ]


def combine(core_quotient: CoreQuotient) -> Partition:
    """Inverse of two_quotient."""
    m = core_quotient.core_index
    mu, nu = core_quotient.quotient
    # enough beads on each runner to carry every part, runner 1 ahead by m
    runner0 = max(len(mu), len(nu) - m, 0)
    runner1 = runner0 + m
    display = AbacusDisplay.from_bead_rows(
        _runner_rows(runner0, mu), _runner_rows(runner1, nu)
    )
    return decode_display(display)


def conjugate_via_abacus(partition: Partition) -> Partition:
    """Reads the bead sequence right to left, swapping beads and spaces."""
    cells = to_bead_sequence(partition).cells
    return from_bead_sequence(BeadSequence(tuple(not cell for cell in reversed(cells))))


def is_self_conjugate(partition: Partition) -> bool:
    return conjugate(partition) == partition


def self_conjugate_decompose(partition: Partition) -> tuple[int, Partition]:
    """(m, mu) for a self-conjugate partition, whose 2-quotient is (mu, mu')."""
    if not is_self_conjugate(partition):
        raise DomainError(f"({partition}) is not self-conjugate.")
    core_quotient = two_quotient(partition)
    return core_quotient.core_index, core_quotient.mu


def self_conjugate_compose(core_index: int, mu: Partition) -> Partition:
    return combine(CoreQuotient(core_index, (mu, conjugate(mu))))
