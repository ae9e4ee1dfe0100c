"""Partitions, Ferrers shapes, hook lengths, and tableau counts.

A partition is a weakly decreasing sequence of positive integers; its
Ferrers diagram is the left-justified arrangement of cells with those row
lengths.  The number of standard fillings of a shape comes from the hook
length formula.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple


class Cell(NamedTuple):
    """A 1-based (row, col) position in a Ferrers diagram."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


class Partition:
    """An integer partition in canonical form (trailing zeros stripped).

    Instances are immutable and hashable; two partitions compare equal
    iff their canonical part sequences are equal.
    """

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts=()) -> None:
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p} at index {i}")
            if i + 1 < len(parts) and parts[i + 1] > p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        """Number of cells, |λ|."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated textual form, e.g. ``"3,2,1"``.

        The empty string denotes the empty partition.
        """
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse partition from {text!r}") from None
        return cls(parts)

    def contains_cell(self, c: Cell) -> bool:
        """True iff the cell lies inside this shape."""
        return 1 <= c.row <= len(self.parts) and 1 <= c.col <= self.parts[c.row - 1]


def partitions_of(k: int) -> list[Partition]:
    """All partitions of k, each once, in descending lexicographic order."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return [Partition(parts) for parts in _partition_tuples(k, k)]


def _partition_tuples(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(max_part, remaining), 0, -1):
        for rest in _partition_tuples(remaining - first, first):
            yield (first,) + rest


def hook_length(lam: Partition, c: Cell) -> int:
    """Hook length of cell c in shape λ: arm + leg + 1.

    The arm counts cells strictly right of c in its row, the leg counts
    cells strictly below c in its column.
    """
    if not lam.contains_cell(c):
        raise ValueError(f"cell {c} outside shape {lam!r}")
    arm = lam.parts[c.row - 1] - c.col
    leg = sum(1 for p in lam.parts[c.row :] if p >= c.col)
    return arm + leg + 1


def count_syt(lam: Partition) -> int:
    """Number f^λ of standard Young tableaux of shape λ (hook formula)."""
    return _count_syt_cached(lam.parts)


@lru_cache(maxsize=None)
def _count_syt_cached(parts: tuple[int, ...]) -> int:
    n = sum(parts)
    if n == 0:
        return 1
    product = 1
    for i, p in enumerate(parts):
        for j in range(1, p + 1):
            arm = p - j
            leg = sum(1 for q in parts[i + 1 :] if q >= j)
            product *= arm + leg + 1
    count, rem = divmod(factorial(n), product)
    # The hook formula is an exact integer identity; a nonzero remainder
    # would mean the hook product was computed wrongly.
    assert rem == 0
    return count


def corners(lam: Partition) -> list[Cell]:
    """Cells whose removal leaves a valid partition, top row first."""
    out = []
    parts = lam.parts
    for i, p in enumerate(parts):
        if i + 1 == len(parts) or parts[i + 1] < p:
            out.append(Cell(i + 1, p))
    return out


def remove_corner(lam: Partition, c: Cell) -> Partition:
    """The partition λ with corner cell c removed."""
    if c not in corners(lam):
        raise ValueError(f"cell {c} is not a corner of {lam!r}")
    parts = list(lam.parts)
    parts[c.row - 1] -= 1
    return Partition(parts)


def is_subshape(mu: Partition, lam: Partition) -> bool:
    """True iff the diagram of μ fits inside the diagram of λ."""
    if len(mu.parts) > len(lam.parts):
        return False
    return all(m <= l for m, l in zip(mu.parts, lam.parts))
