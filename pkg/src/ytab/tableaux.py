"""Standard Young tableaux: validation, enumeration, and prefix counting.

A standard tableau with n cells holds each of 1..n once, increasing along
rows and down columns.  The entries 1..k of any such tableau form a valid
k-cell tableau (its k-prefix), which is what `subtableau` extracts and
what the N(n;T) count in `count_containing` is about.
"""

from __future__ import annotations

import json
from typing import Iterator

from . import config
from ._kernels import count_syt_completions
from .errors import CapExceeded
from .shapes import Partition, count_syt, partitions_of


class StandardTableau:
    """An immutable filling of a Ferrers shape, stored as row tuples.

    Construction does not check the tableau invariants; `validate` and
    `validation_error` do.  This keeps deliberately broken fillings
    representable so they can be rejected with a reason.
    """

    __slots__ = ("rows",)

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows=()) -> None:
        object.__setattr__(
            self, "rows", tuple(tuple(int(x) for x in row) for row in rows)
        )

    def __setattr__(self, name, value):
        raise AttributeError("StandardTableau is immutable")

    @property
    def size(self) -> int:
        """Number of cells."""
        return sum(len(row) for row in self.rows)

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, StandardTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]})"

    def entry(self, row: int, col: int) -> int:
        """The entry at 1-based (row, col)."""
        if not (1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1])):
            raise ValueError(f"cell ({row},{col}) outside tableau")
        return self.rows[row - 1][col - 1]

    def to_json(self) -> str:
        return json.dumps({"rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "StandardTableau":
        """Parse the file format: an object with a `rows` list of lists."""
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid tableau JSON: {exc}") from None
        if not isinstance(obj, dict) or "rows" not in obj:
            raise ValueError('invalid tableau JSON: expected an object with key "rows"')
        rows = obj["rows"]
        if not isinstance(rows, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows
        ):
            raise ValueError('invalid tableau JSON: "rows" must be a list of integer lists')
        return cls(rows)


def validation_error(t: StandardTableau) -> str | None:
    """Name the first violated tableau invariant, or None if t is valid.

    Invariants are checked in order: shape, entry set, row increase,
    column increase.
    """
    rows = t.rows
    for i, row in enumerate(rows):
        if len(row) == 0:
            return f"row {i + 1} is empty"
        if i > 0 and len(row) > len(rows[i - 1]):
            return f"row lengths must be weakly decreasing (row {i + 1} is longer than row {i})"
    n = sum(len(row) for row in rows)
    seen = sorted(x for row in rows for x in row)
    if seen != list(range(1, n + 1)):
        return f"entries must be exactly 1..{n}"
    for i, row in enumerate(rows):
        for j in range(1, len(row)):
            if row[j] <= row[j - 1]:
                return f"row {i + 1} is not strictly increasing"
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            if rows[i][j] <= rows[i - 1][j]:
                return f"column {j + 1} is not strictly increasing"
    return None


def validate(t: StandardTableau) -> bool:
    """True iff t satisfies all standard-tableau invariants."""
    return validation_error(t) is None


def shape_of(t: StandardTableau) -> Partition:
    """The row-length partition of a valid tableau."""
    return Partition(len(row) for row in t.rows)


def _require_enum_cap(n: int, cap: int) -> None:
    if n > cap:
        estimate = sum(count_syt(lam) for lam in partitions_of(n))
        raise CapExceeded(
            f"enumerating tableaux with {n} cells exceeds the cap of {cap} "
            f"(about {estimate} tableaux); raise the cap to proceed"
        )


def enumerate_syt(lam: Partition, cap: int = config.MAX_ENUM_N) -> Iterator[StandardTableau]:
    """All standard tableaux of shape λ, in growth-word lexicographic order.

    Entries are placed in order 1, 2, ... with the receiving row chosen
    top to bottom at each step, which yields the tableaux ordered
    lexicographically by their sequence of row indices.
    """
    if lam.size > cap:
        raise CapExceeded(
            f"enumerating shape {lam!r} with {lam.size} cells exceeds the cap of {cap} "
            f"({count_syt(lam)} tableaux); raise the cap to proceed"
        )
    target = lam.parts
    rows = [0] * len(target)
    filling: list[list[int]] = [[] for _ in target]

    def rec(m: int) -> Iterator[StandardTableau]:
        if m > lam.size:
            yield StandardTableau(filling)
            return
        for r in range(len(target)):
            if rows[r] < target[r] and (r == 0 or rows[r] < rows[r - 1]):
                rows[r] += 1
                filling[r].append(m)
                yield from rec(m + 1)
                filling[r].pop()
                rows[r] -= 1

    return rec(1)


def enumerate_syt_n(n: int, cap: int = config.MAX_ENUM_N) -> Iterator[StandardTableau]:
    """All standard tableaux with n cells, grouped by partitions_of(n) order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    _require_enum_cap(n, cap)

    def gen() -> Iterator[StandardTableau]:
        for lam in partitions_of(n):
            yield from enumerate_syt(lam, cap=cap)

    return gen()


def subtableau(t: StandardTableau, k: int) -> StandardTableau:
    """The tableau formed by the entries 1..k of t."""
    if not 0 <= k <= t.size:
        raise ValueError(f"k must be between 0 and {t.size}, got {k}")
    rows = []
    for row in t.rows:
        kept = tuple(x for x in row if x <= k)
        if kept:
            rows.append(kept)
    return StandardTableau(rows)


def contains_subtableau(t: StandardTableau, s: StandardTableau) -> bool:
    """True iff the |s|-prefix of t equals s."""
    if s.size > t.size:
        return False
    return subtableau(t, s.size) == s


def count_containing(n: int, s: StandardTableau, cap: int = config.MAX_ENUM_N) -> int:
    """N(n;T): the number of n-cell standard tableaux whose prefix is s.

    Counted by walking every corner-addition sequence that grows the
    shape of s to n cells; the count depends only on the shape of s.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    err = validation_error(s)
    if err is not None:
        raise ValueError(f"not a standard tableau: {err}")
    if s.size > n:
        return 0
    _require_enum_cap(n, cap)
    return count_syt_completions(n, shape_of(s).parts)
