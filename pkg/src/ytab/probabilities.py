"""Limiting probabilities of tableau entries, as exact rationals.

For a uniformly random standard tableau with n cells and n -> infinity,
the probability that its k-prefix equals a fixed tableau T tends to
f^{lambda(T)}/k!.  Everything here is a finite exact consequence of that:
single sums over antichains, cell-occupancy probabilities, joint
constraints on several cells, and empirical counterparts computed by
enumeration at finite n.
"""

from __future__ import annotations

import csv
import decimal
import io
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from . import config
from ._kernels import assignment_shape_counts
from .errors import AntichainViolation, CapExceeded
from .involutions import count_involutions
from .shapes import (
    Cell,
    Partition,
    corners,
    count_syt,
    is_subshape,
    partitions_of,
    remove_corner,
)
from .tableaux import (
    StandardTableau,
    contains_subtableau,
    count_containing,
    shape_of,
    validation_error,
)

# Default columns of the occupancy table, in display order.
OCCUPANCY_CELLS = (
    Cell(1, 2),
    Cell(1, 3),
    Cell(1, 4),
    Cell(1, 5),
    Cell(1, 6),
    Cell(2, 2),
    Cell(2, 3),
)

_ASSIGN_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=\s*(\d+)")


@dataclass(frozen=True)
class CellAssignment:
    """A finite set of (cell, value) constraints on a standard tableau.

    Cells must be pairwise distinct; that is a structural error.  Values
    are allowed to repeat even though no tableau can satisfy such an
    assignment, so that the corresponding probability is representable
    (it is 0) rather than unconstructible.
    """

    entries: tuple[tuple[Cell, int], ...]

    def __post_init__(self):
        norm = tuple(
            (Cell(int(c[0]), int(c[1])), int(v)) for c, v in self.entries
        )
        norm = tuple(sorted(norm))
        object.__setattr__(self, "entries", norm)
        if not norm:
            raise ValueError("assignment must contain at least one pair")
        cells = [c for c, _ in norm]
        if len(set(cells)) != len(cells):
            dup = next(c for i, c in enumerate(cells) if c in cells[:i])
            raise ValueError(f"duplicate cell {dup} in assignment")
        for c, v in norm:
            if c.row < 1 or c.col < 1:
                raise ValueError(f"cell {c} must have positive coordinates")
            if v < 1:
                raise ValueError(f"assigned value {v} must be positive")

    @property
    def max_value(self) -> int:
        return max(v for _, v in self.entries)

    @classmethod
    def parse(cls, text: str) -> "CellAssignment":
        """Parse the textual form ``"(1,2)=2;(1,3)=3"``."""
        parts = [p.strip() for p in text.strip().split(";") if p.strip()]
        if not parts:
            raise ValueError("empty assignment")
        entries = []
        for part in parts:
            m = _ASSIGN_PAIR.fullmatch(part)
            if m is None:
                raise ValueError(f"cannot parse assignment term {part!r}")
            entries.append((Cell(int(m.group(1)), int(m.group(2))), int(m.group(3))))
        return cls(tuple(entries))

    def __str__(self) -> str:
        return ";".join(f"({c.row},{c.col})={v}" for c, v in self.entries)


def limit_prob_subtableau(t: StandardTableau) -> Fraction:
    """Limiting probability f^{lambda(T)}/k! that a huge tableau has prefix T."""
    err = validation_error(t)
    if err is not None:
        raise ValueError(f"not a standard tableau: {err}")
    k = t.size
    if k < 1:
        raise ValueError("tableau must have at least one cell")
    return Fraction(count_syt(shape_of(t)), factorial(k))


def _check_antichain_tableaux(ts: Sequence[StandardTableau]) -> None:
    for i, a in enumerate(ts):
        for j, b in enumerate(ts):
            if i != j and contains_subtableau(b, a):
                raise AntichainViolation(a, b)


def limit_prob_collection(ts: Iterable[StandardTableau]) -> Fraction:
    """Limiting probability that the prefix equals some member of an antichain.

    The collection may contain no tableau that is a subtableau of another;
    under that hypothesis the prefix events are disjoint and the limit is
    the plain sum of the one-tableau limits.
    """
    ts = list(ts)
    terms = [limit_prob_subtableau(t) for t in ts]
    _check_antichain_tableaux(ts)
    total = sum(terms, Fraction(0))
    # Disjointness of the events forces a probability; a sum above 1
    # would mean the antichain check is broken.
    assert total <= 1
    return total


def limit_prob_shapes(shapes: Iterable[Partition]) -> Fraction:
    """Sum of (f^lambda)^2/|lambda|! over an antichain of shapes.

    This is the limiting probability that the prefix of size |lambda| has
    shape lambda for some member of the antichain.
    """
    shapes = list(shapes)
    for lam in shapes:
        if lam.size < 1:
            raise ValueError("shapes must be nonempty")
    for i, a in enumerate(shapes):
        for j, b in enumerate(shapes):
            if i != j and is_subshape(a, b):
                raise AntichainViolation(a, b)
    total = Fraction(0)
    for lam in shapes:
        total += Fraction(count_syt(lam) ** 2, factorial(lam.size))
    assert total <= 1
    return total


def prob_cell_equals(i: int, j: int, k: int) -> Fraction:
    """Limiting probability that the (i,j) entry of a huge tableau equals k.

    Equals (1/k!) times the sum of f^{lambda} f^{lambda - (i,j)} over
    shapes lambda of k cells with a corner at (i,j); zero when no such
    shape exists.
    """
    if i < 1 or j < 1 or k < 1:
        raise ValueError("row, column, and k must be positive")
    cell = Cell(i, j)
    total = 0
    for lam in partitions_of(k):
        if cell in corners(lam):
            total += count_syt(lam) * count_syt(remove_corner(lam, cell))
    return Fraction(total, factorial(k))


def prob_cells_assignment(
    a: CellAssignment, cap: int = config.MAX_ASSIGN_VALUE
) -> Fraction:
    """Limiting probability that every assigned cell holds its assigned value.

    With K the largest assigned value, this is (1/K!) times the number of
    K-cell standard tableaux consistent with the assignment, each weighted
    by f^{shape}; computed by enumerating growth sequences of K cells with
    the assignment folded in as pruning.
    """
    k_max = a.max_value
    if k_max > cap:
        raise CapExceeded(
            f"assignment reaches value {k_max}, over the cap of {cap} "
            f"(about {count_involutions(k_max)} tableaux to scan); "
            f"raise the cap to proceed"
        )
    values = [v for _, v in a.entries]
    if len(set(values)) != len(values):
        return Fraction(0)
    constraints = tuple((c.row, c.col, v) for c, v in a.entries)
    shape_counts = assignment_shape_counts(k_max, constraints)
    total = sum(
        count_syt(Partition(shape)) * cnt for shape, cnt in shape_counts.items()
    )
    return Fraction(total, factorial(k_max))


def prob_two_columns(k: int) -> Fraction:
    """Limiting probability that the k-prefix has at most two columns.

    Closed form C(2k,k)/(k+1)!; the column count of a shape is its first
    part, so the underlying antichain is the set of lambda with
    lambda_1 <= 2.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return Fraction(comb(2 * k, k), factorial(k + 1))


def two_column_shapes(k: int) -> list[Partition]:
    """All shapes of k cells with at most two columns (first part <= 2)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return [lam for lam in partitions_of(k) if lam.parts[0] <= 2]


def empirical_prob_subtableau(
    n: int, t: StandardTableau, cap: int = config.MAX_ENUM_N
) -> Fraction:
    """N(n;T)/t_n: the exact fraction of n-cell tableaux with prefix T."""
    return Fraction(count_containing(n, t, cap=cap), count_involutions(n))


@dataclass(frozen=True)
class RationalMatrix:
    """A labelled grid of exact rationals, serializable to CSV and JSON."""

    corner: str
    col_labels: tuple[str, ...]
    row_labels: tuple[str, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow((self.corner,) + self.col_labels)
        for label, row in zip(self.row_labels, self.rows):
            writer.writerow([label] + [format_rational(x) for x in row])
        return buf.getvalue()

    def to_json_value(self) -> list[list[dict[str, str]]]:
        return [
            [{"num": str(x.numerator), "den": str(x.denominator)} for x in row]
            for row in self.rows
        ]


def format_rational(x: Fraction, json_style: bool = False) -> str:
    """Lowest-terms string: integers as plain p, or p/1 when json_style."""
    if x.denominator == 1 and not json_style:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_decimal(x: Fraction) -> str:
    """Decimal rendering at 10 significant digits, round-half-even."""
    with decimal.localcontext() as ctx:
        ctx.prec = 10
        ctx.rounding = decimal.ROUND_HALF_EVEN
        d = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
    return str(d)


def _occupancy_entry(args: tuple[int, int, int]) -> Fraction:
    k, row, col = args
    return prob_cell_equals(row, col, k)


def _joint_entry(args: tuple[int, int]) -> Fraction:
    r, s = args
    if s <= r:
        return Fraction(0)
    return prob_cells_assignment(
        CellAssignment(((Cell(1, 2), r), (Cell(1, 3), s))), cap=max(s, config.MAX_ASSIGN_VALUE)
    )


def _map_jobs(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    import multiprocessing

    with multiprocessing.get_context("fork").Pool(processes=jobs) as pool:
        return pool.map(fn, items)


def occupancy_table(
    k_max: int, cells: Sequence[Cell] = OCCUPANCY_CELLS, jobs: int = 1
) -> RationalMatrix:
    """Occupancy probabilities prob_cell_equals for k = 2..k_max by cell."""
    if k_max < 2:
        raise ValueError(f"k_max must be at least 2, got {k_max}")
    cells = tuple(Cell(c[0], c[1]) for c in cells)
    ks = list(range(2, k_max + 1))
    items = [(k, c.row, c.col) for k in ks for c in cells]
    values = _map_jobs(_occupancy_entry, items, jobs)
    ncols = len(cells)
    grid = tuple(
        tuple(values[i * ncols : (i + 1) * ncols]) for i in range(len(ks))
    )
    return RationalMatrix(
        corner="k",
        col_labels=tuple(f"({c.row},{c.col})" for c in cells),
        row_labels=tuple(str(k) for k in ks),
        rows=grid,
    )


def joint_table_12_13(r_max: int, s_max: int, jobs: int = 1) -> RationalMatrix:
    """Joint probabilities for entries (1,2) = r and (1,3) = s."""
    if r_max < 2:
        raise ValueError(f"r_max must be at least 2, got {r_max}")
    if s_max < 3:
        raise ValueError(f"s_max must be at least 3, got {s_max}")
    rs = list(range(2, r_max + 1))
    ss = list(range(3, s_max + 1))
    items = [(r, s) for r in rs for s in ss]
    values = _map_jobs(_joint_entry, items, jobs)
    grid = tuple(
        tuple(values[i * len(ss) : (i + 1) * len(ss)]) for i in range(len(rs))
    )
    return RationalMatrix(
        corner="r",
        col_labels=tuple(str(s) for s in ss),
        row_labels=tuple(str(r) for r in rs),
        rows=grid,
    )
