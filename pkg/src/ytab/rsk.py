"""Robinson-Schensted insertion and the fibers Z(k) of the P tableau.

Row insertion bumps the leftmost entry strictly greater than the incoming
letter in each row; column insertion bumps the topmost entry strictly
greater than the incoming letter in each column.  Under row insertion a
permutation maps to a pair (P, Q) of same-shape standard tableaux, and
involutions are exactly the permutations with P = Q.
"""

from __future__ import annotations

from bisect import bisect_right
from math import factorial

from . import config
from ._kernels import insert_word, zset_members
from .errors import CapExceeded
from .tableaux import StandardTableau, validation_error


class Permutation:
    """A permutation of [n] in one-line notation: word[i-1] is the image of i."""

    __slots__ = ("word",)

    word: tuple[int, ...]

    def __init__(self, word) -> None:
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a rearrangement of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """The image of i, 1-based."""
        return self.word[i - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)})"

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse space-separated one-line notation, e.g. ``"3 1 2"``."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            word = [int(x) for x in text.split()]
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
        return cls(word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def _from_trusted(cls, word: tuple[int, ...]) -> "Permutation":
        # Bypasses the rearrangement check; only for enumerators and
        # samplers that construct valid words by construction.
        p = object.__new__(cls)
        object.__setattr__(p, "word", word)
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """The permutation mapping i to self(other(i))."""
        if len(other.word) != len(self.word):
            raise ValueError("size mismatch in composition")
        return Permutation(self.word[v - 1] for v in other.word)

    def is_involution(self) -> bool:
        w = self.word
        return all(w[w[i] - 1] == i + 1 for i in range(len(w)))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.word, 1) if v == i]


def _insert(rows: list[list[int]], qrows: list[list[int]] | None, x: int, step: int) -> None:
    """Row-insert x, optionally recording the new cell's step index in qrows."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            if qrows is not None:
                qrows.append([step])
            return
        row = rows[r]
        i = bisect_right(row, x)
        if i == len(row):
            row.append(x)
            if qrows is not None:
                qrows[r].append(step)
            return
        row[i], x = x, row[i]
        r += 1


def rs_pair(sigma: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """The Robinson-Schensted pair (P, Q) of a permutation.

    P is built by successive row insertion of the word's letters; Q records
    in which order the cells of P appeared.
    """
    rows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(sigma.word, 1):
        _insert(rows, qrows, x, step)
    return StandardTableau(rows), StandardTableau(qrows)


def insertion_tableau(sigma: Permutation) -> StandardTableau:
    """The P tableau alone (no recording tableau bookkeeping)."""
    return StandardTableau(insert_word(sigma.word))


def tableau_of_involution(phi: Permutation) -> StandardTableau:
    """The common tableau P = Q that RS assigns to an involution."""
    if not phi.is_involution():
        raise ValueError(f"not an involution: {phi}")
    return insertion_tableau(phi)


def column_insert_tableau(sigma: Permutation) -> StandardTableau:
    """Insertion tableau under the column variant.

    Letters are taken from the word right to left and bumped within
    columns (topmost entry strictly greater than the incoming letter);
    on permutations this produces the same tableau as row insertion of
    the word left to right.
    """
    cols: list[list[int]] = []
    for x in reversed(sigma.word):
        j = 0
        while True:
            if j == len(cols):
                cols.append([x])
                break
            col = cols[j]
            i = bisect_right(col, x)
            if i == len(col):
                col.append(x)
                break
            col[i], x = x, col[i]
            j += 1
    nrows = max((len(c) for c in cols), default=0)
    rows = [tuple(c[r] for c in cols if len(c) > r) for r in range(nrows)]
    return StandardTableau(rows)


def z_set(t: StandardTableau, cap: int = config.MAX_ZSET_K) -> list[Permutation]:
    """Z(k) for the tableau t: all words of [k] inserting to t, in lex order.

    Scans all k! permutations; the size of the result equals
    count_syt(shape_of(t)), which makes this an enumeration oracle for
    the hook length formula.
    """
    err = validation_error(t)
    if err is not None:
        raise ValueError(f"not a standard tableau: {err}")
    k = t.size
    if k > cap:
        raise CapExceeded(
            f"z_set on {k} cells scans {k}! = {factorial(k)} words, over the cap of {cap}; "
            f"raise the cap to proceed"
        )
    return [Permutation(w) for w in zset_members(t.rows)]
