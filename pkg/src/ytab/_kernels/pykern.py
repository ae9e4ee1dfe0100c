"""Pure Python kernels.

These are the reference implementations of the enumeration-heavy inner
loops.  The compiled module `_ckern` mirrors this interface exactly; the
package works identically (only slower) when the extension is absent.
"""

from __future__ import annotations

from array import array
from bisect import bisect_right
from itertools import combinations, permutations


def count_syt_completions(n: int, prefix_shape: tuple[int, ...]) -> int:
    """Count growth sequences extending a partial shape to n cells.

    Each standard tableau with n cells arises from a unique sequence of
    corner additions; this counts the sequences whose intermediate shape
    after sum(prefix_shape) steps equals prefix_shape.  With an empty
    prefix it counts all n-cell tableaux.
    """
    rows = list(prefix_shape)
    start = sum(prefix_shape)
    if start > n:
        return 0

    def rec(m: int) -> int:
        if m > n:
            return 1
        total = 0
        nrows = len(rows)
        for r in range(nrows):
            if r == 0 or rows[r] < rows[r - 1]:
                rows[r] += 1
                total += rec(m + 1)
                rows[r] -= 1
        rows.append(1)
        total += rec(m + 1)
        rows.pop()
        return total

    return rec(start + 1)


def assignment_shape_counts(
    ncells: int, constraints: tuple[tuple[int, int, int], ...]
) -> dict[tuple[int, ...], int]:
    """Count tableaux with ncells cells satisfying entry constraints, by shape.

    Each constraint (row, col, value) pins the given 1-based cell to the
    given entry.  Returns a map from final shape to the number of standard
    tableaux of that shape meeting every constraint.  Constraints must have
    pairwise distinct cells and pairwise distinct values.
    """
    want_cell = {v: (r, c) for r, c, v in constraints}
    pinned = {(r, c) for r, c, _ in constraints}
    counts: dict[tuple[int, ...], int] = {}
    rows: list[int] = []

    def rec(m: int) -> None:
        if m > ncells:
            shape = tuple(rows)
            counts[shape] = counts.get(shape, 0) + 1
            return
        want = want_cell.get(m)
        nrows = len(rows)
        for r in range(nrows + 1):
            if r < nrows:
                if r > 0 and rows[r] >= rows[r - 1]:
                    continue
                cell = (r + 1, rows[r] + 1)
            else:
                cell = (r + 1, 1)
            if want is not None:
                if cell != want:
                    continue
            elif cell in pinned:
                continue
            if r < nrows:
                rows[r] += 1
                rec(m + 1)
                rows[r] -= 1
            else:
                rows.append(1)
                rec(m + 1)
                rows.pop()

    rec(1)
    return counts


def pattern_rank_counts(pos_words, n: int, k: int) -> tuple[array, int]:
    """Accumulate subsequence-pattern counts over a stream of words.

    pos_words yields one position table per word: a list where entry v-1
    is the 0-based position of value v.  For each word every k-subset of
    values contributes one ordered pattern (the values sorted by position).
    Returns (counts, total) where counts is indexed by the lexicographic
    rank of the pattern among all n(n-1)...(n-k+1) ordered k-tuples of
    distinct values, and total is the number of words consumed.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    npatterns = 1
    for i in range(k):
        npatterns *= n - i
    counts = array("q", bytes(8 * npatterns))
    # suffix[i] = number of completions of a length-(i+1) prefix
    suffix = [1] * k
    for i in range(k - 2, -1, -1):
        suffix[i] = suffix[i + 1] * (n - i - 1)
    total = 0
    subsets = list(combinations(range(n), k))
    for pos in pos_words:
        total += 1
        for sub in subsets:
            tau = sorted(sub, key=lambda v: pos[v])
            rank = 0
            for i, v in enumerate(tau):
                smaller = v - sum(1 for u in tau[:i] if u < v)
                rank += smaller * suffix[i]
            counts[rank] += 1
    return counts, total


def insert_word(word) -> tuple[tuple[int, ...], ...]:
    """Row-insert an entire word, returning the resulting tableau rows."""
    rows: list[list[int]] = []
    for x in word:
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                break
            row = rows[r]
            i = bisect_right(row, x)
            if i == len(row):
                row.append(x)
                break
            row[i], x = x, row[i]
            r += 1
    return tuple(tuple(row) for row in rows)


def zset_members(t_rows: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """All words over [k] whose insertion tableau equals t_rows, in lex order."""
    k = sum(len(row) for row in t_rows)
    return [w for w in permutations(range(1, k + 1)) if insert_word(w) == t_rows]
