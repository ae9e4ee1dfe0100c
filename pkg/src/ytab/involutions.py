"""Involutions of [n]: counting, enumeration, sampling, and the f(n,k) formula.

t_n denotes the number of involutions of [n] (equivalently, of standard
tableaux with n cells).  f(n,k) is the number of n-cell tableaux whose
(1,2) entry equals k; it is computed here both by the exact closed
formula and by brute-force counts over involutions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

import mpmath

from . import config
from .errors import CapExceeded
from .rsk import Permutation

# Below this index t_n values are kept in a growing module-level list;
# larger indices are computed by a rolling window so that a query near
# n = 16384 does not pin a hundred megabytes of big integers.
_SMALL_LIMIT = 4096

_t_small = [1, 1]


def _ensure_small(n: int) -> None:
    while len(_t_small) <= n:
        m = len(_t_small)
        _t_small.append(_t_small[m - 1] + (m - 1) * _t_small[m - 2])


@lru_cache(maxsize=16)
def _t_window(lo: int, hi: int) -> tuple[int, ...]:
    """Values t_lo .. t_hi, rolling the recurrence without caching the run."""
    if lo < 0 or hi < lo:
        raise ValueError(f"bad window [{lo}, {hi}]")
    if hi <= _SMALL_LIMIT:
        _ensure_small(hi)
        return tuple(_t_small[lo : hi + 1])
    _ensure_small(_SMALL_LIMIT)
    a, b = _t_small[_SMALL_LIMIT - 1], _t_small[_SMALL_LIMIT]
    out = []
    if lo <= _SMALL_LIMIT:
        out.extend(_t_small[lo:])
    for m in range(_SMALL_LIMIT + 1, hi + 1):
        a, b = b, b + (m - 1) * a
        if m >= lo:
            out.append(b)
    return tuple(out)


def count_involutions(n: int) -> int:
    """t_n: the number of involutions of [n] (t_0 = t_1 = 1)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n <= _SMALL_LIMIT:
        _ensure_small(n)
        return _t_small[n]
    return _t_window(n, n)[0]


def _choose(a: int, b: int) -> int:
    """Binomial coefficient extended by 0 outside 0 <= b <= a."""
    if b < 0 or b > a or a < 0:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class InvolutionCountTable:
    """The sequence t_0..t_N, validated against the recurrence."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = self.values
        if len(v) >= 1 and v[0] != 1:
            raise ValueError("t_0 must be 1")
        if len(v) >= 2 and v[1] != 1:
            raise ValueError("t_1 must be 1")
        for m in range(2, len(v)):
            if v[m] != v[m - 1] + (m - 1) * v[m - 2]:
                raise ValueError(f"recurrence fails at index {m}")

    @classmethod
    def up_to(cls, n: int) -> "InvolutionCountTable":
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        _ensure_small(min(n, _SMALL_LIMIT))
        if n <= _SMALL_LIMIT:
            return cls(tuple(_t_small[: n + 1]))
        return cls(tuple(_t_small) + _t_window(_SMALL_LIMIT + 1, n))

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def t_asymptotic(n: int):
    """Leading-order approximation of t_n: (1/sqrt 2) n^{n/2} e^{-n/2 + sqrt n - 1/4}.

    Returned as an mpmath float carrying at least 50 significant digits of
    the formula value.  Accurate to t_n itself only up to a (1 + o(1))
    factor; the relative error decays like n^{-1/2}.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    with mpmath.workdps(60):
        x = mpmath.mpf(n)
        return (
            mpmath.power(x, x / 2)
            * mpmath.exp(-x / 2 + mpmath.sqrt(x) - mpmath.mpf(1) / 4)
            / mpmath.sqrt(2)
        )


@dataclass(frozen=True)
class SubsequencePattern:
    """An ordered sequence of distinct positive values, e.g. (2, 5, 3)."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(v < 1 for v in vals):
            raise ValueError(f"pattern values must be positive: {vals}")
        if len(set(vals)) != len(vals):
            raise ValueError(f"pattern values must be distinct: {vals}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def _involution_words(n: int) -> Iterator[tuple[int, ...]]:
    """Involution words of [n] in lexicographic order.

    The smallest unplaced element is either fixed or paired with each
    larger unplaced partner in increasing order; trying the fixed choice
    first yields lexicographic word order.
    """
    word = [0] * n

    def rec(unplaced: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not unplaced:
            yield tuple(word)
            return
        m = unplaced[0]
        rest = unplaced[1:]
        word[m - 1] = m
        yield from rec(rest)
        for i, p in enumerate(rest):
            word[m - 1], word[p - 1] = p, m
            yield from rec(rest[:i] + rest[i + 1 :])
        word[m - 1] = 0

    return rec(tuple(range(1, n + 1)))


def enumerate_involutions(n: int, cap: int = config.MAX_ENUM_N) -> Iterator[Permutation]:
    """Every involution of [n] exactly once, in lexicographic word order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise CapExceeded(
            f"enumerating involutions of [{n}] exceeds the cap of {cap} "
            f"({count_involutions(n)} involutions); raise the cap to proceed"
        )
    return (Permutation._from_trusted(w) for w in _involution_words(n))


def random_involution(n: int, rng: random.Random, table: InvolutionCountTable | None = None) -> Permutation:
    """Draw an involution of [n] exactly uniformly using the given generator.

    Elements are placed from largest to smallest.  With u elements still
    unplaced, the largest of them is made a fixed point with probability
    t_{u-1}/t_u (the exact fraction of involutions on u points fixing a
    given point), and otherwise paired with a uniform unplaced partner.
    The probability draw compares integers, so no float bias enters.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if table is None:
        table = InvolutionCountTable.up_to(n)
    word = [0] * n
    unplaced = list(range(1, n + 1))
    while unplaced:
        u = len(unplaced)
        m = unplaced[-1]
        if u == 1 or rng.randrange(table[u]) < table[u - 1]:
            word[m - 1] = m
            unplaced.pop()
        else:
            idx = rng.randrange(u - 1)
            p = unplaced[idx]
            word[m - 1], word[p - 1] = p, m
            unplaced.pop()
            unplaced.pop(idx)
    return Permutation._from_trusted(tuple(word))


def sample_involution(n: int, seed: int) -> Permutation:
    """A uniformly random involution of [n], deterministic in the seed."""
    return random_involution(n, random.Random(seed))


def avg_fixed_points(n: int) -> Fraction:
    """Average number of fixed points over all involutions of [n]: n t_{n-1}/t_n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Fraction(n * count_involutions(n - 1), count_involutions(n))


def contains_subsequence(phi: Permutation, tau) -> bool:
    """True iff the values of tau occur in phi's word in tau's order.

    tau may be a SubsequencePattern or any iterable of distinct values;
    since the values are required distinct, containment is equivalent to
    their positions in the word being increasing.
    """
    values = tuple(tau)
    n = len(phi.word)
    if any(not 1 <= v <= n for v in values):
        raise ValueError(f"pattern values must lie in 1..{n}: {values}")
    pos = [0] * (n + 1)
    for i, v in enumerate(phi.word):
        pos[v] = i
    return all(pos[values[i]] < pos[values[i + 1]] for i in range(len(values) - 1))


def count_F_bruteforce(n: int, k: int, cap: int = config.MAX_ENUM_N) -> int:
    """|F(n,k)|: involutions containing 1 2 .. k with k+1 placed before k.

    Counted by filtering the full enumeration; 1 <= k <= n-1.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if n > cap:
        raise CapExceeded(
            f"counting F({n},{k}) enumerates {count_involutions(n)} involutions, "
            f"over the cap of {cap}; raise the cap to proceed"
        )
    count = 0
    pos = [0] * (n + 1)
    for w in _involution_words(n):
        for i, v in enumerate(w):
            pos[v] = i
        if pos[k + 1] < pos[k] and all(pos[j] < pos[j + 1] for j in range(1, k)):
            count += 1
    return count


def count_G(n: int, k: int) -> int:
    """G(n,k): involutions of [n] containing the subsequence 1 2 .. k.

    Closed form sum_{j=0}^{k} C(n-k, k-j) t_{n-2k+j}, with out-of-range
    binomials and negative-index t treated as zero.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    lo = max(n - 2 * k, 0)
    window = _t_window(lo, n - k)

    def t_of(m: int) -> int:
        return 0 if m < 0 else window[m - lo]

    return sum(_choose(n - k, k - j) * t_of(n - 2 * k + j) for j in range(k + 1))


def f_exact(n: int, k: int) -> int:
    """f(n,k): the number of n-cell standard tableaux with entry k at (1,2).

    Exact closed formula:

        sum_{j=0}^{k-1} C(n-k, k-j-1) t_{n-2k+j+2}
            - C(n-k, k-1) t_{n-2k+1} - C(n-k, k) t_{n-2k}

    Returns 0 for k = 1 (no tableau puts 1 at (1,2)) and for k > n.
    Rejects k <= 0: the convention f(n,0) = 1 that the source recurrence
    uses internally has no tableau meaning and is not exposed.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if k == 1 or k > n:
        return 0
    lo = max(n - 2 * k, 0)
    window = _t_window(lo, n - k + 1)

    def t_of(m: int) -> int:
        return 0 if m < 0 else window[m - lo]

    total = sum(_choose(n - k, k - j - 1) * t_of(n - 2 * k + j + 2) for j in range(k))
    total -= _choose(n - k, k - 1) * t_of(n - 2 * k + 1)
    total -= _choose(n - k, k) * t_of(n - 2 * k)
    return total


def f12_asymptotic(n: int, k: int):
    """Two-term approximation of f(n,k)/t_n: (k-1)/k! + (k-4)/(3 (k-3)!) n^{-3/2}.

    Valid for k >= 3; returned as an mpmath float with at least 50
    significant digits of the formula value.
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    with mpmath.workdps(60):
        lead = mpmath.mpf(k - 1) / factorial(k)
        second = mpmath.mpf(k - 4) / (3 * factorial(k - 3))
        return lead + second * mpmath.power(mpmath.mpf(n), mpmath.mpf(-3) / 2)
