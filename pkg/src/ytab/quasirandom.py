"""Quasirandomness of permutation families via subsequence patterns.

A family is quasirandom when, for each k, the fraction of size-n members
containing a fixed pattern of k distinct values tends to 1/k! uniformly
over patterns.  The machinery here makes the finite part of that exact:
p-tilde fractions, the q(I) collision probability, the sandwich bounds
derived from it, and the maximum deviation over all patterns.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial, sqrt
from typing import Callable, Iterator

from . import config
from ._kernels import pattern_rank_counts
from .errors import CapExceeded
from .involutions import (
    SubsequencePattern,
    contains_subsequence,
    count_involutions,
    enumerate_involutions,
    random_involution,
)
from .probabilities import format_rational
from .rsk import Permutation


@dataclass(frozen=True)
class PermutationFamily:
    """A conjugation-closed collection of permutations, one slice per n.

    generator streams the members of size n; membership tests one
    permutation; sampler (optional) draws uniformly using a caller-owned
    random.Random.  size_fn, when present, predicts the slice size for
    cap messages.  max_exact_n bounds exact enumeration by default.
    """

    name: str
    membership: Callable[[Permutation], bool]
    generator: Callable[[int], Iterator[Permutation]]
    sampler: Callable[[int, random.Random], Permutation] | None
    max_exact_n: int
    size_fn: Callable[[int], int] | None = None


@dataclass(frozen=True)
class DeviationReport:
    """Exact pattern statistics for one family slice.

    max_deviation is the maximum of |ptilde - 1/k!| over the scanned
    patterns, attained at argmax_pattern (first in lexicographic order on
    ties).  lower_bound and upper_bound are the sandwich bounds
    (1-q)/k! and (1-q)/k! + q built from q(I) of the argmax pattern's
    value set; passed records whether every scanned ptilde obeyed them.
    """

    family: str
    n: int
    k: int
    max_deviation: Fraction
    argmax_pattern: SubsequencePattern
    ptilde: Fraction
    lower_bound: Fraction
    upper_bound: Fraction
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "max_deviation": format_rational(self.max_deviation, json_style=True),
            "argmax_pattern": list(self.argmax_pattern.values),
            "ptilde": format_rational(self.ptilde, json_style=True),
            "lower_bound": format_rational(self.lower_bound, json_style=True),
            "upper_bound": format_rational(self.upper_bound, json_style=True),
            "passed": self.passed,
        }


def _all_perms(n: int) -> Iterator[Permutation]:
    return (Permutation._from_trusted(w) for w in permutations(range(1, n + 1)))


def _shuffle_perm(n: int, rng: random.Random) -> Permutation:
    word = list(range(1, n + 1))
    rng.shuffle(word)
    return Permutation._from_trusted(tuple(word))


def _fpf_words(n: int) -> Iterator[tuple[int, ...]]:
    """Fixed-point-free involution words in lexicographic order (even n)."""
    word = [0] * n

    def rec(unplaced: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not unplaced:
            yield tuple(word)
            return
        m = unplaced[0]
        rest = unplaced[1:]
        for i, p in enumerate(rest):
            word[m - 1], word[p - 1] = p, m
            yield from rec(rest[:i] + rest[i + 1 :])

    return rec(tuple(range(1, n + 1)))


def _fpf_perms(n: int) -> Iterator[Permutation]:
    return (Permutation._from_trusted(w) for w in _fpf_words(n))


def _random_fpf(n: int, rng: random.Random) -> Permutation:
    if n % 2 != 0:
        raise ValueError(f"fixed-point-free involutions need even n, got {n}")
    word = [0] * n
    unplaced = list(range(1, n + 1))
    while unplaced:
        m = unplaced[-1]
        idx = rng.randrange(len(unplaced) - 1)
        p = unplaced[idx]
        word[m - 1], word[p - 1] = p, m
        unplaced.pop()
        unplaced.pop(idx)
    return Permutation._from_trusted(tuple(word))


def _double_factorial_odd(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _fpf_count(n: int) -> int:
    return _double_factorial_odd(n - 1) if n % 2 == 0 else 0


FAMILIES: dict[str, PermutationFamily] = {
    "all": PermutationFamily(
        name="all",
        membership=lambda p: True,
        generator=_all_perms,
        sampler=_shuffle_perm,
        max_exact_n=10,
        size_fn=factorial,
    ),
    "involutions": PermutationFamily(
        name="involutions",
        membership=Permutation.is_involution,
        generator=lambda n: enumerate_involutions(n, cap=n),
        sampler=random_involution,
        max_exact_n=14,
        size_fn=count_involutions,
    ),
    "fpf-involutions": PermutationFamily(
        name="fpf-involutions",
        membership=lambda p: p.is_involution() and not p.fixed_points(),
        generator=_fpf_perms,
        sampler=_random_fpf,
        max_exact_n=16,
        size_fn=_fpf_count,
    ),
}


def get_family(name: str) -> PermutationFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; available: {', '.join(sorted(FAMILIES))}"
        ) from None


def _check_cap(family: PermutationFamily, n: int, cap: int | None) -> None:
    limit = family.max_exact_n if cap is None else cap
    if n > limit:
        size = f"{family.size_fn(n)} members" if family.size_fn else "unknown size"
        raise CapExceeded(
            f"exact enumeration of family {family.name!r} at n={n} exceeds the cap "
            f"of {limit} ({size}); raise the cap to proceed"
        )


def _validate_pattern(tau, n: int) -> SubsequencePattern:
    if not isinstance(tau, SubsequencePattern):
        tau = SubsequencePattern(tuple(tau))
    if any(v > n for v in tau.values):
        raise ValueError(f"pattern values must lie in 1..{n}: {tau.values}")
    return tau


def ptilde_exact(
    family: PermutationFamily, n: int, tau, cap: int | None = None
) -> Fraction:
    """The exact fraction of size-n members containing tau as a subsequence."""
    tau = _validate_pattern(tau, n)
    _check_cap(family, n, cap)
    hits = total = 0
    for member in family.generator(n):
        total += 1
        if contains_subsequence(member, tau):
            hits += 1
    if total == 0:
        raise ValueError(f"family {family.name!r} has no members at n={n}")
    return Fraction(hits, total)


def ptilde_mc(
    family: PermutationFamily, n: int, tau, samples: int, seed: int
) -> tuple[float, float]:
    """Monte-Carlo estimate of ptilde with its binomial standard error."""
    tau = _validate_pattern(tau, n)
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    if family.sampler is None:
        raise ValueError(f"family {family.name!r} has no sampler")
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples):
        if contains_subsequence(family.sampler(n, rng), tau):
            hits += 1
    estimate = hits / samples
    stderr = sqrt(estimate * (1.0 - estimate) / samples)
    return estimate, stderr


def q_probability(
    family: PermutationFamily, n: int, index_set, cap: int | None = None
) -> Fraction:
    """Probability that a random member maps some element of I into I."""
    iset = frozenset(int(v) for v in index_set)
    if any(not 1 <= v <= n for v in iset):
        raise ValueError(f"index set must lie in 1..{n}: {sorted(iset)}")
    if not iset:
        return Fraction(0)
    _check_cap(family, n, cap)
    hits = total = 0
    for member in family.generator(n):
        total += 1
        if any(member.word[v - 1] in iset for v in iset):
            hits += 1
    if total == 0:
        raise ValueError(f"family {family.name!r} has no members at n={n}")
    return Fraction(hits, total)


def q_bound(n: int, k: int, f_n: Fraction) -> Fraction:
    """Upper bound k (n(k-1) + f_n (n-k)) / (n(n-1)) for q(I) with |I| = k.

    f_n is the family's average number of fixed points at size n.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    return Fraction(k) * (n * (k - 1) + Fraction(f_n) * (n - k)) / (n * (n - 1))


def sandwich_check(
    family: PermutationFamily, n: int, index_set, cap: int | None = None
) -> DeviationReport:
    """Verify (1-q)/k! <= ptilde(tau) <= (1-q)/k! + q for every ordering of I.

    A member contains exactly one ordering of I (the positions of the
    values of I induce it), so one pass over the family yields ptilde for
    all k! orderings at once.  The report's deviation fields describe the
    worst ordering; passed is true iff every ordering sits inside the
    sandwich.
    """
    iset = sorted(set(int(v) for v in index_set))
    if not iset:
        raise ValueError("index set must be nonempty")
    if any(not 1 <= v <= n for v in iset):
        raise ValueError(f"index set must lie in 1..{n}: {iset}")
    _check_cap(family, n, cap)
    k = len(iset)
    order_counts: dict[tuple[int, ...], int] = {
        tau: 0 for tau in permutations(iset)
    }
    total = 0
    a_count = 0
    values = frozenset(iset)
    for member in family.generator(n):
        total += 1
        word = member.word
        pos = {v: word.index(v) for v in iset}
        induced = tuple(sorted(iset, key=pos.get))
        order_counts[induced] += 1
        if any(word[v - 1] in values for v in iset):
            a_count += 1
    if total == 0:
        raise ValueError(f"family {family.name!r} has no members at n={n}")
    q = Fraction(a_count, total)
    lower = (1 - q) / factorial(k)
    upper = lower + q
    uniform = Fraction(1, factorial(k))
    best = None
    passed = True
    for tau in permutations(iset):
        pt = Fraction(order_counts[tau], total)
        if not lower <= pt <= upper:
            passed = False
        dev = abs(pt - uniform)
        if best is None or dev > best[0]:
            best = (dev, tau, pt)
    dev, tau, pt = best
    return DeviationReport(
        family=family.name,
        n=n,
        k=k,
        max_deviation=dev,
        argmax_pattern=SubsequencePattern(tau),
        ptilde=pt,
        lower_bound=lower,
        upper_bound=upper,
        passed=passed,
    )


def _position_words(
    family: PermutationFamily, n: int, stride: int = 1, offset: int = 0
) -> Iterator[list[int]]:
    for idx, member in enumerate(family.generator(n)):
        if stride > 1 and idx % stride != offset:
            continue
        pos = [0] * n
        for i, v in enumerate(member.word):
            pos[v - 1] = i
        yield pos


def _scan_shard(args: tuple[str, int, int, int, int]):
    # Worker for sharded exact deviation: one strided pass over the family.
    name, n, k, stride, offset = args
    family = get_family(name)
    return pattern_rank_counts(_position_words(family, n, stride, offset), n, k)


def deviation(
    family: PermutationFamily,
    n: int,
    k: int,
    cap: int | None = None,
    pattern_cap: int = config.MAX_PATTERNS,
    jobs: int = 1,
) -> DeviationReport:
    """Maximum of |ptilde - 1/k!| over all patterns of k distinct values.

    Scans the family once, classifying every k-subset of values of every
    member by induced order; ties in the maximum resolve to the first
    pattern in lexicographic order.  The sandwich bounds reported are the
    ones for the argmax pattern's value set.

    With jobs > 1 and a registered family, the stream is sharded across
    worker processes (worker w takes members with index congruent to w);
    counts merge by addition, so the result does not depend on jobs.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    npatterns = 1
    for i in range(k):
        npatterns *= n - i
    if npatterns > pattern_cap:
        raise CapExceeded(
            f"deviation at n={n}, k={k} scans {npatterns} patterns, over the "
            f"pattern cap of {pattern_cap}; raise the cap to proceed"
        )
    _check_cap(family, n, cap)
    if jobs > 1 and FAMILIES.get(family.name) is family:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(processes=jobs) as pool:
            shards = pool.map(
                _scan_shard, [(family.name, n, k, jobs, w) for w in range(jobs)]
            )
        counts = shards[0][0]
        total = shards[0][1]
        for shard_counts, shard_total in shards[1:]:
            for i, c in enumerate(shard_counts):
                counts[i] += c
            total += shard_total
    else:
        counts, total = pattern_rank_counts(_position_words(family, n), n, k)
    if total == 0:
        raise ValueError(f"family {family.name!r} has no members at n={n}")
    uniform = Fraction(1, factorial(k))
    best_dev = None
    best_tau = None
    best_count = 0
    for rank, tau in enumerate(permutations(range(1, n + 1), k)):
        dev = abs(Fraction(counts[rank], total) - uniform)
        if best_dev is None or dev > best_dev:
            best_dev, best_tau, best_count = dev, tau, counts[rank]
    q = q_probability(family, n, set(best_tau), cap=cap)
    lower = (1 - q) / factorial(k)
    upper = lower + q
    pt = Fraction(best_count, total)
    return DeviationReport(
        family=family.name,
        n=n,
        k=k,
        max_deviation=best_dev,
        argmax_pattern=SubsequencePattern(best_tau),
        ptilde=pt,
        lower_bound=lower,
        upper_bound=upper,
        passed=lower <= pt <= upper,
    )


def deviation_mc(
    family: PermutationFamily,
    n: int,
    k: int,
    samples: int,
    seed: int,
    pattern_cap: int = config.MAX_PATTERNS,
) -> dict:
    """Monte-Carlo counterpart of `deviation`, reported as a plain dict.

    Deterministic given the seed: one sampler stream feeds the same
    pattern accounting as the exact scan.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    if family.sampler is None:
        raise ValueError(f"family {family.name!r} has no sampler")
    npatterns = 1
    for i in range(k):
        npatterns *= n - i
    if npatterns > pattern_cap:
        raise CapExceeded(
            f"deviation at n={n}, k={k} scans {npatterns} patterns, over the "
            f"pattern cap of {pattern_cap}; raise the cap to proceed"
        )
    rng = random.Random(seed)

    def draws() -> Iterator[list[int]]:
        for _ in range(samples):
            word = family.sampler(n, rng).word
            pos = [0] * n
            for i, v in enumerate(word):
                pos[v - 1] = i
            yield pos

    counts, total = pattern_rank_counts(draws(), n, k)
    uniform = 1.0 / factorial(k)
    best_dev = -1.0
    best_tau = None
    best_count = 0
    for rank, tau in enumerate(permutations(range(1, n + 1), k)):
        dev = abs(counts[rank] / total - uniform)
        if dev > best_dev:
            best_dev, best_tau, best_count = dev, tau, counts[rank]
    estimate = best_count / total
    stderr = sqrt(estimate * (1.0 - estimate) / total)
    return {
        "family": family.name,
        "n": n,
        "k": k,
        "samples": samples,
        "seed": seed,
        "max_deviation_estimate": best_dev,
        "argmax_pattern": list(best_tau),
        "ptilde_estimate": estimate,
        "stderr": stderr,
    }


def average_fixed_points_enumerated(family: PermutationFamily, n: int, cap: int | None = None) -> Fraction:
    """Average fixed-point count over the family slice, by enumeration."""
    _check_cap(family, n, cap)
    total = 0
    members = 0
    for member in family.generator(n):
        members += 1
        total += len(member.fixed_points())
    if members == 0:
        raise ValueError(f"family {family.name!r} has no members at n={n}")
    return Fraction(total, members)
