"""Cross-module invariant suites.

Each suite recomputes a family of identities along two independent
routes and reports one check per slice.  They back the `ytab oracle`
command and double as regression guards in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .involutions import avg_fixed_points, count_F_bruteforce, count_involutions, f_exact
from .probabilities import empirical_prob_subtableau, limit_prob_subtableau
from .rsk import insertion_tableau, z_set
from .shapes import count_syt, partitions_of
from .tableaux import enumerate_syt_n, shape_of
from .quasirandom import get_family, q_bound, sandwich_check


@dataclass(frozen=True)
class OracleCheck:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, passed: bool, detail: str = "") -> OracleCheck:
    return OracleCheck(name=name, passed=passed, detail="" if passed else detail)


def suite_parseval(k_max: int) -> list[OracleCheck]:
    """Hook-formula counts against k! and against the involution counts.

    For every k up to k_max, the squares of the tableau counts over all
    shapes of k cells must sum to k!, and the counts themselves must sum
    to the number of involutions of [k].
    """
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    checks = []
    for k in range(k_max + 1):
        counts = [count_syt(lam) for lam in partitions_of(k)]
        squares = sum(c * c for c in counts)
        checks.append(
            _check(
                f"sum-of-squares k={k}",
                squares == factorial(k),
                f"sum f^2 = {squares}, expected {k}! = {factorial(k)}",
            )
        )
        mass = sum(counts)
        checks.append(
            _check(
                f"involution-mass k={k}",
                mass == count_involutions(k),
                f"sum f = {mass}, expected t_{k} = {count_involutions(k)}",
            )
        )
    return checks


def suite_fform(n_max: int) -> list[OracleCheck]:
    """The closed formula for the (1,2)-entry counts against enumeration.

    Three routes per n: direct tableau enumeration, the subsequence
    characterization of involutions, and the row-sum identity
    sum_k f(n,k) = t_n - 1 (only the single column lacks a (1,2) cell).
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    checks = []
    for n in range(2, n_max + 1):
        observed = {k: 0 for k in range(2, n + 1)}
        for t in enumerate_syt_n(n):
            if len(t.rows[0]) >= 2:
                observed[t.rows[0][1]] += 1
        formula = {k: f_exact(n, k) for k in range(2, n + 1)}
        checks.append(
            _check(
                f"tableau-enumeration n={n}",
                observed == formula,
                f"enumerated {observed}, formula {formula}",
            )
        )
        subseq = {k: count_F_bruteforce(n, k - 1) for k in range(2, n + 1)}
        checks.append(
            _check(
                f"subsequence-count n={n}",
                subseq == formula,
                f"subsequence route {subseq}, formula {formula}",
            )
        )
        row_sum = sum(formula.values())
        checks.append(
            _check(
                f"row-sum n={n}",
                row_sum == count_involutions(n) - 1,
                f"sum_k f({n},k) = {row_sum}, expected t_{n} - 1 = {count_involutions(n) - 1}",
            )
        )
    return checks


def suite_theorem1(n_max: int) -> list[OracleCheck]:
    """Finite-n prefix probabilities converging to their limits.

    For each three-cell tableau, |empirical(n) - limit| must strictly
    decrease along n = 8, 10, ..., n_max and end below 1/100.
    """
    if n_max < 8:
        raise ValueError(f"n_max must be at least 8, got {n_max}")
    ns = list(range(8, n_max + 1, 2))
    checks = []
    for t in enumerate_syt_n(3):
        limit = limit_prob_subtableau(t)
        devs = [abs(empirical_prob_subtableau(n, t) - limit) for n in ns]
        label = str(list(list(r) for r in t.rows))
        decreasing = all(a > b for a, b in zip(devs, devs[1:]))
        checks.append(
            _check(
                f"strict-decrease {label}",
                decreasing,
                f"deviations {[str(d) for d in devs]} at n={ns}",
            )
        )
        checks.append(
            _check(
                f"final-below-1/100 {label}",
                devs[-1] < Fraction(1, 100),
                f"deviation {devs[-1]} at n={ns[-1]}",
            )
        )
    return checks


def suite_sandwich(n_max: int) -> list[OracleCheck]:
    """Sandwich bounds for involutions over all small index sets.

    At n = n_max, every ordering of every index set of size 2 or 3 must
    sit inside [(1-q)/k!, (1-q)/k! + q], and each q must respect the
    fixed-point upper bound.
    """
    if n_max < 4:
        raise ValueError(f"n_max must be at least 4, got {n_max}")
    n = n_max
    family = get_family("involutions")
    f_n = avg_fixed_points(n)
    checks = []
    for k in (2, 3):
        subsets = _subsets(n, k)
        bad = None
        bad_bound = None
        for iset in subsets:
            report = sandwich_check(family, n, iset)
            q = 1 - report.lower_bound * factorial(k)
            if not report.passed and bad is None:
                bad = (iset, report)
            if q > q_bound(n, k, f_n) and bad_bound is None:
                bad_bound = (iset, q)
        checks.append(
            _check(
                f"orderings-inside n={n} k={k} ({len(subsets)} index sets)",
                bad is None,
                ""
                if bad is None
                else f"I={bad[0]}: ptilde={bad[1].ptilde} outside "
                f"[{bad[1].lower_bound}, {bad[1].upper_bound}]",
            )
        )
        checks.append(
            _check(
                f"q-bound n={n} k={k} ({len(subsets)} index sets)",
                bad_bound is None,
                ""
                if bad_bound is None
                else f"I={bad_bound[0]}: q={bad_bound[1]} > bound {q_bound(n, k, f_n)}",
            )
        )
    return checks


def _subsets(n: int, k: int) -> list[tuple[int, ...]]:
    from itertools import combinations

    return list(combinations(range(1, n + 1), k))


def suite_zset(k_max: int) -> list[OracleCheck]:
    """Permutation fibers of the insertion map.

    For each k up to k_max: every k-cell tableau's fiber has exactly
    f^shape members, each inserting back to the tableau, and the fiber
    sizes sum to k! (the fibers partition the symmetric group).
    """
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    checks = []
    for k in range(1, k_max + 1):
        total = 0
        bad_size = None
        bad_member = None
        n_tableaux = 0
        for t in enumerate_syt_n(k):
            n_tableaux += 1
            members = z_set(t, cap=max(k, 9))
            total += len(members)
            if len(members) != count_syt(shape_of(t)) and bad_size is None:
                bad_size = (t, len(members))
            for sigma in members:
                if insertion_tableau(sigma) != t:
                    bad_member = (t, sigma)
                    break
        checks.append(
            _check(
                f"fiber-sizes k={k} ({n_tableaux} tableaux)",
                bad_size is None,
                ""
                if bad_size is None
                else f"tableau {bad_size[0].rows}: {bad_size[1]} members, "
                f"expected {count_syt(shape_of(bad_size[0]))}",
            )
        )
        checks.append(
            _check(
                f"fiber-members k={k}",
                bad_member is None,
                ""
                if bad_member is None
                else f"{bad_member[1].word} does not insert to {bad_member[0].rows}",
            )
        )
        checks.append(
            _check(
                f"fiber-partition k={k}",
                total == factorial(k),
                f"fiber sizes sum to {total}, expected {k}! = {factorial(k)}",
            )
        )
    return checks
