"""End-to-end acceptance checks.

Each test covers one published claim, computes it at the stated scale
with exact arithmetic, enforces the stated runtime budget, and prints a
single [ACCEPTANCE] line that survives pytest's capture.
"""

import csv
import io
import time
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, isqrt

from click.testing import CliRunner

from ytab.cli import cli
from ytab.involutions import (
    InvolutionCountTable,
    avg_fixed_points,
    count_involutions,
    enumerate_involutions,
    f_exact,
    random_involution,
)
from ytab.probabilities import (
    empirical_prob_subtableau,
    limit_prob_shapes,
    limit_prob_subtableau,
    prob_two_columns,
    two_column_shapes,
)
from ytab.quasirandom import get_family, q_bound, q_probability, sandwich_check
from ytab.rsk import z_set
from ytab.shapes import count_syt, partitions_of
from ytab.tableaux import enumerate_syt_n, shape_of
import random


def _finish(capsys, num, label, failures, elapsed, budget):
    ok = not failures and elapsed < budget
    with capsys.disabled():
        print(
            f"[ACCEPTANCE] criterion {num} ({label}): "
            f"{'PASS' if ok else 'FAIL'} ({elapsed:.2f}s)"
        )
    assert elapsed < budget, f"runtime {elapsed:.2f}s exceeds budget {budget}s"
    assert not failures, failures


def _run_cli(args):
    result = CliRunner().invoke(cli, args, catch_exceptions=False)
    assert result.exit_code == 0, result.output
    return result.output


OCCUPANCY_EXPECTED = {
    2: ["1/2", "0", "0", "0", "0", "0", "0"],
    3: ["1/3", "1/6", "0", "0", "0", "0", "0"],
    4: ["1/8", "1/4", "1/24", "0", "0", "1/6", "0"],
    5: ["1/30", "7/30", "1/10", "1/120", "0", "1/4", "0"],
    6: ["1/144", "1/6", "7/48", "1/36", "1/720", "7/30", "5/144"],
}


def test_criterion_1_occupancy_table(capsys):
    start = time.perf_counter()
    failures = []
    rows = list(csv.reader(io.StringIO(_run_cli(["table", "occupancy", "--k-max", "6"]))))
    if rows[0] != ["k", "(1,2)", "(1,3)", "(1,4)", "(1,5)", "(1,6)", "(2,2)", "(2,3)"]:
        failures.append(f"header {rows[0]}")
    for row in rows[1:]:
        k = int(row[0])
        got = [Fraction(x) for x in row[1:]]
        want = [Fraction(x) for x in OCCUPANCY_EXPECTED[k]]
        if got != want:
            failures.append(f"k={k}: {row[1:]} != {OCCUPANCY_EXPECTED[k]}")
    if len(rows) != 6:
        failures.append(f"expected 5 data rows, got {len(rows) - 1}")
    _finish(capsys, 1, "occupancy table", failures, time.perf_counter() - start, 5.0)


def test_criterion_2_joint_table(capsys):
    start = time.perf_counter()
    failures = []
    rows = list(
        csv.reader(io.StringIO(_run_cli(["table", "joint", "--r-max", "6", "--s-max", "9"])))
    )
    s_values = [int(x) for x in rows[0][1:]]
    table = {}
    for row in rows[1:]:
        r = int(row[0])
        for s, text in zip(s_values, row[1:]):
            table[(r, s)] = Fraction(text)
    if table[(4, 7)] != Fraction(53, 2520):
        failures.append(f"(4,7) = {table[(4, 7)]}")
    if table[(5, 9)] != Fraction(913, 362880):
        failures.append(f"(5,9) = {table[(5, 9)]}")
    # independent route: enumerate all s-cell tableaux and weight each
    # filling by the number of its extensions, i.e. f^shape / s!
    for s in s_values:
        brute = {r: Fraction(0) for r in range(2, 7)}
        for t in enumerate_syt_n(s):
            if len(t.rows[0]) >= 3 and t.rows[0][2] == s:
                r = t.rows[0][1]
                if 2 <= r <= 6:
                    brute[r] += Fraction(count_syt(shape_of(t)), factorial(s))
        for r in range(2, 7):
            if table[(r, s)] != brute[r]:
                failures.append(f"({r},{s}): table {table[(r, s)]}, enumeration {brute[r]}")
    _finish(capsys, 2, "joint table", failures, time.perf_counter() - start, 60.0)


def test_criterion_3_f_table(capsys):
    start = time.perf_counter()
    failures = []
    if f_exact(8, 3) != 246:
        failures.append(f"f(8,3) = {f_exact(8, 3)}")
    if f_exact(9, 5) != 98:
        failures.append(f"f(9,5) = {f_exact(9, 5)}")
    for n in range(2, 10):
        brute = {k: 0 for k in range(1, n + 1)}
        for t in enumerate_syt_n(n):
            if len(t.rows[0]) >= 2:
                brute[t.rows[0][1]] += 1
        formula = {k: f_exact(n, k) for k in range(1, n + 1)}
        if formula != brute:
            failures.append(f"n={n}: formula {formula} != enumeration {brute}")
    _finish(capsys, 3, "f(n,k) table", failures, time.perf_counter() - start, 10.0)


def test_criterion_4_parseval_and_mass(capsys):
    start = time.perf_counter()
    failures = []
    for k in range(0, 11):
        counts = [count_syt(lam) for lam in partitions_of(k)]
        if sum(c * c for c in counts) != factorial(k):
            failures.append(f"sum of squares at k={k}")
        if sum(counts) != count_involutions(k):
            failures.append(f"mass at k={k}")
    _finish(capsys, 4, "hook-count identities", failures, time.perf_counter() - start, 5.0)


def test_criterion_5_z_set_sizes(capsys):
    start = time.perf_counter()
    failures = []
    seen_at_6 = 0
    for k in range(1, 7):
        for t in enumerate_syt_n(k):
            if k == 6:
                seen_at_6 += 1
            if len(z_set(t)) != count_syt(shape_of(t)):
                failures.append(f"tableau {t.rows}")
    if seen_at_6 != 76:
        failures.append(f"expected 76 six-cell tableaux, saw {seen_at_6}")
    _finish(capsys, 5, "insertion fiber sizes", failures, time.perf_counter() - start, 30.0)


def test_criterion_6_convergence(capsys):
    start = time.perf_counter()
    failures = []
    for t in enumerate_syt_n(3):
        limit = limit_prob_subtableau(t)
        devs = [abs(empirical_prob_subtableau(n, t) - limit) for n in (8, 10, 12, 14)]
        if not all(a > b for a, b in zip(devs, devs[1:])):
            failures.append(f"{t.rows}: not strictly decreasing {devs}")
        if not devs[-1] < Fraction(1, 100):
            failures.append(f"{t.rows}: final deviation {devs[-1]}")
    _finish(capsys, 6, "prefix convergence", failures, time.perf_counter() - start, 120.0)


def _c_coefficient(n, k):
    # (f(n,k)/t_n - (k-1)/k!) n^{3/2}, exact when n is an even power of two
    root = isqrt(n)
    assert root * root == n
    t_n = count_involutions(n)
    return (Fraction(f_exact(n, k), t_n) - Fraction(k - 1, factorial(k))) * n * root


def test_criterion_7_second_order_asymptotics(capsys):
    start = time.perf_counter()
    failures = []
    c3 = _c_coefficient(16384, 3)
    c4_big = _c_coefficient(16384, 4)
    c4_small = _c_coefficient(1024, 4)
    c5 = _c_coefficient(16384, 5)
    if abs(c3 + Fraction(1, 3)) > Fraction(1, 50):
        failures.append(f"c_3(16384) = {float(c3):.5f}")
    if abs(c5 - Fraction(1, 6)) > Fraction(1, 100):
        failures.append(f"c_5(16384) = {float(c5):.5f}")
    if not abs(c4_big) < abs(c4_small):
        failures.append(
            f"|c_4(16384)| = {float(abs(c4_big)):.5f} not below "
            f"|c_4(1024)| = {float(abs(c4_small)):.5f}"
        )
    _finish(capsys, 7, "second-order asymptotics", failures, time.perf_counter() - start, 120.0)


def test_criterion_8_sandwich(capsys):
    start = time.perf_counter()
    failures = []
    n = 8
    family = get_family("involutions")
    f_n = avg_fixed_points(n)
    for k in (2, 3):
        bound = q_bound(n, k, f_n)
        for iset in combinations(range(1, n + 1), k):
            report = sandwich_check(family, n, iset)
            if not report.passed:
                failures.append(f"I={iset} ordering outside sandwich")
            if q_probability(family, n, iset) > bound:
                failures.append(f"I={iset} q over bound")
    _finish(capsys, 8, "quasirandomness sandwich", failures, time.perf_counter() - start, 60.0)


def test_criterion_9_fixed_points(capsys):
    start = time.perf_counter()
    failures = []
    for n in range(1, 11):
        total = 0
        members = 0
        for phi in enumerate_involutions(n):
            total += len(phi.fixed_points())
            members += 1
        if Fraction(total, members) != avg_fixed_points(n):
            failures.append(f"n={n}: enumerated mean != formula")
    for n in (50, 100, 400):
        a = avg_fixed_points(n)
        # 0.9 <= a/sqrt(n) <= 1.2, squared to stay in exact arithmetic
        if not Fraction(81 * n, 100) <= a * a <= Fraction(144 * n, 100):
            failures.append(f"n={n}: ratio {float(a) / n ** 0.5:.4f} outside [0.9, 1.2]")
    _finish(capsys, 9, "fixed-point statistics", failures, time.perf_counter() - start, 5.0)


def test_criterion_10_two_column_identity(capsys):
    start = time.perf_counter()
    failures = []
    for k in range(1, 13):
        closed = Fraction(comb(2 * k, k), factorial(k + 1))
        if prob_two_columns(k) != closed:
            failures.append(f"k={k}: prob_two_columns")
        if limit_prob_shapes(two_column_shapes(k)) != closed:
            failures.append(f"k={k}: shape-sum route")
    _finish(capsys, 10, "two-column identity", failures, time.perf_counter() - start, 5.0)


def test_criterion_11_sampler_uniformity(capsys):
    start = time.perf_counter()
    failures = []
    n, draws = 4, 100_000
    targets = [p.word for p in enumerate_involutions(n)]
    counts = dict.fromkeys(targets, 0)
    rng = random.Random(20240814)
    table = InvolutionCountTable.up_to(n)
    for _ in range(draws):
        counts[random_involution(n, rng, table=table).word] += 1
    # 5 sigma around draws/10: (c - 10000)^2 <= 25 * draws * (1/10)(9/10)
    limit = 25 * draws * 9 // 100
    for w, c in counts.items():
        if (c - draws // 10) ** 2 > limit:
            failures.append(f"word {w}: count {c}")
    if len(counts) != 10:
        failures.append(f"expected 10 involutions, saw {len(counts)}")
    _finish(capsys, 11, "sampler uniformity", failures, time.perf_counter() - start, 5.0)
