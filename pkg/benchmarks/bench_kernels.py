"""Timing comparison of the compiled and pure Python kernels.

Runs each kernel entry point on a representative workload with both
implementations and prints the speedup.  The compiled module is optional;
when it is absent only the pure timings appear.

Usage: python benchmarks/bench_kernels.py
"""

import time

from ytab._kernels import pykern
from ytab.involutions import enumerate_involutions

try:
    from ytab._kernels import _ckern
except ImportError:
    _ckern = None


def _positions(n):
    out = []
    for phi in enumerate_involutions(n):
        pos = [0] * n
        for i, v in enumerate(phi.word):
            pos[v - 1] = i
        out.append(pos)
    return out


def _workloads():
    pos12 = _positions(12)
    nine_cell = ((1, 3, 5, 7, 9), (2, 4, 6, 8))
    return [
        (
            "count_syt_completions(14, ())",
            lambda mod: mod.count_syt_completions(14, ()),
        ),
        (
            "assignment_shape_counts(12, pins (1,2)=2 (1,3)=3)",
            lambda mod: mod.assignment_shape_counts(12, ((1, 2, 2), (1, 3, 3))),
        ),
        (
            "pattern_rank_counts(involutions n=12, k=2)",
            lambda mod: mod.pattern_rank_counts(iter(pos12), 12, 2),
        ),
        (
            "insert_word(range shuffle, 10k words)",
            lambda mod: [mod.insert_word(w) for w in _WORDS],
        ),
        (
            "zset_members(9-cell two-row tableau)",
            lambda mod: mod.zset_members(nine_cell),
        ),
    ]


_WORDS = [
    tuple(((i * 7 + j * 13) % 20) + 1 for j in range(20)) for i in range(10_000)
]


def _time(fn, mod):
    start = time.perf_counter()
    result = fn(mod)
    elapsed = time.perf_counter() - start
    return elapsed, result


def main():
    rows = []
    for label, fn in _workloads():
        pure_t, pure_r = _time(fn, pykern)
        if _ckern is None:
            rows.append((label, pure_t, None, None))
            continue
        comp_t, comp_r = _time(fn, _ckern)
        if isinstance(pure_r, tuple) and hasattr(pure_r[0], "tolist"):
            agree = list(pure_r[0]) == list(comp_r[0]) and pure_r[1] == comp_r[1]
        else:
            agree = pure_r == comp_r
        if not agree:
            raise SystemExit(f"backend disagreement on: {label}")
        rows.append((label, pure_t, comp_t, pure_t / comp_t))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  {'speedup':>8}")
    for label, pure_t, comp_t, speedup in rows:
        if comp_t is None:
            print(f"{label:<{width}}  {pure_t:>8.3f}s  {'-':>9}  {'-':>8}")
        else:
            print(
                f"{label:<{width}}  {pure_t:>8.3f}s  {comp_t:>8.3f}s  {speedup:>7.1f}x"
            )


if __name__ == "__main__":
    main()
