import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from ytab._kernels import BACKEND, pykern

_ckern = pytest.importorskip(
    "ytab._kernels._ckern", reason="compiled kernels not built"
)


def test_backend_reports_a_known_value():
    assert BACKEND in ("pure", "compiled")


def test_env_override_forces_pure_backend():
    code = "from ytab._kernels import BACKEND; print(BACKEND)"
    env = dict(os.environ, YTAB_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "pure"


prefix_strategy = st.lists(
    st.integers(min_value=1, max_value=4), min_size=0, max_size=4
).map(lambda xs: tuple(sorted(xs, reverse=True)))


@given(st.integers(min_value=0, max_value=9), prefix_strategy)
@settings(max_examples=60, deadline=None)
def test_count_syt_completions_agreement(n, prefix):
    assert _ckern.count_syt_completions(n, prefix) == pykern.count_syt_completions(
        n, prefix
    )


@st.composite
def constraint_strategy(draw):
    ncells = draw(st.integers(min_value=1, max_value=7))
    n_constraints = draw(st.integers(min_value=0, max_value=min(3, ncells)))
    cells = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=4),
                st.integers(min_value=1, max_value=4),
            ),
            min_size=n_constraints,
            max_size=n_constraints,
            unique=True,
        )
    )
    values = draw(
        st.lists(
            st.integers(min_value=1, max_value=ncells),
            min_size=n_constraints,
            max_size=n_constraints,
            unique=True,
        )
    )
    return ncells, tuple((r, c, v) for (r, c), v in zip(cells, values))


@given(constraint_strategy())
@settings(max_examples=60, deadline=None)
def test_assignment_shape_counts_agreement(case):
    ncells, constraints = case
    assert _ckern.assignment_shape_counts(ncells, constraints) == pykern.assignment_shape_counts(
        ncells, constraints
    )


@st.composite
def pos_words_case(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    k = draw(st.integers(min_value=1, max_value=min(3, n)))
    nwords = draw(st.integers(min_value=0, max_value=6))
    words = [draw(st.permutations(range(1, n + 1))) for _ in range(nwords)]
    pos_words = []
    for word in words:
        pos = [0] * n
        for i, v in enumerate(word):
            pos[v - 1] = i
        pos_words.append(pos)
    return n, k, pos_words


@given(pos_words_case())
@settings(max_examples=60, deadline=None)
def test_pattern_rank_counts_agreement(case):
    n, k, pos_words = case
    c_counts, c_total = _ckern.pattern_rank_counts(iter(pos_words), n, k)
    p_counts, p_total = pykern.pattern_rank_counts(iter(pos_words), n, k)
    assert list(c_counts) == list(p_counts)
    assert c_total == p_total


def test_pattern_rank_counts_rejects_bad_k():
    with pytest.raises(ValueError):
        _ckern.pattern_rank_counts(iter([]), 3, 4)
    with pytest.raises(ValueError):
        pykern.pattern_rank_counts(iter([]), 3, 4)


@given(
    st.lists(st.integers(min_value=1, max_value=9), min_size=0, max_size=9)
)
@settings(max_examples=100, deadline=None)
def test_insert_word_agreement(word):
    # repeated values exercise the bumping path beyond permutations
    assert _ckern.insert_word(tuple(word)) == pykern.insert_word(tuple(word))


def test_zset_members_agreement():
    from ytab.tableaux import enumerate_syt_n

    for k in range(1, 6):
        for t in enumerate_syt_n(k):
            assert _ckern.zset_members(t.rows) == pykern.zset_members(t.rows)
