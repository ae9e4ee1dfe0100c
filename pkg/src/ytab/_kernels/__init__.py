"""Kernel backend selection.

The compiled extension is used when present; setting YTAB_PURE=1 in the
environment forces the pure Python fallback.  Both backends expose the
same functions with identical semantics.
"""

import os

if os.environ.get("YTAB_PURE") == "1":
    from . import pykern as _impl

    BACKEND = "pure"
else:
    try:
        from . import _ckern as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import pykern as _impl

        BACKEND = "pure"

count_syt_completions = _impl.count_syt_completions
assignment_shape_counts = _impl.assignment_shape_counts
pattern_rank_counts = _impl.pattern_rank_counts
insert_word = _impl.insert_word
zset_members = _impl.zset_members

__all__ = [
    "BACKEND",
    "count_syt_completions",
    "assignment_shape_counts",
    "pattern_rank_counts",
    "insert_word",
    "zset_members",
]
