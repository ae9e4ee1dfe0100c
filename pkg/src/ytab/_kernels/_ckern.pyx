# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels.

Mirrors `pykern` exactly: same functions, same arguments, same results.
Inputs too large for the fixed C buffers (beyond any practical
enumeration size) are delegated to the pure implementation, so the two
backends never diverge.
"""

from array import array
from itertools import combinations, permutations

from libc.stdlib cimport free, malloc

DEF MAXN = 64


cdef long long _completions_rec(int* rows, int nrows, int m, int n) noexcept:
    if m > n:
        return 1
    cdef long long total = 0
    cdef int r
    for r in range(nrows):
        if r == 0 or rows[r] < rows[r - 1]:
            rows[r] += 1
            total += _completions_rec(rows, nrows, m + 1, n)
            rows[r] -= 1
    rows[nrows] = 1
    total += _completions_rec(rows, nrows + 1, m + 1, n)
    return total


def count_syt_completions(n, prefix_shape):
    """Count growth sequences extending a partial shape to n cells.

    Each standard tableau with n cells arises from a unique sequence of
    corner additions; this counts the sequences whose intermediate shape
    after sum(prefix_shape) steps equals prefix_shape.  With an empty
    prefix it counts all n-cell tableaux.
    """
    if n > MAXN - 2 or len(prefix_shape) > MAXN - 2:
        from . import pykern
        return pykern.count_syt_completions(n, prefix_shape)
    cdef int cn = n
    cdef int rows[MAXN]
    cdef int nrows = len(prefix_shape)
    cdef int i, start = 0
    for i in range(nrows):
        rows[i] = prefix_shape[i]
        start += rows[i]
    if start > cn:
        return 0
    return _completions_rec(rows, nrows, start + 1, cn)


cdef void _assign_rec(int m, int ncells, int nrows, int* rows,
                      int* want_r, int* want_c, unsigned char* pinmap,
                      int pitch, dict counts):
    cdef int r, cell_r, cell_c, wr, wc
    if m > ncells:
        shape = tuple([rows[r] for r in range(nrows)])
        counts[shape] = counts.get(shape, 0) + 1
        return
    wr = want_r[m]
    wc = want_c[m]
    for r in range(nrows + 1):
        if r < nrows:
            if r > 0 and rows[r] >= rows[r - 1]:
                continue
            cell_r = r + 1
            cell_c = rows[r] + 1
        else:
            cell_r = r + 1
            cell_c = 1
        if wr != -1:
            if cell_r != wr or cell_c != wc:
                continue
        elif pinmap[cell_r * pitch + cell_c]:
            continue
        if r < nrows:
            rows[r] += 1
            _assign_rec(m + 1, ncells, nrows, rows, want_r, want_c,
                        pinmap, pitch, counts)
            rows[r] -= 1
        else:
            rows[r] = 1
            _assign_rec(m + 1, ncells, nrows + 1, rows, want_r, want_c,
                        pinmap, pitch, counts)


def assignment_shape_counts(ncells, constraints):
    """Count tableaux with ncells cells satisfying entry constraints, by shape.

    Each constraint (row, col, value) pins the given 1-based cell to the
    given entry.  Returns a map from final shape to the number of standard
    tableaux of that shape meeting every constraint.  Constraints must have
    pairwise distinct cells and pairwise distinct values.
    """
    if ncells > MAXN - 2:
        from . import pykern
        return pykern.assignment_shape_counts(ncells, constraints)
    cdef int cn = ncells
    cdef int pitch = cn + 2
    cdef int rows[MAXN]
    cdef int want_r[MAXN]
    cdef int want_c[MAXN]
    cdef unsigned char* pinmap = <unsigned char*> malloc(pitch * pitch)
    if pinmap == NULL:
        raise MemoryError()
    cdef int i, r, c, v
    cdef dict counts = {}
    try:
        for i in range(pitch * pitch):
            pinmap[i] = 0
        for i in range(cn + 1):
            want_r[i] = -1
            want_c[i] = -1
        for r, c, v in constraints:
            if 1 <= v <= cn:
                want_r[v] = r
                want_c[v] = c
            if 1 <= r <= cn + 1 and 1 <= c <= cn + 1:
                pinmap[r * pitch + c] = 1
        _assign_rec(1, cn, 0, rows, want_r, want_c, pinmap, pitch, counts)
    finally:
        free(pinmap)
    return counts


def pattern_rank_counts(pos_words, n, k):
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
    if n > MAXN:
        from . import pykern
        return pykern.pattern_rank_counts(pos_words, n, k)
    cdef int cn = n
    cdef int ck = k
    cdef long long npatterns = 1
    cdef int i, j
    for i in range(ck):
        npatterns *= cn - i
    counts = array("q", bytes(8 * npatterns))
    cdef long long[::1] cview = counts
    cdef long long suffix[MAXN]
    suffix[ck - 1] = 1
    for i in range(ck - 2, -1, -1):
        suffix[i] = suffix[i + 1] * (cn - i - 1)
    subsets_py = list(combinations(range(cn), ck))
    cdef Py_ssize_t n_subsets = len(subsets_py)
    cdef int* subs = <int*> malloc(n_subsets * ck * sizeof(int))
    if subs == NULL:
        raise MemoryError()
    cdef int posarr[MAXN]
    cdef int tau[MAXN]
    cdef Py_ssize_t si, base
    cdef int v, p
    cdef long long rank, smaller, total = 0
    try:
        for si in range(n_subsets):
            sub = subsets_py[si]
            for i in range(ck):
                subs[si * ck + i] = sub[i]
        for pos in pos_words:
            total += 1
            for i in range(cn):
                posarr[i] = pos[i]
            for si in range(n_subsets):
                base = si * ck
                for i in range(ck):
                    v = subs[base + i]
                    p = posarr[v]
                    j = i
                    while j > 0 and posarr[tau[j - 1]] > p:
                        tau[j] = tau[j - 1]
                        j -= 1
                    tau[j] = v
                rank = 0
                for i in range(ck):
                    v = tau[i]
                    smaller = v
                    for j in range(i):
                        if tau[j] < v:
                            smaller -= 1
                    rank += smaller * suffix[i]
                cview[rank] += 1
    finally:
        free(subs)
    return counts, total


cdef int _c_insert(int* word, int wlen, int* lens, int* vals, int pitch) noexcept:
    # Row-inserts word into the (lens, vals) buffer; returns the row count.
    cdef int nrows = 0
    cdef int wi, x, r, lo, hi, mid, tmp
    cdef int* row
    for wi in range(wlen):
        x = word[wi]
        r = 0
        while True:
            if r == nrows:
                lens[r] = 1
                vals[r * pitch] = x
                nrows += 1
                break
            row = vals + r * pitch
            lo = 0
            hi = lens[r]
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] <= x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == lens[r]:
                row[lo] = x
                lens[r] += 1
                break
            tmp = row[lo]
            row[lo] = x
            x = tmp
            r += 1
    return nrows


def insert_word(word):
    """Row-insert an entire word, returning the resulting tableau rows."""
    wlist = list(word)
    cdef int wlen = len(wlist)
    if wlen > MAXN:
        from . import pykern
        return pykern.insert_word(word)
    cdef int cword[MAXN]
    cdef int lens[MAXN]
    cdef int vals[MAXN * MAXN]
    cdef int i, r
    for i in range(wlen):
        cword[i] = wlist[i]
    cdef int nrows = _c_insert(cword, wlen, lens, vals, MAXN)
    return tuple([
        tuple([vals[r * MAXN + i] for i in range(lens[r])]) for r in range(nrows)
    ])


def zset_members(t_rows):
    """All words over [k] whose insertion tableau equals t_rows, in lex order."""
    cdef int k = sum(len(row) for row in t_rows)
    if k > MAXN:
        from . import pykern
        return pykern.zset_members(t_rows)
    cdef int target_nrows = len(t_rows)
    cdef int target_lens[MAXN]
    cdef int target_vals[MAXN * MAXN]
    cdef int lens[MAXN]
    cdef int vals[MAXN * MAXN]
    cdef int cword[MAXN]
    cdef int i, r, nrows
    cdef bint ok
    for r in range(target_nrows):
        row = t_rows[r]
        target_lens[r] = len(row)
        for i in range(len(row)):
            target_vals[r * MAXN + i] = row[i]
    out = []
    for w in permutations(range(1, k + 1)):
        for i in range(k):
            cword[i] = w[i]
        nrows = _c_insert(cword, k, lens, vals, MAXN)
        if nrows != target_nrows:
            continue
        ok = True
        for r in range(nrows):
            if lens[r] != target_lens[r]:
                ok = False
                break
            for i in range(lens[r]):
                if vals[r * MAXN + i] != target_vals[r * MAXN + i]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(w)
    return out
