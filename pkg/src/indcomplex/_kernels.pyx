# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled computational kernels (64-bit masks, int64 coefficients).

Mirrors the contracts of `_purekernels`: depth-first bitset face
enumeration, column-reduction ranks over GF(2) and Q, and the unit-pivot
sparse Smith elimination.  Integer arithmetic is overflow-checked; an
OverflowError tells the caller to rerun with the pure backend.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc, realloc

cnp.import_array()

BACKEND_NAME = "compiled"


class BudgetError(RuntimeError):
    pass


cdef struct Buf:
    uint64_t* data
    Py_ssize_t len
    Py_ssize_t cap


cdef int buf_push(Buf* b, uint64_t v) except -1:
    if b.len == b.cap:
        b.cap = b.cap * 2 if b.cap else 1024
        b.data = <uint64_t*> realloc(b.data, b.cap * sizeof(uint64_t))
        if b.data == NULL:
            raise MemoryError()
    b.data[b.len] = v
    b.len += 1
    return 0


def enumerate_faces(nbr_list, long long budget, int max_size=-1):
    """Independent sets by size as uint64 mask arrays, lex order per size."""
    cdef int n = len(nbr_list)
    if n > 64:
        raise ValueError("compiled enumeration limited to 64 vertices")
    cdef uint64_t nbr[64]
    cdef int i
    for i in range(n):
        nbr[i] = <uint64_t> <unsigned long long> nbr_list[i]
    cdef int cap_size = n if max_size < 0 else min(max_size, n)
    cdef Buf* bufs = <Buf*> malloc((n + 1) * sizeof(Buf))
    if bufs == NULL:
        raise MemoryError()
    for i in range(n + 1):
        bufs[i].data = NULL
        bufs[i].len = 0
        bufs[i].cap = 0
    # explicit DFS stack: one frame per level
    cdef uint64_t* mask_st = <uint64_t*> malloc((n + 2) * sizeof(uint64_t))
    cdef uint64_t* cand_st = <uint64_t*> malloc((n + 2) * sizeof(uint64_t))
    cdef long long total = 1
    cdef int depth = 0
    cdef uint64_t mask, cand, low
    cdef int v, csize
    try:
        if mask_st == NULL or cand_st == NULL:
            raise MemoryError()
        mask_st[0] = 0
        cand_st[0] = (<uint64_t> 0xFFFFFFFFFFFFFFFF) >> (64 - n) if n else 0
        if cap_size == 0:
            cand_st[0] = 0
        while depth >= 0:
            cand = cand_st[depth]
            if cand == 0:
                depth -= 1
                continue
            low = cand & (0 - cand)
            cand_st[depth] = cand ^ low
            v = _ctz(low)
            mask = mask_st[depth] | low
            csize = depth + 1
            total += 1
            if total > budget:
                raise BudgetError(budget)
            buf_push(&bufs[csize], mask)
            if csize < cap_size:
                cand = (cand ^ low) & ~nbr[v]
                if cand:
                    depth += 1
                    mask_st[depth] = mask
                    cand_st[depth] = cand
        top = 0
        for i in range(n + 1):
            if bufs[i].len:
                top = i
        out = []
        for i in range(top + 1):
            arr = np.empty(bufs[i].len, dtype=np.uint64)
            if i == 0:
                arr = np.zeros(1, dtype=np.uint64)
            else:
                for j in range(bufs[i].len):
                    (<uint64_t*> cnp.PyArray_DATA(arr))[j] = bufs[i].data[j]
            out.append(arr)
        return out
    finally:
        for i in range(n + 1):
            if bufs[i].data != NULL:
                free(bufs[i].data)
        free(bufs)
        if mask_st != NULL:
            free(mask_st)
        if cand_st != NULL:
            free(cand_st)


cdef inline int _ctz(uint64_t x):
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


# --- column arena ---------------------------------------------------------

cdef struct Col:
    int32_t* rows
    int64_t* vals   # NULL in GF(2) mode
    Py_ssize_t len


cdef class _Arena:
    cdef Col* cols
    cdef Py_ssize_t count
    cdef Py_ssize_t cap

    def __cinit__(self):
        self.cap = 4096
        self.count = 0
        self.cols = <Col*> malloc(self.cap * sizeof(Col))
        if self.cols == NULL:
            raise MemoryError()

    cdef Py_ssize_t store(self, int32_t* rows, int64_t* vals,
                          Py_ssize_t length) except -1:
        if self.count == self.cap:
            self.cap *= 2
            self.cols = <Col*> realloc(self.cols, self.cap * sizeof(Col))
            if self.cols == NULL:
                raise MemoryError()
        cdef int32_t* r = <int32_t*> malloc(length * sizeof(int32_t))
        if r == NULL:
            raise MemoryError()
        cdef Py_ssize_t t
        for t in range(length):
            r[t] = rows[t]
        cdef int64_t* v = NULL
        if vals != NULL:
            v = <int64_t*> malloc(length * sizeof(int64_t))
            if v == NULL:
                free(r)
                raise MemoryError()
            for t in range(length):
                v[t] = vals[t]
        self.cols[self.count].rows = r
        self.cols[self.count].vals = v
        self.cols[self.count].len = length
        self.count += 1
        return self.count - 1

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.cols != NULL:
            for i in range(self.count):
                free(self.cols[i].rows)
                if self.cols[i].vals != NULL:
                    free(self.cols[i].vals)
            free(self.cols)


def reduce_columns_gf2(long long nrows, int64_t[:] indptr, int64_t[:] indices,
                       skip=None):
    """Rank over GF(2) by column reduction (pivot = largest row index)."""
    cdef Py_ssize_t ncols = indptr.shape[0] - 1
    cdef cnp.ndarray owner_arr = np.full(nrows, -1, dtype=np.int64)
    cdef int64_t* owner = <int64_t*> cnp.PyArray_DATA(owner_arr)
    cdef _Arena arena = _Arena()
    cdef const unsigned char[:] skip_view
    cdef bint have_skip = skip is not None
    if have_skip:
        skip_view = np.ascontiguousarray(skip, dtype=np.uint8)
    cdef Py_ssize_t cap = 1024
    cdef int32_t* cur = <int32_t*> malloc(cap * sizeof(int32_t))
    cdef int32_t* tmp = <int32_t*> malloc(cap * sizeof(int32_t))
    cdef Py_ssize_t cur_len, tmp_len
    cdef Py_ssize_t j, t, a, b, need
    cdef int64_t p, own
    cdef long long rank = 0
    cdef Col* oc
    cdef int32_t x, y
    try:
        if cur == NULL or tmp == NULL:
            raise MemoryError()
        for j in range(ncols):
            if have_skip and skip_view[j]:
                continue
            cur_len = indptr[j + 1] - indptr[j]
            if cur_len > cap:
                while cap < cur_len:
                    cap *= 2
                cur = <int32_t*> realloc(cur, cap * sizeof(int32_t))
                tmp = <int32_t*> realloc(tmp, cap * sizeof(int32_t))
                if cur == NULL or tmp == NULL:
                    raise MemoryError()
            for t in range(cur_len):
                cur[t] = <int32_t> indices[indptr[j] + t]
            while cur_len > 0:
                p = cur[cur_len - 1]
                own = owner[p]
                if own < 0:
                    owner[p] = arena.store(cur, NULL, cur_len)
                    rank += 1
                    break
                oc = &arena.cols[own]
                need = cur_len + oc.len
                if need > cap:
                    while cap < need:
                        cap *= 2
                    cur = <int32_t*> realloc(cur, cap * sizeof(int32_t))
                    tmp = <int32_t*> realloc(tmp, cap * sizeof(int32_t))
                    if cur == NULL or tmp == NULL:
                        raise MemoryError()
                # symmetric difference of sorted lists into tmp
                a = 0
                b = 0
                tmp_len = 0
                while a < cur_len and b < oc.len:
                    x = cur[a]
                    y = oc.rows[b]
                    if x < y:
                        tmp[tmp_len] = x
                        tmp_len += 1
                        a += 1
                    elif x > y:
                        tmp[tmp_len] = y
                        tmp_len += 1
                        b += 1
                    else:
                        a += 1
                        b += 1
                while a < cur_len:
                    tmp[tmp_len] = cur[a]
                    tmp_len += 1
                    a += 1
                while b < oc.len:
                    tmp[tmp_len] = oc.rows[b]
                    tmp_len += 1
                    b += 1
                cur, tmp = tmp, cur
                cur_len = tmp_len
        pivots = np.flatnonzero(owner_arr >= 0).astype(np.int64)
        return rank, pivots
    finally:
        if cur != NULL:
            free(cur)
        if tmp != NULL:
            free(tmp)


cdef inline int64_t _gcd64(int64_t a, int64_t b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t OVF = <int64_t> 1 << 62


cdef inline int64_t _mul_checked(int64_t a, int64_t b) except? -9223372036854775807:
    cdef int64_t r = a * b
    if a != 0 and (r // a != b or r >= OVF or r <= -OVF):
        raise OverflowError("int64 overflow in column elimination")
    return r


def reduce_columns_int(long long nrows, int64_t[:] indptr, int64_t[:] indices,
                       int64_t[:] data, skip=None):
    """Rank over Q by fraction-free column reduction (int64, checked)."""
    cdef Py_ssize_t ncols = indptr.shape[0] - 1
    cdef cnp.ndarray owner_arr = np.full(nrows, -1, dtype=np.int64)
    cdef int64_t* owner = <int64_t*> cnp.PyArray_DATA(owner_arr)
    cdef _Arena arena = _Arena()
    cdef const unsigned char[:] skip_view
    cdef bint have_skip = skip is not None
    if have_skip:
        skip_view = np.ascontiguousarray(skip, dtype=np.uint8)
    cdef Py_ssize_t cap = 1024
    cdef int32_t* cr = <int32_t*> malloc(cap * sizeof(int32_t))
    cdef int64_t* cv = <int64_t*> malloc(cap * sizeof(int64_t))
    cdef int32_t* tr = <int32_t*> malloc(cap * sizeof(int32_t))
    cdef int64_t* tv = <int64_t*> malloc(cap * sizeof(int64_t))
    cdef Py_ssize_t cur_len, tmp_len
    cdef Py_ssize_t j, t, a, b, need
    cdef int64_t p, own, va, vb, g, ca, cb, nv
    cdef int32_t x, y
    cdef int32_t* swr
    cdef int64_t* swv
    cdef long long rank = 0
    cdef Col* oc
    try:
        if cr == NULL or cv == NULL or tr == NULL or tv == NULL:
            raise MemoryError()
        for j in range(ncols):
            if have_skip and skip_view[j]:
                continue
            cur_len = indptr[j + 1] - indptr[j]
            if cur_len > cap:
                while cap < cur_len:
                    cap *= 2
                cr = <int32_t*> realloc(cr, cap * sizeof(int32_t))
                cv = <int64_t*> realloc(cv, cap * sizeof(int64_t))
                tr = <int32_t*> realloc(tr, cap * sizeof(int32_t))
                tv = <int64_t*> realloc(tv, cap * sizeof(int64_t))
                if cr == NULL or cv == NULL or tr == NULL or tv == NULL:
                    raise MemoryError()
            for t in range(cur_len):
                cr[t] = <int32_t> indices[indptr[j] + t]
                cv[t] = data[indptr[j] + t]
            while cur_len > 0:
                p = cr[cur_len - 1]
                own = owner[p]
                if own < 0:
                    _normalize_col(cv, cur_len)
                    owner[p] = arena.store(cr, cv, cur_len)
                    rank += 1
                    break
                oc = &arena.cols[own]
                va = cv[cur_len - 1]
                vb = oc.vals[oc.len - 1]
                g = _gcd64(va, vb)
                ca = vb / g           # multiplier for the current column
                cb = -(va / g)        # multiplier for the owner column
                need = cur_len + oc.len
                if need > cap:
                    while cap < need:
                        cap *= 2
                    cr = <int32_t*> realloc(cr, cap * sizeof(int32_t))
                    cv = <int64_t*> realloc(cv, cap * sizeof(int64_t))
                    tr = <int32_t*> realloc(tr, cap * sizeof(int32_t))
                    tv = <int64_t*> realloc(tv, cap * sizeof(int64_t))
                    if cr == NULL or cv == NULL or tr == NULL or tv == NULL:
                        raise MemoryError()
                a = 0
                b = 0
                tmp_len = 0
                while a < cur_len and b < oc.len:
                    x = cr[a]
                    y = oc.rows[b]
                    if x < y:
                        tr[tmp_len] = x
                        tv[tmp_len] = _mul_checked(ca, cv[a])
                        tmp_len += 1
                        a += 1
                    elif x > y:
                        tr[tmp_len] = y
                        tv[tmp_len] = _mul_checked(cb, oc.vals[b])
                        tmp_len += 1
                        b += 1
                    else:
                        nv = _mul_checked(ca, cv[a]) + _mul_checked(cb, oc.vals[b])
                        if nv >= OVF or nv <= -OVF:
                            raise OverflowError("int64 overflow")
                        if nv != 0:
                            tr[tmp_len] = x
                            tv[tmp_len] = nv
                            tmp_len += 1
                        a += 1
                        b += 1
                while a < cur_len:
                    tr[tmp_len] = cr[a]
                    tv[tmp_len] = _mul_checked(ca, cv[a])
                    tmp_len += 1
                    a += 1
                while b < oc.len:
                    tr[tmp_len] = oc.rows[b]
                    tv[tmp_len] = _mul_checked(cb, oc.vals[b])
                    tmp_len += 1
                    b += 1
                swr = cr; cr = tr; tr = swr
                swv = cv; cv = tv; tv = swv
                cur_len = tmp_len
                _normalize_col(cv, cur_len)
        pivots = np.flatnonzero(owner_arr >= 0).astype(np.int64)
        return rank, pivots
    finally:
        if cr != NULL:
            free(cr)
        if cv != NULL:
            free(cv)
        if tr != NULL:
            free(tr)
        if tv != NULL:
            free(tv)


cdef void _normalize_col(int64_t* vals, Py_ssize_t length):
    cdef int64_t g = 0
    cdef Py_ssize_t t
    for t in range(length):
        g = _gcd64(g, vals[t])
        if g == 1:
            return
    if g > 1:
        for t in range(length):
            vals[t] = vals[t] / g


# --- unit-pivot Smith elimination ------------------------------------------

cdef struct SpVec:
    int32_t* idx
    int64_t* val
    int32_t len
    int32_t cap


cdef int sp_append(SpVec* v, int32_t i, int64_t x) except -1:
    if v.len == v.cap:
        v.cap = v.cap * 2 if v.cap else 4
        v.idx = <int32_t*> realloc(v.idx, v.cap * sizeof(int32_t))
        v.val = <int64_t*> realloc(v.val, v.cap * sizeof(int64_t))
        if v.idx == NULL or v.val == NULL:
            raise MemoryError()
    v.idx[v.len] = i
    v.val[v.len] = x
    v.len += 1
    return 0


cdef int sp_append_idx(SpVec* v, int32_t i) except -1:
    if v.len == v.cap:
        v.cap = v.cap * 2 if v.cap else 4
        v.idx = <int32_t*> realloc(v.idx, v.cap * sizeof(int32_t))
        if v.idx == NULL:
            raise MemoryError()
    v.idx[v.len] = i
    v.len += 1
    return 0


cdef inline void sp_remove_idx_at(SpVec* v, int32_t pos):
    v.len -= 1
    v.idx[pos] = v.idx[v.len]


cdef inline int32_t sp_find(SpVec* v, int32_t i):
    cdef int32_t t
    for t in range(v.len):
        if v.idx[t] == i:
            return t
    return -1


cdef inline void sp_remove_at(SpVec* v, int32_t pos):
    v.len -= 1
    v.idx[pos] = v.idx[v.len]
    v.val[pos] = v.val[v.len]


DEF NBUCKETS = 560
DEF EXACT_COST = 512


cdef struct Bucket:
    int32_t* r
    int32_t* c
    Py_ssize_t len
    Py_ssize_t cap


cdef int bucket_push(Bucket* b, int32_t r, int32_t c) except -1:
    if b.len == b.cap:
        b.cap = b.cap * 2 if b.cap else 1024
        b.r = <int32_t*> realloc(b.r, b.cap * sizeof(int32_t))
        b.c = <int32_t*> realloc(b.c, b.cap * sizeof(int32_t))
        if b.r == NULL or b.c == NULL:
            raise MemoryError()
    b.r[b.len] = r
    b.c[b.len] = c
    b.len += 1
    return 0


cdef inline int _cost_bucket(SpVec* row, SpVec* col):
    # exact for small Markowitz costs, logarithmic above, so greedy
    # pivot selection stays meaningful at every scale
    cdef long long cost = (<long long> row.len - 1) * (<long long> col.len - 1)
    cdef int b
    if cost < EXACT_COST:
        return <int> cost
    b = EXACT_COST
    while cost >= 2 * EXACT_COST and b < NBUCKETS - 1:
        cost >>= 1
        b += 1
    return b


def snf_eliminate(long long nrows, long long ncols, int64_t[:] indptr,
                  int64_t[:] indices, int64_t[:] data):
    """Eliminate +-1 pivots (least Markowitz fill first) with Schur updates.

    Returns (unit_count, residual_dict); the residual holds every
    surviving entry (all of absolute value >= 2).  Candidate unit entries
    sit in a bucket queue keyed by Markowitz cost (exact for small costs,
    logarithmic above); stale entries are revalidated on pop, so
    selection never rescans the matrix.  Values live on the rows;
    columns only track which rows touch them.
    """
    cdef Py_ssize_t nc = indptr.shape[0] - 1
    cdef SpVec* rows = <SpVec*> malloc(nrows * sizeof(SpVec))
    cdef SpVec* cols = <SpVec*> malloc(nc * sizeof(SpVec))
    cdef Bucket* buckets = <Bucket*> malloc(NBUCKETS * sizeof(Bucket))
    cdef int32_t* prow = NULL
    cdef int64_t* pval = NULL
    cdef int32_t* pcol = NULL
    cdef int64_t* pcval = NULL
    cdef Py_ssize_t pr_cap = 0, pc_cap = 0
    # stamped scratch: position of each column inside the row being updated
    cdef int32_t* colpos = <int32_t*> malloc(nc * sizeof(int32_t))
    cdef int64_t* colstamp = <int64_t*> malloc(nc * sizeof(int64_t))
    cdef int64_t stamp = 0
    cdef Py_ssize_t i, j, t
    cdef int32_t r, c, ii, jj, pos, pos2, rl, cl, b
    cdef int64_t v, pv, av, bv, q, nv, delta
    cdef SpVec* rv
    cdef SpVec* cv
    try:
        if (rows == NULL or cols == NULL or buckets == NULL
                or (nc and (colpos == NULL or colstamp == NULL))):
            raise MemoryError()
        for i in range(nrows):
            rows[i].idx = NULL; rows[i].val = NULL
            rows[i].len = 0; rows[i].cap = 0
        for j in range(nc):
            cols[j].idx = NULL; cols[j].val = NULL
            cols[j].len = 0; cols[j].cap = 0
            colstamp[j] = 0
        for b in range(NBUCKETS):
            buckets[b].r = NULL; buckets[b].c = NULL
            buckets[b].len = 0; buckets[b].cap = 0
        for j in range(nc):
            for t in range(indptr[j], indptr[j + 1]):
                i = indices[t]
                v = data[t]
                if v == 0:
                    continue
                sp_append(&rows[i], <int32_t> j, v)
                sp_append_idx(&cols[j], <int32_t> i)
        for i in range(nrows):
            for t in range(rows[i].len):
                v = rows[i].val[t]
                if v == 1 or v == -1:
                    j = rows[i].idx[t]
                    bucket_push(&buckets[_cost_bucket(&rows[i], &cols[j])],
                                <int32_t> i, <int32_t> j)
        unit = 0
        b = 0
        while b < NBUCKETS:
            if buckets[b].len == 0:
                b += 1
                continue
            buckets[b].len -= 1
            r = buckets[b].r[buckets[b].len]
            c = buckets[b].c[buckets[b].len]
            pos = sp_find(&rows[r], c)
            if pos < 0:
                continue
            pv = rows[r].val[pos]
            if pv != 1 and pv != -1:
                continue
            pos2 = _cost_bucket(&rows[r], &cols[c])
            if pos2 > b:
                bucket_push(&buckets[pos2], r, c)
                continue
            # snapshot pivot row and column (excluding the pivot entry)
            rl = rows[r].len - 1
            cl = cols[c].len - 1
            if rl > pr_cap:
                pr_cap = rl
                prow = <int32_t*> realloc(prow, pr_cap * sizeof(int32_t))
                pval = <int64_t*> realloc(pval, pr_cap * sizeof(int64_t))
                if prow == NULL or pval == NULL:
                    raise MemoryError()
            if cl > pc_cap:
                pc_cap = cl
                pcol = <int32_t*> realloc(pcol, pc_cap * sizeof(int32_t))
                pcval = <int64_t*> realloc(pcval, pc_cap * sizeof(int64_t))
                if pcol == NULL or pcval == NULL:
                    raise MemoryError()
            pos2 = 0
            for t in range(rows[r].len):
                if rows[r].idx[t] != c:
                    prow[pos2] = rows[r].idx[t]
                    pval[pos2] = rows[r].val[t]
                    pos2 += 1
            # pivot-column values come from their rows; unlink c as we go
            pos2 = 0
            for t in range(cols[c].len):
                ii = cols[c].idx[t]
                if ii == r:
                    continue
                rv = &rows[ii]
                pos = sp_find(rv, c)
                pcol[pos2] = ii
                pcval[pos2] = rv.val[pos]
                sp_remove_at(rv, pos)
                pos2 += 1
            # unlink the pivot row
            for t in range(rl):
                cv = &cols[prow[t]]
                sp_remove_idx_at(cv, sp_find(cv, r))
            rows[r].len = 0
            cols[c].len = 0
            # Schur update: row_i -= (a_ic / pv) * row_r
            for pos2 in range(cl):
                ii = pcol[pos2]
                av = pcval[pos2]
                q = av * pv  # pv is +-1
                rv = &rows[ii]
                stamp += 1
                for t in range(rv.len):
                    colpos[rv.idx[t]] = t
                    colstamp[rv.idx[t]] = stamp
                for t in range(rl):
                    jj = prow[t]
                    bv = pval[t]
                    delta = -_mul_checked(q, bv)
                    cv = &cols[jj]
                    pos = colpos[jj] if colstamp[jj] == stamp else -1
                    if pos >= 0:
                        nv = rv.val[pos] + delta
                        if nv >= OVF or nv <= -OVF:
                            raise OverflowError(
                                "int64 overflow in Smith elimination")
                        if nv == 0:
                            sp_remove_at(rv, pos)
                            if pos < rv.len:
                                # keep scratch in sync with the swapped entry
                                colpos[rv.idx[pos]] = pos
                            colstamp[jj] = 0
                            sp_remove_idx_at(cv, sp_find(cv, ii))
                            continue
                        rv.val[pos] = nv
                    else:
                        nv = delta
                        sp_append(rv, jj, nv)
                        sp_append_idx(cv, ii)
                    if nv == 1 or nv == -1:
                        pos = _cost_bucket(rv, cv)
                        bucket_push(&buckets[pos], ii, jj)
                        if pos < b:
                            b = pos
            unit += 1
        residual = {}
        for i in range(nrows):
            for t in range(rows[i].len):
                residual[(i, <long long> rows[i].idx[t])] = rows[i].val[t]
        return unit, residual
    finally:
        if rows != NULL:
            for i in range(nrows):
                free(rows[i].idx); free(rows[i].val)
            free(rows)
        if cols != NULL:
            for j in range(nc):
                free(cols[j].idx); free(cols[j].val)
            free(cols)
        if buckets != NULL:
            for b in range(NBUCKETS):
                free(buckets[b].r); free(buckets[b].c)
            free(buckets)
        free(prow); free(pval); free(pcol); free(pcval)
        free(colpos); free(colstamp)
