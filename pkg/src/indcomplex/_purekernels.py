"""Pure-Python computational kernels.

Same contracts as the compiled module `_kernels`; used as the fallback
backend and as the arbitrary-precision path (graphs over 64 vertices,
integer overflow during elimination).  Row indices are plain ints and
coefficients are Python ints, so nothing here can overflow.
"""

from __future__ import annotations

from math import gcd

BACKEND_NAME = "pure"


class FaceBudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__("face enumeration exceeded budget of %d faces" % budget)
        self.budget = budget


def enumerate_faces(nbr: list[int], budget: int, max_size: int = -1):
    """All independent sets grouped by size, lexicographic within a size.

    Returns a list indexed by size; entry s is the list of bitmasks of
    the independent sets with s vertices (entry 0 is [0], the empty set).
    Counts every stored face against `budget`.
    """
    n = len(nbr)
    by_size: list[list[int]] = [[0]]
    total = 1
    if max_size == 0 or n == 0:
        return by_size
    full = (1 << n) - 1
    # stack of (mask, size, candidates above the last chosen vertex)
    stack = [(0, 0, full)]
    while stack:
        mask, size, cand = stack.pop()
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            child = mask | low
            csize = size + 1
            while len(by_size) <= csize:
                by_size.append([])
            by_size[csize].append(child)
            total += 1
            if total > budget:
                raise FaceBudgetExceeded(budget)
            if max_size < 0 or csize < max_size:
                child_cand = cand & ~nbr[v]
                if child_cand:
                    # defer the remaining siblings, then descend
                    stack.append((mask, size, cand))
                    mask, size, cand = child, csize, child_cand
    return by_size


def reduce_columns_gf2(nrows, indptr, indices, skip=None):
    """Rank over GF(2) by left-to-right column reduction.

    Pivot of a column is its largest row index; columns listed in `skip`
    are known to reduce to zero and are not processed.  Returns
    (rank, pivot_rows) where pivot_rows lists the claimed pivot rows.
    """
    ncols = len(indptr) - 1
    pivot_owner = {}
    stored: list[list[int]] = []
    rank = 0
    for j in range(ncols):
        if skip is not None and skip[j]:
            continue
        cur = list(indices[indptr[j]:indptr[j + 1]])
        while cur:
            p = cur[-1]
            owner = pivot_owner.get(p)
            if owner is None:
                pivot_owner[p] = len(stored)
                stored.append(cur)
                rank += 1
                break
            cur = _symdiff(cur, stored[owner])
    return rank, sorted(pivot_owner)


def _symdiff(a: list[int], b: list[int]) -> list[int]:
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif x > y:
            out.append(y)
            j += 1
        else:
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def reduce_columns_int(nrows, indptr, indices, data, skip=None):
    """Rank over the rationals by fraction-free column reduction.

    Columns are kept integral: to cancel a pivot collision the column is
    scaled by pivot/gcd and the owner is subtracted, then the content is
    divided out.  Returns (rank, pivot_rows).
    """
    ncols = len(indptr) - 1
    pivot_owner = {}
    stored_rows: list[list[int]] = []
    stored_vals: list[list[int]] = []
    rank = 0
    for j in range(ncols):
        if skip is not None and skip[j]:
            continue
        rows = list(indices[indptr[j]:indptr[j + 1]])
        vals = [int(v) for v in data[indptr[j]:indptr[j + 1]]]
        while rows:
            p = rows[-1]
            owner = pivot_owner.get(p)
            if owner is None:
                pivot_owner[p] = len(stored_rows)
                _normalize(rows, vals)
                stored_rows.append(rows)
                stored_vals.append(vals)
                rank += 1
                break
            a = vals[-1]
            b = stored_vals[owner][-1]
            g = gcd(a, b)
            rows, vals = _combine(rows, vals, b // g,
                                   stored_rows[owner], stored_vals[owner], -(a // g))
    return rank, sorted(pivot_owner)


def _combine(rows_a, vals_a, ca, rows_b, vals_b, cb):
    """ca*A + cb*B over sorted sparse columns, content divided out."""
    out_r, out_v = [], []
    i = j = 0
    la, lb = len(rows_a), len(rows_b)
    while i < la and j < lb:
        x, y = rows_a[i], rows_b[j]
        if x < y:
            out_r.append(x)
            out_v.append(ca * vals_a[i])
            i += 1
        elif x > y:
            out_r.append(y)
            out_v.append(cb * vals_b[j])
            j += 1
        else:
            v = ca * vals_a[i] + cb * vals_b[j]
            if v:
                out_r.append(x)
                out_v.append(v)
            i += 1
            j += 1
    while i < la:
        out_r.append(rows_a[i])
        out_v.append(ca * vals_a[i])
        i += 1
    while j < lb:
        out_r.append(rows_b[j])
        out_v.append(cb * vals_b[j])
        j += 1
    _normalize(out_r, out_v)
    return out_r, out_v


def _normalize(rows, vals):
    if not vals:
        return
    g = 0
    for v in vals:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for i in range(len(vals)):
            vals[i] //= g


def snf_eliminate(nrows, ncols, indptr, indices, data):
    """Unit-pivot sparse phase of Smith normal form.

    Eliminates +-1 pivots (minimum |value|) chosen by least Markowitz
    fill, with full Schur updates, until no +-1 entry remains.  Returns
    (unit_count, residual) where residual is the leftover matrix as a
    {(row, col): value} dict whose Smith form supplies the remaining
    invariant factors.
    """
    cols: dict[int, dict[int, int]] = {}
    rows: dict[int, dict[int, int]] = {}
    for j in range(ncols):
        for t in range(indptr[j], indptr[j + 1]):
            i = int(indices[t])
            v = int(data[t])
            if v:
                cols.setdefault(j, {})[i] = v
                rows.setdefault(i, {})[j] = v
    unit = 0
    while True:
        pivot = _pick_unit_pivot(rows, cols)
        if pivot is None:
            break
        r, c = pivot
        pv = rows[r][c]
        row_entries = [(j, v) for j, v in rows[r].items() if j != c]
        col_entries = [(i, v) for i, v in cols[c].items() if i != r]
        # detach pivot row and column
        for j, _ in row_entries:
            del cols[j][r]
            if not cols[j]:
                del cols[j]
        for i, _ in col_entries:
            del rows[i][c]
            if not rows[i]:
                del rows[i]
        del rows[r]
        del cols[c]
        for i, a in col_entries:
            q = a * pv  # pv in {1,-1}: a / pv == a * pv
            ri = rows.setdefault(i, {})
            for j, b in row_entries:
                nv = ri.get(j, 0) - q * b
                if nv:
                    ri[j] = nv
                    cols.setdefault(j, {})[i] = nv
                else:
                    if j in ri:
                        del ri[j]
                        del cols[j][i]
                        if not cols[j]:
                            del cols[j]
            if not ri:
                del rows[i]
        unit += 1
    residual = {}
    for i, row in rows.items():
        for j, v in row.items():
            residual[(i, j)] = v
    return unit, residual


def _pick_unit_pivot(rows, cols):
    best = None
    best_cost = None
    for i, row in rows.items():
        li = len(row)
        for j, v in row.items():
            if v == 1 or v == -1:
                cost = (li - 1) * (len(cols[j]) - 1)
                if cost == 0:
                    return (i, j)
                if best_cost is None or cost < best_cost:
                    best_cost = cost
                    best = (i, j)
    return best
