"""Equivalence of the compiled kernels and the pure-Python fallback."""

import random

import numpy as np
import pytest
from scipy import sparse

from indcomplex import _purekernels as pure
from indcomplex.backend import has_compiled
from indcomplex.complexes import build_complex
from indcomplex.families import build, parse_spec
from indcomplex.homology import smith_normal_form

from test_graphs import random_graph

pytestmark = pytest.mark.skipif(not has_compiled(),
                                reason="compiled backend unavailable")


def _compiled():
    from indcomplex import _kernels

    return _kernels


def test_backend_names():
    assert pure.BACKEND_NAME == "pure"
    assert _compiled().BACKEND_NAME == "compiled"


def test_enumerate_faces_identical():
    rng = random.Random(808)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 14), p=0.25)
        got = _compiled().enumerate_faces(list(g.nbr), 10**6)
        want = pure.enumerate_faces(list(g.nbr), 10**6)
        assert [list(map(int, f)) for f in got] == [list(map(int, f))
                                                    for f in want]


def test_enumerate_budget_errors_agree():
    g = random_graph(random.Random(1), 14, p=0.1)
    with pytest.raises(_compiled().BudgetError):
        _compiled().enumerate_faces(list(g.nbr), 5)
    with pytest.raises(pure.FaceBudgetExceeded):
        pure.enumerate_faces(list(g.nbr), 5)


def _boundary_args(mat):
    return (mat.shape[0], np.asarray(mat.indptr, dtype=np.int64),
            np.asarray(mat.indices, dtype=np.int64),
            np.asarray(mat.data, dtype=np.int64))


def _family_boundaries():
    mats = []
    for text in ["cycle:10", "grid:5x3", "grid:4x4", "x5:6"]:
        c = build_complex(build(parse_spec(text)))
        mats.extend(c.boundaries[s] for s in sorted(c.boundaries))
    return mats


def test_rank_kernels_agree():
    for mat in _family_boundaries():
        nrows, indptr, indices, data = _boundary_args(mat)
        rc, _ = _compiled().reduce_columns_int(nrows, indptr, indices, data)
        rp, _ = pure.reduce_columns_int(nrows, indptr, indices, data)
        assert rc == rp
        odd = mat.copy()
        odd.data = odd.data % 2
        odd.eliminate_zeros()
        gc, _ = _compiled().reduce_columns_gf2(
            odd.shape[0], np.asarray(odd.indptr, dtype=np.int64),
            np.asarray(odd.indices, dtype=np.int64))
        gp, _ = pure.reduce_columns_gf2(
            odd.shape[0], np.asarray(odd.indptr, dtype=np.int64),
            np.asarray(odd.indices, dtype=np.int64))
        assert gc == gp


def _full_factors(unit, residual):
    factors = [1] * unit
    if residual:
        rows = sorted({i for i, _ in residual})
        cols = sorted({j for _, j in residual})
        ri = {r: i for i, r in enumerate(rows)}
        ci = {c: j for j, c in enumerate(cols)}
        dense = [[0] * len(cols) for _ in rows]
        for (i, j), v in residual.items():
            dense[ri[i]][ci[j]] = int(v)
        factors.extend(smith_normal_form(dense))
    return sorted(factors)


def test_snf_elimination_invariant_factors_agree():
    # the two backends may pick different pivots and stop with different
    # unit counts; the completed invariant factors must still agree
    rng = random.Random(909)
    for _ in range(40):
        nr, nc = rng.randint(2, 10), rng.randint(2, 10)
        mat = [[rng.randint(-5, 5) if rng.random() < 0.35 else 0
                for _ in range(nc)] for _ in range(nr)]
        sp = sparse.csc_matrix(np.array(mat, dtype=np.int64))
        sp.eliminate_zeros()
        args = (nr, nc, np.asarray(sp.indptr, dtype=np.int64),
                np.asarray(sp.indices, dtype=np.int64),
                np.asarray(sp.data, dtype=np.int64))
        fc = _full_factors(*_compiled().snf_eliminate(*args))
        fp = _full_factors(*pure.snf_eliminate(*args))
        assert fc == fp == smith_normal_form(mat)


def test_int_rank_overflow_falls_back():
    # the elimination multiplies the two large entries: overflows int64
    mat = sparse.csc_matrix(np.array([[3, 2**61], [2**61, 3]],
                                     dtype=np.int64))
    with pytest.raises(OverflowError):
        _compiled().reduce_columns_int(*_boundary_args(mat)[:3],
                                       _boundary_args(mat)[3])
    from indcomplex.homology import rank_rational

    assert rank_rational(mat) == 2
