"""Kernel backend selection: compiled Cython extension when available.

The compiled kernels require vertex bitmasks that fit in 64 bits and
int64 coefficients; callers fall back to the pure implementation for
larger graphs or on integer overflow.  Set INDCOMPLEX_PURE=1 to force
the pure backend (used by the backend-equivalence tests and benchmark).
"""

from __future__ import annotations

import os

from . import _purekernels as pure
from ._purekernels import FaceBudgetExceeded

_compiled = None
if not os.environ.get("INDCOMPLEX_PURE"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND_NAME = "compiled" if _compiled is not None else "pure"


def has_compiled() -> bool:
    return _compiled is not None


def enumerate_faces(nbr, order, budget, max_size=-1):
    if _compiled is not None and order <= 64:
        try:
            return _compiled.enumerate_faces(nbr, budget, max_size)
        except _compiled.BudgetError as exc:
            raise FaceBudgetExceeded(budget) from exc
    return pure.enumerate_faces(nbr, budget, max_size)


def reduce_columns_gf2(nrows, indptr, indices, skip=None):
    if _compiled is not None:
        return _compiled.reduce_columns_gf2(nrows, indptr, indices, skip)
    return pure.reduce_columns_gf2(nrows, indptr, indices, skip)


def reduce_columns_int(nrows, indptr, indices, data, skip=None):
    """Rank over Q; raises OverflowError if int64 arithmetic overflows."""
    if _compiled is not None:
        return _compiled.reduce_columns_int(nrows, indptr, indices, data, skip)
    return pure.reduce_columns_int(nrows, indptr, indices, data, skip)


def snf_eliminate(nrows, ncols, indptr, indices, data):
    if _compiled is not None:
        return _compiled.snf_eliminate(nrows, ncols, indptr, indices, data)
    return pure.snf_eliminate(nrows, ncols, indptr, indices, data)
