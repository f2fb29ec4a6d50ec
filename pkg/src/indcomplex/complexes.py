"""Independence complexes as face lists with signed boundary matrices.

Faces are stored as vertex bitmasks grouped by size (size s = dimension
s-1); within a size they are lexicographically sorted by their ascending
vertex tuples, which is exactly the order the depth-first enumeration
emits.  The reduced complex keeps the empty face at size 0, so the
augmentation map is the s=1 boundary.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from . import backend
from .backend import FaceBudgetExceeded
from .graphs import Graph

DEFAULT_FACE_BUDGET = 2 * 10**7


def independence_number_lower_bound(g: Graph) -> int:
    """Greedy (min-degree) independent set size; lower-bounds alpha(g)."""
    nbr = list(g.nbr)
    alive = (1 << g.order) - 1
    count = 0
    while alive:
        best, best_deg = -1, None
        m = alive
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (nbr[v] & alive).bit_count()
            if best_deg is None or deg < best_deg:
                best, best_deg = v, deg
        alive &= ~(nbr[best] | (1 << best))
        count += 1
    return count


def enumerate_faces(g: Graph, max_dim: int | None = None,
                    budget: int = DEFAULT_FACE_BUDGET):
    """Faces of I(g) grouped by size (bitmask arrays), empty face included.

    max_dim caps the stored dimension: faces of size <= max_dim+1.
    Raises FaceBudgetExceeded when more than `budget` faces would be stored.
    """
    max_size = -1 if max_dim is None else max_dim + 1
    faces = backend.enumerate_faces(list(g.nbr), g.order, budget, max_size)
    if g.order <= 64:
        return [np.asarray(f, dtype=np.uint64) for f in faces]
    return [list(f) for f in faces]


@dataclass
class ChainComplexData:
    """Per-size face lists plus sparse integer boundary matrices."""

    faces: list  # faces[s] = masks of the size-s faces
    boundaries: dict[int, sparse.csc_matrix] = field(default_factory=dict)
    reduced: bool = True

    @property
    def top_size(self) -> int:
        return len(self.faces) - 1

    def f_vector(self) -> list[int]:
        return [len(f) for f in self.faces]

    def boundary(self, s: int) -> sparse.csc_matrix:
        return self.boundaries[s]


def _boundary_numpy(prev_masks: np.ndarray, cur_masks: np.ndarray,
                    s: int) -> sparse.csc_matrix:
    """Signed boundary from size-s faces to size-(s-1) faces, s >= 2."""
    ncols = len(cur_masks)
    order = np.argsort(prev_masks, kind="stable")
    sorted_prev = prev_masks[order]
    rows = np.empty((s, ncols), dtype=np.int64)
    m = cur_masks.copy()
    zero = np.uint64(0)
    for t in range(s):
        low = m & (zero - m)
        fm = cur_masks ^ low
        pos = np.searchsorted(sorted_prev, fm)
        rows[t] = order[pos]
        m ^= low
    data = np.empty((s, ncols), dtype=np.int8)
    signs = [1 if t % 2 == 0 else -1 for t in range(s)]
    for t in range(s):
        data[t] = signs[t]
    cols = np.repeat(np.arange(ncols, dtype=np.int64)[None, :], s, axis=0)
    # entries are all +-1: int8 data (and scipy's automatic int32 indices)
    # keep the large complexes inside the memory budget
    mat = sparse.csc_matrix(
        (data.ravel(order="F"), (rows.ravel(order="F"), cols.ravel(order="F"))),
        shape=(len(prev_masks), ncols))
    mat.sum_duplicates()
    return mat


def _boundary_generic(prev_masks, cur_masks, s: int) -> sparse.csc_matrix:
    """Dict-lookup boundary builder for graphs over 64 vertices."""
    index = {m: i for i, m in enumerate(prev_masks)}
    rows, cols, data = [], [], []
    for j, mask in enumerate(cur_masks):
        m, t = int(mask), 0
        while m:
            low = m & -m
            rows.append(index[int(mask) ^ low])
            cols.append(j)
            data.append(1 if t % 2 == 0 else -1)
            m ^= low
            t += 1
    return sparse.csc_matrix((data, (rows, cols)),
                             shape=(len(prev_masks), len(cur_masks)),
                             dtype=np.int8)


def boundary_matrices(faces, reduced: bool = True) -> ChainComplexData:
    """Assemble the chain complex for enumerated faces.

    The column for a face [v0 < ... < vd] has entry (-1)^i at the row of
    the face omitting v_i.  When reduced, the s=1 matrix is the
    augmentation row of ones.
    """
    complex_data = ChainComplexData(faces=faces, reduced=reduced)
    numpy_path = bool(faces) and isinstance(faces[0], np.ndarray)
    for s in range(1, len(faces)):
        if s == 1:
            if reduced:
                n1 = len(faces[1])
                complex_data.boundaries[1] = sparse.csc_matrix(
                    np.ones((1, n1), dtype=np.int8))
            continue
        if numpy_path:
            complex_data.boundaries[s] = _boundary_numpy(
                np.asarray(faces[s - 1], dtype=np.uint64),
                np.asarray(faces[s], dtype=np.uint64), s)
        else:
            complex_data.boundaries[s] = _boundary_generic(
                faces[s - 1], faces[s], s)
    return complex_data


def build_complex(g: Graph, max_dim: int | None = None,
                  budget: int = DEFAULT_FACE_BUDGET,
                  reduced: bool = True) -> ChainComplexData:
    return boundary_matrices(enumerate_faces(g, max_dim, budget), reduced)


def f_vector(g: Graph, budget: int = DEFAULT_FACE_BUDGET) -> list[int]:
    """Face counts by size, f[0] = 1 for the empty face."""
    return [len(f) for f in enumerate_faces(g, None, budget)]


def euler_characteristic(g: Graph, reduced: bool = False,
                         budget: int = DEFAULT_FACE_BUDGET) -> int:
    """Alternating face-count sum; reduced subtracts the empty face."""
    f = f_vector(g, budget)
    chi = sum(f[s] if s % 2 else -f[s] for s in range(1, len(f)))
    return chi - 1 if reduced else chi


def graph_digest(g: Graph) -> str:
    from .graphs import write_graph

    return hashlib.sha256(write_graph(g).encode()).hexdigest()[:16]


def write_faces(g: Graph, faces) -> str:
    """Face-list dump: header `c <graph-hash>`, lines `f <dim> <v1> ...`."""
    lines = ["c %s" % graph_digest(g)]
    for s in range(len(faces)):
        for mask in faces[s]:
            m = int(mask)
            verts = []
            while m:
                low = m & -m
                verts.append(str(low.bit_length()))  # 1-based
                m ^= low
            lines.append("f %d %s" % (s - 1, " ".join(verts)) if verts
                         else "f -1")
    return "\n".join(lines) + "\n"


__all__ = [
    "ChainComplexData", "DEFAULT_FACE_BUDGET", "FaceBudgetExceeded",
    "boundary_matrices", "build_complex", "enumerate_faces",
    "euler_characteristic", "f_vector", "graph_digest",
    "independence_number_lower_bound", "write_faces",
]
