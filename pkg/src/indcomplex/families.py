"""Constructors for the named grid-graph families.

Grids use coordinate labels (x, y) with 1-based coordinates, ordered
lexicographically (column-major).  The thinned-column variants X/Y exist
for 3, 4 and 5 rows; the A/B families extend the 5-row grid by repeating
15-vertex blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, delete_vertices, induced_subgraph

KINDS = (
    "path", "cycle", "grid",
    "x3", "y3", "x4", "y4", "x5", "y5",
    "a", "a-v", "b", "bp",
)


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic descriptor of a graph family instance.

    n is the main length parameter (unused for b/bp); k is the block
    count for a/a-v/b/bp and the row count for grid.
    """

    kind: str
    n: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError("unknown family kind %r" % self.kind)
        ok = {
            "path": self.n >= 1,
            "cycle": self.n >= 3,
            "grid": self.n >= 1 and self.k >= 1,
            "x3": self.n >= 1, "y3": self.n >= 1,
            "x4": self.n >= 1, "y4": self.n >= 1,
            "x5": self.n >= 1, "y5": self.n >= 1,
            "a": self.n >= 1 and self.k >= 0,
            "a-v": self.n >= 3 and self.k >= 0,
            "b": self.k >= 1,
            "bp": self.k >= 1,
        }[self.kind]
        if not ok:
            raise GraphError("parameters out of range for %s: n=%d k=%d"
                             % (self.kind, self.n, self.k))

    def __str__(self):
        if self.kind == "grid":
            return "grid:%dx%d" % (self.n, self.k)
        if self.kind in ("a", "a-v"):
            return "%s:%d,%d" % (self.kind, self.n, self.k)
        if self.kind in ("b", "bp"):
            return "%s:%d" % (self.kind, self.k)
        return "%s:%d" % (self.kind, self.n)


def parse_spec(text: str) -> FamilySpec:
    """Parse CLI syntax: grid:NxK, path:N, cycle:N, x3:N, ..., a:N,K, b:K."""
    try:
        kind, _, arg = text.partition(":")
        kind = kind.lower()
        if kind == "grid":
            a, _, b = arg.partition("x")
            return FamilySpec("grid", int(a), int(b))
        if kind in ("a", "a-v"):
            a, _, b = arg.partition(",")
            return FamilySpec(kind, int(a), int(b))
        if kind in ("b", "bp"):
            return FamilySpec(kind, 0, int(arg))
        return FamilySpec(kind, int(arg))
    except (ValueError, TypeError) as exc:
        raise GraphError("cannot parse family spec %r: %s" % (text, exc)) from None


def make_grid(n: int, k: int) -> Graph:
    """n-by-k grid: vertices (x,y), 1<=x<=n, 1<=y<=k, L1-distance-1 edges."""
    if n < 1 or k < 1:
        raise GraphError("grid needs n,k >= 1, got %dx%d" % (n, k))
    labels = [(x, y) for x in range(1, n + 1) for y in range(1, k + 1)]
    edges = []
    for x in range(1, n + 1):
        for y in range(1, k + 1):
            v = (x - 1) * k + (y - 1)
            if y < k:
                edges.append((v, v + 1))
            if x < n:
                edges.append((v, v + k))
    return Graph(labels, edges)


_XY_DROPS = {
    (3, "x"): lambda n: [(n, 2)],
    (3, "y"): lambda n: [(n, 1), (n, 3)],
    (4, "x"): lambda n: [(n, 2), (n, 3)],
    (4, "y"): lambda n: [(n, 1), (n, 4)],
    (5, "x"): lambda n: [(n, 2), (n, 4)],
    (5, "y"): lambda n: [(n, 1), (n, 3), (n, 5)],
}


def make_XY(rows: int, which: str, n: int) -> Graph:
    """Grid with `rows` rows and a thinned last column (the X/Y variants)."""
    which = which.lower()
    if (rows, which) not in _XY_DROPS:
        raise GraphError("no X/Y variant for rows=%r which=%r" % (rows, which))
    if n < 1:
        raise GraphError("X/Y variant needs n >= 1")
    return delete_vertices(make_grid(n, rows), _XY_DROPS[(rows, which)](n))


def _a_vertices(n: int, k: int) -> list[tuple[int, int]]:
    verts = [(x, y) for x in range(1, n + 1) for y in range(1, 6)]
    for block in range(k):
        m = n + 5 * block  # column offset of this block
        verts += [(m + 1, 2), (m + 1, 4), (m + 2, 2), (m + 2, 4)]
        verts += [(c, 1) for c in range(m + 2, m + 6)]
        verts += [(c, 5) for c in range(m + 2, m + 6)]
        verts += [(m + 5, 2), (m + 5, 3), (m + 5, 4)]
    return verts


def make_A(n: int, k: int) -> Graph:
    """Block-extended 5-row grid: 5-row grid of length n plus k blocks.

    Each block adds 15 vertices following the repeating motif: columns
    m+1, m+2 at rows 2 and 4; columns m+2..m+5 at rows 1 and 5; column
    m+5 at rows 2, 3, 4 (m = n + 5*previous blocks).  The result is the
    induced subgraph of the (n+5k)-by-5 grid on those vertices.
    """
    if n < 1 or k < 0:
        raise GraphError("A family needs n >= 1, k >= 0")
    keep = set(_a_vertices(n, k))
    full = make_grid(n + 5 * k, 5)
    return induced_subgraph(full, keep)


def make_A_minus_v(n: int, k: int) -> Graph:
    """make_A(n, k) with the distinguished vertex (n-2, 3) removed."""
    if n < 3:
        raise GraphError("A-v needs n >= 3 so the vertex (n-2,3) exists")
    return delete_vertices(make_A(n, k), [(n - 2, 3)])


def make_B(k: int) -> Graph:
    """The k-block tail of the A family (labels normalized to n = 1)."""
    if k < 1:
        raise GraphError("B family needs k >= 1")
    a = make_A(1, k)
    return delete_vertices(a, [(1, y) for y in range(1, 6)])


def make_B_prime(k: int) -> Graph:
    """B_k restricted past column 6, keeping (6, 2..4) (normalized n = 1)."""
    if k < 1:
        raise GraphError("B' family needs k >= 1")
    b = make_B(k)
    keep = {lab for lab in b.labels if lab[0] > 6} | {(6, 2), (6, 3), (6, 4)}
    return induced_subgraph(b, keep)


def build(spec: FamilySpec) -> Graph:
    """Materialize a FamilySpec as a Graph."""
    from .graphs import make_cycle, make_path

    kind = spec.kind
    if kind == "path":
        return make_path(spec.n)
    if kind == "cycle":
        return make_cycle(spec.n)
    if kind == "grid":
        return make_grid(spec.n, spec.k)
    if kind in ("x3", "y3", "x4", "y4", "x5", "y5"):
        return make_XY(int(kind[1]), kind[0], spec.n)
    if kind == "a":
        return make_A(spec.n, spec.k)
    if kind == "a-v":
        return make_A_minus_v(spec.n, spec.k)
    if kind == "b":
        return make_B(spec.k)
    if kind == "bp":
        return make_B_prime(spec.k)
    raise GraphError("unknown family kind %r" % kind)
