"""Finite simple graphs with deterministic vertex indexing.

Vertices are identified by opaque hashable labels; the label order fixes
the internal index order, so face enumeration and matrix layouts are
reproducible.  Adjacency is stored as one bitmask (arbitrary-width Python
int) per vertex, which makes subset tests and independence checks O(1).
All graphs are immutable values; every operation returns a new graph.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

Label = Hashable

_ISO_LIMIT = 12


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph: labels plus bitmask adjacency."""

    __slots__ = ("labels", "nbr", "_index")

    def __init__(self, labels: Sequence[Label], edges: Iterable[tuple[int, int]]):
        """Build from a label sequence and edges given as index pairs."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise GraphError("duplicate vertex labels")
        n = len(labels)
        nbr = [0] * n
        for i, j in edges:
            if i == j:
                raise GraphError("loop edge %r" % (labels[i],))
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError("edge index out of range")
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "nbr", tuple(nbr))
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(m.bit_count() for m in self.nbr) // 2

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError("unknown vertex label %r" % (label,)) from None

    def has_edge(self, a: Label, b: Label) -> bool:
        return bool(self.nbr[self.index(a)] >> self.index(b) & 1)

    def adjacency_sets(self) -> list[set[int]]:
        return [_bits(m) for m in self.nbr]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, m in enumerate(self.nbr):
            for j in _bits(m):
                if i < j:
                    out.append((i, j))
        return out

    def degree(self, label: Label) -> int:
        return self.nbr[self.index(label)].bit_count()

    def __eq__(self, other) -> bool:
        """Structural equality: same labels in the same order, same edges."""
        return (
            isinstance(other, Graph)
            and self.labels == other.labels
            and self.nbr == other.nbr
        )

    def __hash__(self):
        return hash((self.labels, self.nbr))

    def __repr__(self):
        return "Graph(order=%d, size=%d)" % (self.order, self.size)


def _bits(mask: int) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return out


def make_path(n: int) -> Graph:
    """Path P_n on vertices labeled 1..n."""
    if n < 1:
        raise GraphError("path needs n >= 1, got %d" % n)
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    """Cycle C_n on vertices labeled 1..n."""
    if n < 3:
        raise GraphError("cycle needs n >= 3, got %d" % n)
    return Graph(range(1, n + 1), [(i, (i + 1) % n) for i in range(n)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (a,b)~(c,d) iff a=c,b~d or b=d,a~c."""
    if g.order == 0 or h.order == 0:
        raise GraphError("cartesian product of an empty graph")
    labels = [(a, b) for a in g.labels for b in h.labels]
    m = h.order
    edges = []
    for ia in range(g.order):
        for ib in range(h.order):
            v = ia * m + ib
            for jb in _bits(h.nbr[ib]):
                if jb > ib:
                    edges.append((v, ia * m + jb))
            for ja in _bits(g.nbr[ia]):
                if ja > ia:
                    edges.append((v, ja * m + ib))
    return Graph(labels, edges)


def delete_vertices(g: Graph, drop: Iterable[Label]) -> Graph:
    """Induced subgraph on labels(g) minus drop; label order preserved."""
    drop_idx = {g.index(lab) for lab in drop}
    keep = [i for i in range(g.order) if i not in drop_idx]
    remap = {old: new for new, old in enumerate(keep)}
    labels = [g.labels[i] for i in keep]
    edges = []
    for i in keep:
        for j in _bits(g.nbr[i]):
            if j in remap and i < j:
                edges.append((remap[i], remap[j]))
    return Graph(labels, edges)


def induced_subgraph(g: Graph, keep_labels: Iterable[Label]) -> Graph:
    keep = set(keep_labels)
    return delete_vertices(g, [lab for lab in g.labels if lab not in keep])


def open_neighborhood(g: Graph, v: Label) -> set[Label]:
    return {g.labels[j] for j in _bits(g.nbr[g.index(v)])}


def closed_neighborhood(g: Graph, v: Label) -> set[Label]:
    out = open_neighborhood(g, v)
    out.add(v)
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union with side-tagged labels (0, lab) / (1, lab)."""
    labels = [(0, lab) for lab in g.labels] + [(1, lab) for lab in h.labels]
    edges = list(g.edges()) + [(g.order + i, g.order + j) for i, j in h.edges()]
    return Graph(labels, edges)


def connected_components(g: Graph) -> list[Graph]:
    """Components as induced subgraphs, ordered by least vertex index."""
    seen = [False] * g.order
    comps = []
    for start in range(g.order):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in _bits(g.nbr[u]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comp.sort()
        comps.append(induced_subgraph(g, [g.labels[i] for i in comp]))
    return comps


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test for graphs of at most 12 vertices."""
    if g.order > _ISO_LIMIT or h.order > _ISO_LIMIT:
        raise GraphError("isomorphism test limited to %d vertices" % _ISO_LIMIT)
    if g.order != h.order or g.size != h.size:
        return False
    dg = sorted(m.bit_count() for m in g.nbr)
    dh = sorted(m.bit_count() for m in h.nbr)
    if dg != dh:
        return False
    n = g.order
    gdeg = [m.bit_count() for m in g.nbr]
    hdeg = [m.bit_count() for m in h.nbr]

    def extend(mapping: list[int], used: int) -> bool:
        i = len(mapping)
        if i == n:
            return True
        for j in range(n):
            if used >> j & 1 or gdeg[i] != hdeg[j]:
                continue
            ok = True
            for k in range(i):
                if (g.nbr[i] >> k & 1) != (h.nbr[j] >> mapping[k] & 1):
                    ok = False
                    break
            if ok:
                mapping.append(j)
                if extend(mapping, used | 1 << j):
                    return True
                mapping.pop()
        return False

    return extend([], 0)


def check_invariants(g: Graph) -> None:
    """Assert adjacency symmetry, irreflexivity, and index bounds."""
    n = g.order
    for i, m in enumerate(g.nbr):
        assert m >> i & 1 == 0, "loop at %r" % (g.labels[i],)
        assert m < (1 << n), "adjacency index out of range"
        for j in _bits(m):
            assert g.nbr[j] >> i & 1, "asymmetric adjacency"


# --- text graph format -------------------------------------------------
#
# Line oriented:  p <order>  /  v <index> <label>  /  e <i> <j>
# with 1-based indices, i < j, labels free text without spaces.


def format_label(lab: Label) -> str:
    s = "".join(str(lab).split())
    if not s:
        raise GraphError("label %r has no text form" % (lab,))
    return s


def write_graph(g: Graph) -> str:
    lines = ["p %d" % g.order]
    for i, lab in enumerate(g.labels):
        lines.append("v %d %s" % (i + 1, format_label(lab)))
    for i, j in g.edges():
        lines.append("e %d %d" % (i + 1, j + 1))
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    order = None
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p" and len(parts) == 2:
            if order is not None:
                raise GraphError("duplicate p line")
            order = int(parts[1])
            labels = [""] * order
        elif parts[0] == "v" and len(parts) == 3:
            if order is None:
                raise GraphError("v line before p line")
            idx = int(parts[1])
            if not 1 <= idx <= order:
                raise GraphError("vertex index %d out of range" % idx)
            labels[idx - 1] = parts[2]
        elif parts[0] == "e" and len(parts) == 3:
            if order is None:
                raise GraphError("e line before p line")
            i, j = int(parts[1]), int(parts[2])
            if not (1 <= i < j <= order):
                raise GraphError("bad edge line %r" % line)
            edges.append((i - 1, j - 1))
        else:
            raise GraphError("unrecognized line %r" % line)
    if order is None:
        raise GraphError("missing p line")
    if any(lab == "" for lab in labels):
        raise GraphError("missing v line")
    return Graph(labels, edges)
