"""Homotopy-preserving graph reductions with a replayable trace.

Three moves, each leaving the homotopy type of the independence complex
fixed up to recorded suspensions:

* fold: if N(v) is contained in N(w) with v != w, delete w;
* isolated vertex: the complex is a cone, hence contractible;
* K_2 component: splitting it off suspends the complex once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graphs import (
    Graph,
    Label,
    connected_components,
    delete_vertices,
    format_label,
)


@dataclass(frozen=True)
class Fold:
    kept: Label
    removed: Label


@dataclass(frozen=True)
class IsolatedVertex:
    vertex: Label


@dataclass(frozen=True)
class SuspensionExtract:
    edge: tuple[Label, Label]


Event = Union[Fold, IsolatedVertex, SuspensionExtract]


@dataclass
class ReductionTrace:
    """Result of reduce(): I(g) ~ S^shift I(kernel), or contractible."""

    events: list[Event] = field(default_factory=list)
    kernel: Optional[Graph] = None
    shift: int = 0
    contractible: bool = False


def find_fold(g: Graph) -> Optional[tuple[Label, Label]]:
    """Least (v, w) with N(v) subset of N(w); w is the vertex to remove.

    Scan order: w ascending by index, then v ascending.
    """
    for w in range(g.order):
        nw = g.nbr[w]
        for v in range(g.order):
            if v != w and g.nbr[v] & ~nw == 0:
                return g.labels[v], g.labels[w]
    return None


def _find_fold_indices(nbr: list[int]) -> Optional[tuple[int, int]]:
    for w in range(len(nbr)):
        nw = nbr[w]
        for v in range(len(nbr)):
            if v != w and nbr[v] & ~nw == 0:
                return v, w
    return None


def reduce(g: Graph) -> ReductionTrace:
    """Reduce to a fold-free, K_2-free kernel, or detect contractibility.

    Loop: stop contractible on an isolated vertex; otherwise apply the
    least fold; otherwise split off every K_2 component as a suspension.
    Each step removes at least one vertex, so this terminates.
    """
    trace = ReductionTrace()
    labels = list(g.labels)
    nbr = list(g.nbr)
    while True:
        n = len(labels)
        iso = next((i for i in range(n) if nbr[i] == 0), None)
        if iso is not None:
            trace.events.append(IsolatedVertex(labels[iso]))
            trace.contractible = True
            trace.kernel = None
            return trace
        pair = _find_fold_indices(nbr)
        if pair is not None:
            v, w = pair
            trace.events.append(Fold(labels[v], labels[w]))
            labels, nbr = _drop(labels, nbr, {w})
            continue
        dropped = set()
        for comp in _components(nbr):
            if len(comp) == 2:
                a, b = sorted(comp)
                trace.events.append(SuspensionExtract((labels[a], labels[b])))
                trace.shift += 1
                dropped.update(comp)
        if dropped:
            labels, nbr = _drop(labels, nbr, dropped)
            continue
        trace.kernel = _graph_from(labels, nbr)
        return trace


def _drop(labels, nbr, dropped: set[int]):
    keep = [i for i in range(len(labels)) if i not in dropped]
    remap = {old: new for new, old in enumerate(keep)}
    new_labels = [labels[i] for i in keep]
    new_nbr = []
    for i in keep:
        m, out = nbr[i], 0
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            if j in remap:
                out |= 1 << remap[j]
        new_nbr.append(out)
    return new_labels, new_nbr


def _components(nbr: list[int]) -> list[list[int]]:
    n = len(nbr)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            m = nbr[u]
            while m:
                low = m & -m
                j = low.bit_length() - 1
                m ^= low
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(comp)
    return comps


def _graph_from(labels, nbr) -> Graph:
    edges = []
    for i, m in enumerate(nbr):
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            if i < j:
                edges.append((i, j))
    return Graph(labels, edges)


def verify_trace(g: Graph, trace: ReductionTrace) -> bool:
    """Replay every event against the evolving graph, checking preconditions."""
    labels = list(g.labels)
    nbr = list(g.nbr)
    shift = 0
    for ev in trace.events:
        index = {lab: i for i, lab in enumerate(labels)}
        if isinstance(ev, Fold):
            if ev.kept not in index or ev.removed not in index:
                return False
            v, w = index[ev.kept], index[ev.removed]
            if v == w or nbr[v] & ~nbr[w]:
                return False
            labels, nbr = _drop(labels, nbr, {w})
        elif isinstance(ev, IsolatedVertex):
            if ev.vertex not in index or nbr[index[ev.vertex]] != 0:
                return False
        elif isinstance(ev, SuspensionExtract):
            a, b = ev.edge
            if a not in index or b not in index:
                return False
            ia, ib = index[a], index[b]
            if nbr[ia] != 1 << ib or nbr[ib] != 1 << ia:
                return False
            labels, nbr = _drop(labels, nbr, {ia, ib})
            shift += 1
        else:
            return False
    if trace.contractible:
        return any(isinstance(ev, IsolatedVertex) for ev in trace.events)
    if shift != trace.shift or trace.kernel is None:
        return False
    return _graph_from(labels, nbr) == trace.kernel


# --- trace serialization ------------------------------------------------
#
# Header `k <shift> <contractible>`, then one event per line:
# `F <kept> <removed>` / `I <v>` / `S <u> <w>` (labels as free text).


def write_trace(trace: ReductionTrace) -> str:
    lines = ["k %d %d" % (trace.shift, int(trace.contractible))]
    for ev in trace.events:
        if isinstance(ev, Fold):
            lines.append("F %s %s" % (format_label(ev.kept), format_label(ev.removed)))
        elif isinstance(ev, IsolatedVertex):
            lines.append("I %s" % format_label(ev.vertex))
        else:
            a, b = ev.edge
            lines.append("S %s %s" % (format_label(a), format_label(b)))
    return "\n".join(lines) + "\n"
