"""Fold/suspension reduction: homotopy invariance and trace replay."""

import random
from dataclasses import replace

from indcomplex.graphs import Graph, disjoint_union, make_cycle, make_path
from indcomplex.homology import homology_of_graph
from indcomplex.reduction import (
    Fold,
    IsolatedVertex,
    SuspensionExtract,
    find_fold,
    reduce,
    verify_trace,
    write_trace,
)

from test_graphs import random_graph


def direct_profile(g):
    profile, _ = homology_of_graph(g, reduce_first=False)
    return profile


def reduced_profile(g):
    profile, _ = homology_of_graph(g, reduce_first=True)
    return profile


def test_isolated_vertex_contractible():
    g = Graph([1, 2, 3], [(1, 2)])
    trace = reduce(g)
    assert trace.contractible and trace.kernel is None
    assert any(isinstance(ev, IsolatedVertex) for ev in trace.events)
    assert reduced_profile(g).betti == {}


def test_fold_detection():
    # in a path, the endpoint's neighborhood is inside its neighbor's
    p = make_path(4)
    pair = find_fold(p)
    assert pair is not None
    v, w = pair
    assert p.nbr[p.index(v)] & ~p.nbr[p.index(w)] == 0


def test_k2_extraction_suspends():
    trace = reduce(Graph([1, 2], [(0, 1)]))
    assert trace.shift == 1 and trace.kernel.order == 0
    assert not trace.contractible


def test_fold_invariance_on_random_graphs():
    # homology computed after reduction (with degree shift) must equal
    # homology computed by direct enumeration
    rng = random.Random(3517)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 12), p=0.3)
        assert direct_profile(g).same_groups(reduced_profile(g))


def test_suspension_law_on_random_graphs():
    # adding a detached edge suspends: homology shifts up one degree
    rng = random.Random(9241)
    k2 = Graph([1, 2], [(0, 1)])
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), p=0.3)
        base = direct_profile(g)
        susp = direct_profile(disjoint_union(g, k2))
        assert susp.same_groups(base.shifted(1))


def test_traces_replay_on_random_graphs():
    rng = random.Random(4242)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), p=0.3)
        trace = reduce(g)
        assert verify_trace(g, trace)


def test_forged_traces_rejected():
    g = make_cycle(9)
    trace = reduce(g)
    assert verify_trace(g, trace)
    assert not verify_trace(g, replace(trace, shift=trace.shift + 1))
    assert not verify_trace(g, replace(trace, kernel=make_path(2)))
    bogus = replace(trace, events=[Fold(1, 3)] + trace.events)
    assert not verify_trace(g, bogus)  # 1 and 3 are not adjacent-dominated
    bogus = replace(trace, events=[SuspensionExtract((1, 2))] + trace.events)
    assert not verify_trace(g, bogus)  # the edge 1-2 is not a component
    contr = replace(trace, contractible=True, kernel=None)
    assert not verify_trace(g, contr)  # no isolated-vertex event recorded


def test_write_trace_format():
    text = write_trace(reduce(make_path(6)))
    lines = text.strip().splitlines()
    assert lines[0].startswith("k ")
    assert all(line[0] in "FIS" for line in lines[1:])


def test_grid_kernels_shrink():
    from indcomplex.families import make_grid

    trace = reduce(make_grid(8, 4))
    assert not trace.contractible
    assert trace.kernel.order < 32
    assert verify_trace(make_grid(8, 4), trace)
