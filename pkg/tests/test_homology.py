"""Smith normal form, field ranks, and the homology pipeline."""

import random
from itertools import combinations
from math import gcd

import numpy as np
import pytest
from scipy import sparse

from indcomplex.complexes import build_complex
from indcomplex.families import make_grid
from indcomplex.graphs import Graph, make_cycle, make_path
from indcomplex.homology import (
    HomologyProfile,
    _snf_sparse,
    homology_of_graph,
    homology_profile,
    rank_mod2,
    rank_rational,
    smith_normal_form,
)


def det(mat):
    """Exact integer determinant by cofactor expansion (small matrices)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        if mat[0][j]:
            minor = [[row[t] for t in range(n) if t != j] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * det(minor)
    return total


def minor_gcds(mat):
    """g_k = gcd of all k-by-k minors, for k = 1..min(nrows, ncols)."""
    nr, nc = len(mat), len(mat[0])
    out = []
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rows in combinations(range(nr), k):
            for cols in combinations(range(nc), k):
                sub = [[mat[i][j] for j in cols] for i in rows]
                g = gcd(g, det(sub))
        out.append(g)
    return out


def test_snf_textbook_example():
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form(np.diag([6, 4, 10])) == [2, 2, 60]


def test_snf_against_minor_gcd_oracle():
    # d_1 * ... * d_k equals the gcd of all k-by-k minors
    rng = random.Random(1009)
    for _ in range(100):
        mat = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        factors = smith_normal_form(mat)
        gcds = minor_gcds(mat)
        prod = 1
        for k, d in enumerate(factors):
            prod *= d
            assert gcds[k] == prod
        for k in range(len(factors), 4):
            assert gcds[k] == 0


def test_snf_divisibility_chain():
    rng = random.Random(2011)
    for _ in range(100):
        mat = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        factors = smith_normal_form(mat)
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert all(d > 0 for d in factors)


def test_sparse_snf_matches_dense():
    rng = random.Random(3001)
    for _ in range(50):
        nr, nc = rng.randint(2, 12), rng.randint(2, 12)
        mat = [[rng.randint(-4, 4) if rng.random() < 0.3 else 0
                for _ in range(nc)] for _ in range(nr)]
        dense = smith_normal_form(mat)
        sp = _snf_sparse(sparse.csc_matrix(np.array(mat, dtype=np.int64)))
        assert sorted(sp) == sorted(dense)


def test_field_ranks_known_matrices():
    mat = [[2, 0], [0, 3]]
    assert rank_rational(mat) == 2
    assert rank_mod2(mat) == 1  # the even entry vanishes mod 2
    assert rank_rational([[0, 0], [0, 0]]) == 0
    rng = random.Random(404)
    for _ in range(30):
        m = np.array([[rng.randint(-5, 5) for _ in range(6)]
                      for _ in range(6)])
        assert rank_rational(m) == np.linalg.matrix_rank(m.astype(float))
        assert rank_mod2(m) <= rank_rational(m)


def test_known_homology_values():
    k2 = Graph([1, 2], [(0, 1)])
    profile, _ = homology_of_graph(k2, reduce_first=False)
    assert profile.betti == {0: 1}

    profile, _ = homology_of_graph(make_cycle(6), reduce_first=False)
    assert profile.betti == {1: 2} and not profile.torsion

    profile, _ = homology_of_graph(make_grid(4, 4))
    assert profile.betti == {3: 2}

    profile, _ = homology_of_graph(make_grid(5, 5))
    assert profile.betti == {5: 1}

    # contractible cases
    for g in [make_path(4), Graph([1], [])]:
        profile, _ = homology_of_graph(g, reduce_first=False)
        assert profile.betti == {}


def test_empty_graph_gives_empty_complex():
    profile, _ = homology_of_graph(Graph([], []), reduce_first=False)
    assert profile.betti == {-1: 1}


def test_methods_agree():
    for g in [make_cycle(9), make_grid(4, 4), make_grid(6, 3)]:
        c = build_complex(g)
        snf, how1 = homology_profile(c, method="snf")
        two, how2 = homology_profile(c, method="two-field")
        assert how1 == "full-SNF" and how2 == "two-field-rank"
        assert snf.betti == two.betti
        assert not any(snf.torsion.values())
        assert two.free_certified


def test_field_coefficients():
    c = build_complex(make_cycle(6))
    z2, _ = homology_profile(c, coeff="z2")
    q, _ = homology_profile(c, coeff="q")
    assert z2.betti == q.betti == {1: 2}
    with pytest.raises(ValueError):
        homology_profile(c, coeff="z3")


def test_reduce_first_shifts_degrees():
    g = make_grid(8, 4)
    direct, how = homology_of_graph(g, reduce_first=False)
    reduced, how2 = homology_of_graph(g, reduce_first=True)
    assert how2.startswith("reduce-first")
    assert direct.same_groups(reduced)


def test_profile_json_round_trip():
    p = HomologyProfile(coeff="z", betti={3: 2, 5: 1}, torsion={2: [2, 4]})
    q = HomologyProfile.from_json(p.to_json())
    assert q.betti == p.betti and q.torsion == p.torsion
    assert p.euler() == -2 + -1
    assert p.shifted(2).betti == {5: 2, 7: 1}


def test_euler_poincare_on_computed_instances():
    from indcomplex.complexes import euler_characteristic

    rng = random.Random(515)
    graphs = [make_cycle(n) for n in range(3, 10)]
    graphs += [make_grid(n, 3) for n in range(1, 7)]
    from test_graphs import random_graph

    graphs += [random_graph(rng, rng.randint(1, 10)) for _ in range(20)]
    for g in graphs:
        profile, _ = homology_of_graph(g, reduce_first=False, check=True)
        assert profile.euler() == euler_characteristic(g, reduced=True)
