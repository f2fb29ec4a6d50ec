"""Face enumeration, boundary matrices, and Euler characteristics."""

import random

import numpy as np
import pytest

from indcomplex.complexes import (
    FaceBudgetExceeded,
    boundary_matrices,
    build_complex,
    enumerate_faces,
    euler_characteristic,
    f_vector,
)
from indcomplex.graphs import Graph, disjoint_union, make_cycle, make_path

from test_graphs import random_graph


def brute_force_f_vector(g):
    """Count independent sets by checking all 2^n subsets."""
    n = g.order
    counts = [0] * (n + 2)
    for mask in range(1 << n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if g.nbr[v] & mask:
                ok = False
                break
        if ok:
            counts[mask.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def test_f_vector_against_subset_oracle():
    rng = random.Random(2024)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10))
        assert f_vector(g) == brute_force_f_vector(g)


def test_faces_sorted_lexicographically():
    g = make_cycle(9)
    faces = enumerate_faces(g)
    assert [int(m) for m in faces[0]] == [0]
    for s in range(1, len(faces)):
        tuples = [tuple(i for i in range(g.order) if int(m) >> i & 1)
                  for m in faces[s]]
        assert all(len(t) == s for t in tuples)
        assert tuples == sorted(tuples)


def test_max_dim_caps_face_size():
    g = make_path(9)
    faces = enumerate_faces(g, max_dim=1)
    assert len(faces) == 3  # sizes 0, 1, 2 only
    assert f_vector(g)[:3] == [len(f) for f in faces]


def test_budget_enforced():
    with pytest.raises(FaceBudgetExceeded):
        enumerate_faces(Graph(range(25), []), budget=1000)


def test_boundary_squares_to_zero():
    rng = random.Random(5)
    graphs = [random_graph(rng, rng.randint(2, 11)) for _ in range(20)]
    graphs += [make_cycle(8), make_path(10)]
    for g in graphs:
        c = build_complex(g)
        for s in range(2, c.top_size + 1):
            prod = c.boundaries[s - 1] @ c.boundaries[s]
            assert prod.nnz == 0 or not np.any(prod.data)


def test_boundary_shapes_and_augmentation():
    c = build_complex(make_cycle(6))
    f = c.f_vector()
    assert c.boundaries[1].shape == (1, f[1])
    assert (c.boundaries[1].toarray() == 1).all()
    for s in range(2, c.top_size + 1):
        assert c.boundaries[s].shape == (f[s - 1], f[s])
        # each column has s entries with signs summing to s mod 2
        col_counts = np.diff(c.boundaries[s].indptr)
        assert (col_counts == s).all()


def test_unreduced_complex_has_no_augmentation():
    c = build_complex(make_path(4), reduced=False)
    assert 1 not in c.boundaries
    assert boundary_matrices(enumerate_faces(make_path(4)),
                             reduced=True).boundaries[1].shape[0] == 1


def test_euler_characteristic_identities():
    rng = random.Random(6)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 10))
        f = brute_force_f_vector(g)
        chi = sum(f[s] if s % 2 else -f[s] for s in range(1, len(f)))
        assert euler_characteristic(g) == chi
        assert euler_characteristic(g, reduced=True) == chi - 1


def test_join_f_vector_convolution():
    # I(G + H) for a disjoint union is the join of the two complexes,
    # so its f-vector is the convolution of the factors' f-vectors
    rng = random.Random(77)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 7))
        h = random_graph(rng, rng.randint(1, 7))
        fg, fh = f_vector(g), f_vector(h)
        fu = f_vector(disjoint_union(g, h))
        conv = [0] * (len(fg) + len(fh) - 1)
        for i, a in enumerate(fg):
            for j, b in enumerate(fh):
                conv[i + j] += a * b
        assert fu == conv
