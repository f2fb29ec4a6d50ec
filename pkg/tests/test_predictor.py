"""Closed-form descriptors: values, algebra, and recursion identities."""

import pytest

from indcomplex.families import parse_spec
from indcomplex.predictor import (
    UnsupportedFamilyError,
    WedgeDescriptor,
    descriptor_euler,
    descriptor_homology,
    predict,
    predict_A,
    predict_A_minus_v,
    predict_cycle,
    predict_grid4,
    predict_grid5,
    predict_path,
    predict_x4,
)


def test_descriptor_algebra():
    pt = WedgeDescriptor.point()
    assert pt.is_point and pt.suspend().is_point
    s1 = WedgeDescriptor.sphere(1)
    assert s1.suspend(2) == WedgeDescriptor.sphere(3)
    w = s1.merge(WedgeDescriptor.sphere(1)).merge(WedgeDescriptor.sphere(3))
    assert w.counts() == {1: 2, 3: 1}
    assert str(w) == "2*S^1 v S^3"
    assert str(pt) == "point"
    assert WedgeDescriptor.from_json(w.to_json()) == w
    assert WedgeDescriptor.from_json(pt.to_json()) == pt


def test_descriptor_homology_and_euler():
    w = WedgeDescriptor.wedge({0: 1, 2: 3})
    assert descriptor_homology(w).betti == {0: 1, 2: 3}
    assert descriptor_euler(w, reduced=True) == 4
    assert descriptor_euler(w) == 5
    assert descriptor_euler(WedgeDescriptor.point()) == 1


def test_path_and_cycle_values():
    # period-3 pattern for paths; doubled top sphere for divisible cycles
    want_paths = {1: {}, 2: {0: 1}, 3: {0: 1}, 4: {}, 5: {1: 1}, 6: {1: 1},
                  7: {}, 8: {2: 1}, 9: {2: 1}}
    for n, counts in want_paths.items():
        assert predict_path(n).counts() == counts
    want_cycles = {3: {0: 2}, 4: {0: 1}, 5: {1: 1}, 6: {1: 2}, 7: {1: 1},
                   8: {2: 1}, 9: {2: 2}}
    for n, counts in want_cycles.items():
        assert predict_cycle(n).counts() == counts


def test_four_row_values():
    # one sphere of dimension n-1, multiplicity stepping with period 6
    want = {1: {}, 2: {1: 1}, 3: {2: 1}, 4: {3: 2}, 5: {4: 1},
            6: {5: 3}, 7: {6: 2}, 8: {7: 3}, 10: {9: 4}}
    for n, counts in want.items():
        assert predict_grid4(n).counts() == counts


def test_five_row_values():
    assert predict_grid5(1).counts() == {1: 1}
    assert predict_grid5(4).counts() == {4: 1}
    assert predict_grid5(5).counts() == {5: 1}
    assert predict_grid5(9).counts() == {10: 1}
    assert predict_grid5(2).counts() == {2: 1}
    assert predict_grid5(3).counts() == {3: 1}
    assert predict_grid5(6).counts() == {7: 1}
    assert predict_grid5(7).counts() == {8: 1}


def test_five_row_euler_bound():
    for n in range(1, 2001):
        chi = descriptor_euler(predict_grid5(n))
        assert chi % 2 == 0 and abs(chi) <= 4


def test_four_row_euler_unbounded():
    assert any(abs(descriptor_euler(predict_grid4(n))) > 100
               for n in range(1, 1001))


def test_block_family_recursions():
    # 5-row grids against the block family at k = 0 / odd-n suspension
    for n in range(6, 201):
        want = predict_grid5(n)
        if n % 2 == 0:
            assert predict_A(n, 0) == want
        else:
            assert predict_A(n - 5, 1).suspend() == want
    # 4-row recursion and period-6 law
    for n in range(3, 101):
        got = predict_x4(n - 1).suspend().merge(predict_grid4(n - 2).suspend(2))
        assert got == predict_grid4(n)
    for n in range(7, 101):
        got = WedgeDescriptor.sphere(n - 1, 2).merge(
            predict_grid4(n - 6).suspend(6))
        assert got == predict_grid4(n)
    # vertex-deletion recursion for the block family, even n
    for n in range(12, 41, 2):
        for k in range(3):
            got = predict_A_minus_v(n, k).merge(
                predict_A(n - 10, k + 2).suspend(2))
            assert got == predict_A(n, k)


def test_predict_dispatch_and_errors():
    assert predict(parse_spec("grid:9x5")) == WedgeDescriptor.sphere(10)
    assert predict(parse_spec("grid:5x9")) == WedgeDescriptor.sphere(10)
    assert predict(parse_spec("b:1")) == WedgeDescriptor.sphere(4)
    assert predict(parse_spec("bp:1")) == WedgeDescriptor.sphere(0)
    assert predict(parse_spec("a-v:3,0")).is_point
    with pytest.raises(UnsupportedFamilyError):
        predict(parse_spec("grid:6x6"))
