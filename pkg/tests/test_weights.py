"""Weight systems, multiplicities, dimensions, duals."""

import pytest

from flagmult.roots import (
    ResourceLimitError,
    adjoint_weight,
    build_type,
    fundamental_weight,
    simple_reflection,
)
from flagmult.weights import dual_weight, lowest_weight, weight_system, weyl_dimension

from conftest import eps, eps_to_labels


def fw(rd, i):
    return fundamental_weight(rd, i)


def test_dimensions_match_stated_values():
    assert weyl_dimension(build_type("E", 6), fw(build_type("E", 6), 1)) == 27
    assert weyl_dimension(build_type("E", 7), fw(build_type("E", 7), 7)) == 56
    assert weyl_dimension(build_type("F", 4), fw(build_type("F", 4), 4)) == 26
    assert weyl_dimension(build_type("G", 2), fw(build_type("G", 2), 1)) == 7
    for l in range(3, 9):
        rd = build_type("B", l)
        assert weyl_dimension(rd, fw(rd, l)) == 2 ** l
    for l in range(4, 9):
        rd = build_type("D", l)
        assert weyl_dimension(rd, fw(rd, l)) == 2 ** (l - 1)
    for l in range(1, 9):
        rd = build_type("A", l)
        assert weyl_dimension(rd, fw(rd, 1)) == l + 1


def test_adjoint_dimension_equals_root_count():
    for family, ranks in [("A", range(1, 9)), ("B", range(2, 9)), ("C", range(2, 9)),
                          ("D", range(4, 9)), ("E", (6, 7, 8)), ("F", (4,)), ("G", (2,))]:
        for l in ranks:
            rd = build_type(family, l)
            assert weyl_dimension(rd, adjoint_weight(rd)) \
                == l + 2 * len(rd.positive_roots)


def test_adjoint_weight_system_is_roots_plus_zero():
    for family, rank in [("A", 3), ("C", 3), ("G", 2), ("E", 6)]:
        rd = build_type(family, rank)
        ws = weight_system(rd, adjoint_weight(rd))
        assert ws.multiplicity((0,) * rank) == rank
        nonzero = {w for w in ws.table if any(w)}
        assert len(nonzero) == 2 * len(rd.positive_roots)
        assert all(ws.table[w] == 1 for w in nonzero)


def test_spinor_weight_systems():
    b3 = build_type("B", 3)
    ws = weight_system(b3, fw(b3, 3))
    assert len(ws.table) == 8 and set(ws.table.values()) == {1}
    # all coordinates +-1/2 in the orthogonal model
    expected = set()
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                expected.add(eps_to_labels("B", 3, [s1 * 0.5, s2 * 0.5, s3 * 0.5]))
    assert set(ws.table) == expected


def test_half_spinor_weight_system_d5():
    d5 = build_type("D", 5)
    ws = weight_system(d5, fw(d5, 5))
    assert len(ws.table) == 16 and set(ws.table.values()) == {1}
    expected = set()
    for signs in range(32):
        s = [1 if signs >> k & 1 else -1 for k in range(5)]
        if s.count(-1) % 2 == 0:
            expected.add(eps_to_labels("D", 5, [v * 0.5 for v in s]))
    assert set(ws.table) == expected


def test_f4_26_support():
    from flagmult.roots import coords_to_labels, inner_product

    rf = build_type("F", 4)
    ws = weight_system(rf, fw(rf, 4))
    assert ws.dimension == 26
    assert ws.multiplicity((0, 0, 0, 0)) == 2
    # support is exactly the short roots (both signs) plus zero
    norms = {inner_product(rf, b, b, basis="root") for b in rf.positive_roots}
    short = min(norms)
    short_roots = {coords_to_labels(rf, b) for b in rf.positive_roots
                   if inner_product(rf, b, b, basis="root") == short}
    expected = {(0, 0, 0, 0)}
    expected |= short_roots
    expected |= {tuple(-x for x in w) for w in short_roots}
    assert set(ws.table) == expected and len(ws.table) == 25


def test_minuscule_multiplicity_one():
    cases = [("B", 5, 5), ("D", 6, 6), ("A", 6, 3), ("E", 6, 1), ("E", 7, 7)]
    for family, rank, i in cases:
        rd = build_type(family, rank)
        ws = weight_system(rd, fw(rd, i))
        assert set(ws.table.values()) == {1}


@pytest.mark.parametrize("family,rank,lam", [
    ("A", 2, (1, 1)), ("A", 3, (0, 2, 0)), ("B", 2, (1, 1)), ("C", 3, (1, 0, 1)),
    ("G", 2, (1, 1)), ("D", 4, (0, 1, 0, 0)),
])
def test_weight_table_invariants(family, rank, lam):
    rd = build_type(family, rank)
    ws = weight_system(rd, lam)
    assert ws.dimension == weyl_dimension(rd, lam)
    for w, m in ws.table.items():
        for i in range(1, rank + 1):
            assert ws.table[simple_reflection(rd, i, w)] == m


def test_dimension_cap():
    rd = build_type("A", 3)
    with pytest.raises(ResourceLimitError):
        weight_system(rd, (9, 9, 9), cap=1000)
    with pytest.raises(ValueError):
        weight_system(rd, (-1, 0, 0))


def test_dual_weights():
    for l in range(2, 9):
        rd = build_type("B", l)
        assert dual_weight(rd, fw(rd, l)) == fw(rd, l)
    for l in range(2, 9):
        rd = build_type("A", l)
        for p in range(1, l + 1):
            assert dual_weight(rd, fw(rd, p)) == fw(rd, l + 1 - p)
    d5 = build_type("D", 5)
    assert dual_weight(d5, fw(d5, 5)) == fw(d5, 4)
    d6 = build_type("D", 6)
    assert dual_weight(d6, fw(d6, 6)) == fw(d6, 6)
    e6 = build_type("E", 6)
    assert dual_weight(e6, fw(e6, 1)) == fw(e6, 6)


def test_dual_is_involution_and_mirrors_weights():
    for family, rank, lam in [("A", 3, (1, 2, 0)), ("D", 5, (0, 0, 0, 0, 1)),
                              ("E", 6, (1, 0, 0, 0, 0, 0))]:
        rd = build_type(family, rank)
        assert dual_weight(rd, dual_weight(rd, lam)) == lam
        t1 = weight_system(rd, lam).table
        t2 = weight_system(rd, dual_weight(rd, lam)).table
        assert t2 == {tuple(-x for x in w): m for w, m in t1.items()}


def test_lowest_weight():
    a1 = build_type("A", 1)
    assert lowest_weight(a1, (1,)) == (-1,)
    e6 = build_type("E", 6)
    assert lowest_weight(e6, fw(e6, 1)) == tuple(-x for x in fw(e6, 6))
    # stated lowest weight of the 27: eps6 + zeta/2
    from fractions import Fraction
    low = eps_to_labels("E", 6, eps(6, (6, 1)), Fraction(1, 2))
    assert low == lowest_weight(e6, fw(e6, 1))
    assert low in weight_system(e6, fw(e6, 1)).table
    d5 = build_type("D", 5)
    assert lowest_weight(d5, fw(d5, 5)) == tuple(-x for x in fw(d5, 4))


def test_weight_system_sum_rule_many():
    for family, rank in [("A", 4), ("B", 3), ("C", 4), ("D", 5), ("F", 4), ("G", 2)]:
        rd = build_type(family, rank)
        for i in range(1, rank + 1):
            lam = fw(rd, i)
            if weyl_dimension(rd, lam) <= 10_000:
                ws = weight_system(rd, lam)
                assert ws.dimension == weyl_dimension(rd, lam)
