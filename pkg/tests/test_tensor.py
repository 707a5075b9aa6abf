"""Tensor decomposition: the reflection procedure against the brute-force
character oracle, and the cited reference decompositions."""

import pytest

from flagmult.roots import (
    ResourceLimitError,
    adjoint_weight,
    build_type,
    fundamental_weight,
)
from flagmult.tensor import character_product_oracle, dual_tensor_adjoint, klimyk
from flagmult.weights import dual_weight, weyl_dimension


def fw(rd, i):
    return fundamental_weight(rd, i)


def w(rd, **kw):
    out = [0] * rd.rank
    for key, v in kw.items():
        out[int(key[1:]) - 1] = v
    return tuple(out)


def test_a1_taut_times_adjoint():
    rd = build_type("A", 1)
    assert klimyk(rd, (1,), (2,)).summands == {(3,): 1, (1,): 1}


def test_oracle_small_cases():
    a2 = build_type("A", 2)
    assert character_product_oracle(a2, (1, 0), (0, 1)).summands \
        == {(1, 1): 1, (0, 0): 1}
    # trivial factor
    a3 = build_type("A", 3)
    assert character_product_oracle(a3, (1, 0, 1), (0, 0, 0)).summands == {(1, 0, 1): 1}
    assert klimyk(a3, (1, 0, 1), (0, 0, 0)).summands == {(1, 0, 1): 1}


def test_oracle_cap():
    rd = build_type("B", 4)
    with pytest.raises(ResourceLimitError):
        character_product_oracle(rd, adjoint_weight(rd), adjoint_weight(rd), cap=100)


REFERENCE_DECOMPOSITIONS = [
    # exterior-square module (x) adjoint for sl_{l+1}, l = 4, 5
    ("A", 4, lambda rd: fw(rd, 2),
     lambda rd: {w(rd, w1=1, w2=1, w4=1): 1, w(rd, w1=2): 1,
                 w(rd, w3=1, w4=1): 1, w(rd, w2=1): 1}),
    ("A", 5, lambda rd: fw(rd, 2),
     lambda rd: {w(rd, w1=1, w2=1, w5=1): 1, w(rd, w1=2): 1,
                 w(rd, w3=1, w5=1): 1, w(rd, w2=1): 1}),
    # middle fundamental weights: dual (x) adjoint, (l, p) instances
    ("A", 5, lambda rd: dual_weight(rd, fw(rd, 3)),
     lambda rd: {w(rd, w1=1, w3=1, w5=1): 1, w(rd, w1=1, w2=1): 1,
                 w(rd, w4=1, w5=1): 1, w(rd, w3=1): 1}),
    ("A", 7, lambda rd: dual_weight(rd, fw(rd, 3)),
     lambda rd: {w(rd, w1=1, w5=1, w7=1): 1, w(rd, w1=1, w4=1): 1,
                 w(rd, w6=1, w7=1): 1, w(rd, w5=1): 1}),
]


@pytest.mark.parametrize("family,rank,lam_star,expected", REFERENCE_DECOMPOSITIONS)
def test_reference_decompositions_a(family, rank, lam_star, expected):
    rd = build_type(family, rank)
    dec = klimyk(rd, lam_star(rd), adjoint_weight(rd))
    assert dec.summands == expected(rd)


def test_reference_decompositions_spinor():
    for l in range(3, 9):
        rd = build_type("B", l)
        dec = dual_tensor_adjoint(rd, fw(rd, l))
        assert dec.summands == {
            w(rd, **{f"w2": 1, f"w{l}": 1}): 1,
            w(rd, **{f"w1": 1, f"w{l}": 1}): 1,
            fw(rd, l): 1,
        }
    for l in range(5, 9):
        rd = build_type("D", l)
        lam_star = fw(rd, l) if l % 2 == 0 else fw(rd, l - 1)
        zeta = fw(rd, l - 1) if l % 2 == 0 else fw(rd, l)
        dec = dual_tensor_adjoint(rd, fw(rd, l))
        expected = {
            tuple(a + b for a, b in zip(fw(rd, 2), lam_star)): 1,
            tuple(a + b for a, b in zip(fw(rd, 1), zeta)): 1,
            lam_star: 1,
        }
        assert dec.summands == expected


def _accum(rd, *terms):
    out = [0] * rd.rank
    for i, c in terms:
        out[i - 1] += c
    return tuple(out)


def test_reference_decompositions_c():
    for l in range(3, 7):
        rd = build_type("C", l)
        for p in range(2, l + 1):
            dec = dual_tensor_adjoint(rd, fw(rd, p))
            expected = {
                _accum(rd, (1, 2), (p, 1)): 1,
                _accum(rd, (1, 1), (p - 1, 1)): 1,
                _accum(rd, (p, 1)): 1,
            }
            if p < l:
                expected[_accum(rd, (1, 1), (p + 1, 1))] = 1
            assert dec.summands == expected, (l, p)


def test_reference_decompositions_exceptional():
    e6 = build_type("E", 6)
    assert dual_tensor_adjoint(e6, fw(e6, 1)).summands == {
        w(e6, w2=1, w6=1): 1, w(e6, w3=1): 1, w(e6, w6=1): 1}
    e7 = build_type("E", 7)
    assert dual_tensor_adjoint(e7, fw(e7, 7)).summands == {
        w(e7, w1=1, w7=1): 1, w(e7, w2=1): 1, w(e7, w7=1): 1}
    f4 = build_type("F", 4)
    assert dual_tensor_adjoint(f4, fw(f4, 4)).summands == {
        w(f4, w1=1, w4=1): 1, w(f4, w3=1): 1, w(f4, w4=1): 1}
    g2 = build_type("G", 2)
    assert dual_tensor_adjoint(g2, fw(g2, 1)).summands == {
        w(g2, w1=1, w2=1): 1, w(g2, w1=2): 1, w(g2, w1=1): 1}


def test_reference_decompositions_multiplicity_free():
    cases = [("A", 5, 2), ("B", 4, 4), ("C", 4, 3), ("D", 6, 6),
             ("E", 6, 1), ("E", 7, 7), ("F", 4, 4), ("G", 2, 1)]
    for family, rank, i in cases:
        rd = build_type(family, rank)
        assert dual_tensor_adjoint(rd, fw(rd, i)).multiplicity_free()


def dominant_weights_up_to(rd, bound):
    """All dominant label vectors with Weyl dimension <= bound."""
    out = []

    def rec(prefix):
        if len(prefix) == rd.rank:
            out.append(tuple(prefix))
            return
        k = 0
        while True:
            cand = prefix + [k] + [0] * (rd.rank - len(prefix) - 1)
            if weyl_dimension(rd, tuple(cand)) > bound:
                break
            rec(prefix + [k])
            k += 1

    rec([])
    return out


CROSS_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
               ("C", 2), ("C", 3), ("D", 4), ("G", 2)]


@pytest.mark.parametrize("family,rank", CROSS_TYPES)
def test_klimyk_equals_oracle_everywhere(family, rank):
    """Unordered pairs with product dimension <= 2000."""
    rd = build_type(family, rank)
    weights = dominant_weights_up_to(rd, 1000)
    dims = {lam: weyl_dimension(rd, lam) for lam in weights}
    checked = 0
    for a, lam in enumerate(weights):
        for mu in weights[a:]:
            if dims[lam] * dims[mu] > 2000:
                continue
            assert klimyk(rd, lam, mu).summands \
                == character_product_oracle(rd, lam, mu).summands, (lam, mu)
            checked += 1
    assert checked > 0


def test_klimyk_symmetry_sample():
    for family, rank, lam, mu in [("A", 2, (2, 1), (1, 1)), ("B", 2, (1, 1), (0, 2)),
                                  ("G", 2, (1, 0), (0, 1)), ("C", 3, (1, 0, 0), (0, 1, 0))]:
        rd = build_type(family, rank)
        assert klimyk(rd, lam, mu).summands == klimyk(rd, mu, lam).summands
