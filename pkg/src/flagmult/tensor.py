"""Tensor product decomposition into irreducibles: the Racah-Speiser/Klimyk
procedure plus an independent brute-force character oracle."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .roots import (
    Labels,
    ResourceLimitError,
    RootDatum,
    adjoint_weight,
    is_dominant,
    rho,
    to_dominant,
)
from .weights import _weight_table_cached, weyl_dimension

ORACLE_CAP = 10_000
KLIMYK_CAP = 1_000_000


@dataclass(frozen=True)
class IrrepDecomposition:
    """Multiset of irreducible summands of a tensor product."""

    summands: dict

    def sorted_items(self) -> tuple[tuple[Labels, int], ...]:
        return tuple(sorted(self.summands.items()))

    def multiplicity_free(self) -> bool:
        return all(m == 1 for m in self.summands.values())

    def total_dimension(self, rd: RootDatum) -> int:
        return sum(m * weyl_dimension(rd, lam) for lam, m in self.summands.items())


def klimyk(rd: RootDatum, lam: Labels, mu: Labels) -> IrrepDecomposition:
    """Decompose V(lam) (x) V(mu) by rho-shifted reflection into the
    dominant chamber with parity signs; wall terms are dropped.

    The dimension identity is asserted on every call.
    """
    lam, mu = tuple(lam), tuple(mu)
    for w in (lam, mu):
        if not is_dominant(w):
            raise ValueError(f"{w} is not dominant")
    if weyl_dimension(rd, lam) * weyl_dimension(rd, mu) > KLIMYK_CAP:
        raise ResourceLimitError("tensor product dimension exceeds cap")
    one = rho(rd)
    acc: dict[Labels, int] = {}
    for nu, m in _weight_table_cached(rd.lie_type, mu).items():
        t = tuple(a + b + 1 for a, b in zip(lam, nu))
        dom, parity, singular = to_dominant(rd, t)
        if singular:
            continue
        target = tuple(a - b for a, b in zip(dom, one))
        acc[target] = acc.get(target, 0) + parity * m
    result = {w: m for w, m in acc.items() if m}
    if any(m < 0 for m in result.values()):
        raise AssertionError("negative accumulated multiplicity: internal error")
    dec = IrrepDecomposition(summands=result)
    lhs = dec.total_dimension(rd)
    rhs = weyl_dimension(rd, lam) * weyl_dimension(rd, mu)
    if lhs != rhs:
        raise AssertionError(f"dimension identity failed: {lhs} != {rhs}")
    return dec


def character_product_oracle(
    rd: RootDatum, lam: Labels, mu: Labels, cap: int = ORACLE_CAP
) -> IrrepDecomposition:
    """Brute-force cross-check: multiply the two weight tables and repeatedly
    peel the maximal dominant weight. No reflection trick is used, so this
    is independent of klimyk."""
    lam, mu = tuple(lam), tuple(mu)
    for w in (lam, mu):
        if not is_dominant(w):
            raise ValueError(f"{w} is not dominant")
    if weyl_dimension(rd, lam) * weyl_dimension(rd, mu) > cap:
        raise ResourceLimitError(f"product dimension exceeds oracle cap {cap}")
    t1 = _weight_table_cached(rd.lie_type, lam)
    t2 = _weight_table_cached(rd.lie_type, mu)
    product: dict[Labels, int] = {}
    for w1, m1 in t1.items():
        for w2, m2 in t2.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            product[w] = product.get(w, 0) + m1 * m2
    # Depth below lam+mu in the root lattice, scaled to integers.
    top = tuple(a + b for a, b in zip(lam, mu))
    heights = [sum(rd.cartan_inverse[i][j] for i in range(rd.rank))
               for j in range(rd.rank)]
    scale = lcm(*(h.denominator for h in heights))
    heights = [int(h * scale) for h in heights]

    def depth(w):
        return sum(h * (a - b) for h, a, b in zip(heights, top, w))

    # A single pass in depth order is sound: once a key is reached, no
    # remaining summand (all at greater or equal depth) can change it.
    result: dict[Labels, int] = {}
    for best in sorted(product, key=lambda w: (depth(w), tuple(-x for x in w))):
        coeff = product.get(best, 0)
        if not coeff:
            continue
        if not is_dominant(best) or coeff < 0:
            raise AssertionError("oracle peel hit a non-dominant or negative leader")
        result[best] = coeff
        for w, m in _weight_table_cached(rd.lie_type, best).items():
            v = product[w] - coeff * m
            if v:
                product[w] = v
            else:
                del product[w]
    if product:
        raise AssertionError("oracle peel left residual character mass")
    return IrrepDecomposition(summands=result)


def dual_tensor_adjoint(rd: RootDatum, lam: Labels) -> IrrepDecomposition:
    """Decomposition of V(lam)^* (x) adjoint, the object every case analysis
    reduces to."""
    from .weights import dual_weight

    return klimyk(rd, dual_weight(rd, lam), adjoint_weight(rd))
