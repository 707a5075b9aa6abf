"""Weight systems, multiplicities, dimensions, and duals of irreducible
highest-weight modules, all in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .roots import (
    Labels,
    ResourceLimitError,
    RootDatum,
    _gram_ip,
    build,
    coords_to_labels,
    is_dominant,
    labels_to_coords,
    rho,
    to_dominant,
    weyl_orbit,
)

DIMENSION_CAP = 100_000


@dataclass(frozen=True)
class WeightSystem:
    """Weight -> multiplicity table of one irreducible module."""

    highest: Labels
    table: dict

    @property
    def dimension(self) -> int:
        return sum(self.table.values())

    def multiplicity(self, labels: Labels) -> int:
        return self.table.get(tuple(labels), 0)

    def support(self) -> tuple[Labels, ...]:
        return tuple(sorted(self.table))


def weyl_dimension(rd: RootDatum, labels: Labels) -> int:
    """Weyl dimension formula, product over positive roots of
    (lam+rho, alpha)/(rho, alpha)."""
    if not is_dominant(labels):
        raise ValueError(f"{labels} is not dominant")
    return _weyl_dimension_cached(rd.lie_type, tuple(labels))


@lru_cache(maxsize=None)
def _weyl_dimension_cached(lie_type, labels) -> int:
    rd = build(lie_type)
    shifted = tuple(x + 1 for x in labels)
    one = rho(rd)
    dim = Fraction(1)
    for alpha in rd.positive_roots:
        alabels = coords_to_labels(rd, alpha)
        dim *= Fraction(_gram_ip(rd, shifted, alabels), _gram_ip(rd, one, alabels))
    if dim.denominator != 1:
        raise AssertionError("Weyl dimension must be an integer")
    return int(dim)


def weight_system(rd: RootDatum, labels: Labels, cap: int = DIMENSION_CAP) -> WeightSystem:
    """Exact weight multiplicities of V(labels) by the Freudenthal recursion.

    The weight set is generated by string saturation downward from the
    highest weight; multiplicities are computed on dominant weights in
    decreasing dominance order and spread over Weyl orbits.
    """
    lam = tuple(labels)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    dim = weyl_dimension(rd, lam)
    if dim > cap:
        raise ResourceLimitError(f"dim V({lam}) = {dim} exceeds cap {cap}")
    table = _weight_table_cached(rd.lie_type, lam)
    return WeightSystem(highest=lam, table=dict(table))


@lru_cache(maxsize=None)
def _weight_table_cached(lie_type, lam: Labels):
    rd = build(lie_type)
    rank = rd.rank
    simple_labels = [coords_to_labels(rd, tuple(1 if k == i else 0 for k in range(rank)))
                     for i in range(rank)]

    # Weight set: mu - alpha_i is a weight iff the alpha_i-string above mu
    # (p steps) satisfies p + <mu, alpha_i^vee> >= 1.
    levels = [{lam}]
    seen = {lam}
    while levels[-1]:
        nxt = set()
        for mu in levels[-1]:
            for i in range(rank):
                p = 0
                up = mu
                while True:
                    up = tuple(a + b for a, b in zip(up, simple_labels[i]))
                    if up in seen:
                        p += 1
                    else:
                        break
                if p + mu[i] >= 1:
                    down = tuple(a - b for a, b in zip(mu, simple_labels[i]))
                    if down not in seen:
                        seen.add(down)
                        nxt.add(down)
        levels.append(nxt)

    pos_labels = [coords_to_labels(rd, a) for a in rd.positive_roots]
    one = rho(rd)
    lam_rho = tuple(a + b for a, b in zip(lam, one))
    norm_top = _gram_ip(rd, lam_rho, lam_rho)

    dominants = sorted(
        (mu for mu in seen if is_dominant(mu)),
        key=lambda mu: (sum(labels_to_coords(rd, tuple(a - b for a, b in zip(lam, mu)))),
                        mu),
    )
    mult: dict[Labels, int] = {}
    for mu in dominants:
        if mu == lam:
            m = 1
        else:
            mu_rho = tuple(a + b for a, b in zip(mu, one))
            denom = norm_top - _gram_ip(rd, mu_rho, mu_rho)
            total = 0
            for alabels in pos_labels:
                nu = mu
                while True:
                    nu = tuple(a + b for a, b in zip(nu, alabels))
                    if nu not in seen:
                        break
                    total += mult[nu] * _gram_ip(rd, nu, alabels)
            q, r = divmod(2 * total, denom)
            if r:
                raise AssertionError("Freudenthal recursion produced a non-integer")
            m = q
        if m <= 0:
            raise AssertionError("Freudenthal multiplicity must be positive")
        for w in weyl_orbit(rd, mu):
            mult[w] = m
    if sum(mult.values()) != _weyl_dimension_cached(lie_type, lam):
        raise AssertionError("multiplicity sum disagrees with the Weyl dimension")
    return mult


def dual_weight(rd: RootDatum, labels: Labels) -> Labels:
    """Highest weight of the dual module, -w0 . labels."""
    if not is_dominant(labels):
        raise ValueError(f"{labels} is not dominant")
    dom, _, _ = to_dominant(rd, tuple(-x for x in labels))
    return dom


def lowest_weight(rd: RootDatum, labels: Labels) -> Labels:
    """Lowest weight of V(labels); always a member of its weight system."""
    return tuple(-x for x in dual_weight(rd, labels))
