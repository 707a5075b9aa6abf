"""Finite root systems of all types with exact integer/rational data.

Roots are stored in the simple-root integer basis, weights in the
fundamental-weight (Dynkin label) basis. Column j of the Cartan matrix
holds the Dynkin labels of the simple root alpha_j, so the simple
reflection s_i subtracts label_i times column i.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .linalg import Matrix, freeze, mat_inverse

Labels = tuple[int, ...]
Coords = tuple[int, ...]

ORBIT_CAP = 1_000_000

_POSITIVE_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if not admissible(self.family, self.rank):
            raise ValueError(
                f"inadmissible type {self.family}{self.rank}: admissible ranks are "
                "A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"


def admissible(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with A[i][j] = 2(a_i,a_j)/(a_i,a_i), Bourbaki numbering."""
    l = t.rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = t.family
    if fam in "ABC":
        for i in range(l - 1):
            bond(i, i + 1)
        if fam == "B" and l >= 2:
            bond(l - 2, l - 1, -1, -2)  # alpha_l short
        if fam == "C" and l >= 2:
            bond(l - 2, l - 1, -2, -1)  # alpha_l long
    elif fam == "D":
        for i in range(l - 2):
            bond(i, i + 1)
        bond(l - 3, l - 1)
    elif fam == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: l - 2]:
            bond(i, j)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # alpha_1, alpha_2 long
        bond(2, 3)
    elif fam == "G":
        bond(0, 1, -3, -1)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizers(cartan) -> tuple[int, ...]:
    """Minimal positive integers d with diag(d).cartan symmetric."""
    l = len(cartan)
    ratio = [None] * l  # d_i as Fractions relative to d_0 per component
    for start in range(l):
        if ratio[start] is not None:
            continue
        ratio[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(l):
                if i != j and cartan[i][j] and ratio[j] is None:
                    ratio[j] = ratio[i] * Fraction(cartan[i][j], cartan[j][i])
                    stack.append(j)
    denom = lcm(*(r.denominator for r in ratio))
    ints = [int(r * denom) for r in ratio]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def _saturate_positive_roots(cartan) -> tuple[Coords, ...]:
    """All positive roots by root-string saturation from the simple roots."""
    l = len(cartan)
    simples = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = set()
        for beta in frontier:
            labels = [sum(cartan[i][j] * beta[j] for j in range(l)) for i in range(l)]
            for i in range(l):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - labels[i] >= 1:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        new.add(t)
        roots |= new
        frontier = list(new)
    return tuple(sorted(roots))


@dataclass(frozen=True)
class RootDatum:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    positive_roots: tuple[Coords, ...]
    highest_root: Coords
    form: tuple[tuple[int, ...], ...]  # diag(d).cartan; (a_i,a_i) = 2 d_i
    cartan_inverse: Matrix
    label_gram: tuple[tuple[int, ...], ...]  # integer-rescaled Gram matrix on labels
    label_gram_scale: int
    alias_of: LieType | None = None

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def positive_root_set(self) -> frozenset:
        return _positive_set(self.lie_type)

    def __hash__(self):
        return hash(self.lie_type)


@lru_cache(maxsize=None)
def _positive_set(t: LieType) -> frozenset:
    return frozenset(build(t).positive_roots)


@lru_cache(maxsize=None)
def build(t: LieType) -> RootDatum:
    """Construct the full root datum for an admissible type."""
    alias = None
    if t.family == "D" and t.rank == 3:
        alias = LieType("A", 3)
        warnings.warn("D3 is an alias of A3; classification tables assume D rank >= 4",
                      stacklevel=2)
    cartan = cartan_matrix(t)
    d = _symmetrizers(cartan)
    positives = _saturate_positive_roots(cartan)
    expected = _POSITIVE_COUNT[t.family](t.rank)
    if len(positives) != expected:
        raise AssertionError(f"{t}: got {len(positives)} positive roots, expected {expected}")
    maximal = [b for b in positives
               if all(_add_simple(b, i) not in positives for i in range(t.rank))]
    if len(maximal) != 1:
        raise AssertionError(f"{t}: highest root not unique: {maximal}")
    form = tuple(tuple(d[i] * cartan[i][j] for j in range(t.rank)) for i in range(t.rank))
    ainv = mat_inverse(freeze(cartan))
    # Gram matrix on Dynkin labels: A^{-T} . form . A^{-1}, rescaled to integers.
    l = t.rank
    gram_q = [[sum(ainv[k][i] * form[k][m] * ainv[m][j]
                   for k in range(l) for m in range(l))
               for j in range(l)] for i in range(l)]
    scale = lcm(*(x.denominator for row in gram_q for x in row))
    gram = tuple(tuple(int(x * scale) for x in row) for row in gram_q)
    return RootDatum(
        lie_type=t,
        cartan=cartan,
        symmetrizers=d,
        positive_roots=positives,
        highest_root=maximal[0],
        form=form,
        cartan_inverse=ainv,
        label_gram=gram,
        label_gram_scale=scale,
        alias_of=alias,
    )


def build_type(family: str, rank: int) -> RootDatum:
    return build(LieType(family, rank))


def _add_simple(beta: Coords, i: int) -> Coords:
    return beta[:i] + (beta[i] + 1,) + beta[i + 1:]


def highest_root(rd: RootDatum) -> Coords:
    return rd.highest_root


def fundamental_weight(rd: RootDatum, i: int) -> Labels:
    """Unit label vector for node i (1-based, Bourbaki)."""
    if not 1 <= i <= rd.rank:
        raise ValueError(f"node {i} out of range for {rd.lie_type}")
    return tuple(1 if k == i - 1 else 0 for k in range(rd.rank))


def zero_weight(rd: RootDatum) -> Labels:
    return (0,) * rd.rank


def rho(rd: RootDatum) -> Labels:
    return (1,) * rd.rank


def coords_to_labels(rd: RootDatum, coords) -> Labels:
    """Dynkin labels of a simple-root-basis vector: cartan . coords."""
    out = []
    for i in range(rd.rank):
        v = sum(rd.cartan[i][j] * coords[j] for j in range(rd.rank))
        out.append(int(v) if isinstance(v, Fraction) and v.denominator == 1 else v)
    return tuple(out)


def labels_to_coords(rd: RootDatum, labels) -> tuple[Fraction, ...]:
    """Simple-root-basis coordinates of a weight: cartan^{-1} . labels."""
    return tuple(
        sum(rd.cartan_inverse[i][j] * labels[j] for j in range(rd.rank))
        for i in range(rd.rank)
    )


def root_height(rd: RootDatum, labels: Labels) -> Fraction:
    """Height of a weight expressed in root coordinates (sum of coordinates)."""
    return sum(labels_to_coords(rd, labels))


def is_root(rd: RootDatum, coords) -> str:
    """Classify a root-basis vector: 'positive', 'negative' or 'not_a_root'."""
    ints = []
    for x in coords:
        f = Fraction(x)
        if f.denominator != 1:
            return "not_a_root"
        ints.append(int(f))
    t = tuple(ints)
    pos = rd.positive_root_set
    if t in pos:
        return "positive"
    if tuple(-x for x in t) in pos:
        return "negative"
    return "not_a_root"


def inner_product(rd: RootDatum, v, w, *, basis: str) -> Fraction:
    """Invariant symmetric form; basis is 'root' or 'weight'.

    Normalization: (alpha_i, alpha_i) = 2 d_i for the minimal symmetrizers d.
    Only ratios of values are meaningful to callers.
    """
    if basis == "root":
        return Fraction(
            sum(v[i] * rd.form[i][j] * w[j] for i in range(rd.rank) for j in range(rd.rank))
        )
    if basis == "weight":
        return Fraction(_gram_ip(rd, v, w), rd.label_gram_scale)
    raise ValueError("basis must be 'root' or 'weight'")


def _gram_ip(rd: RootDatum, m1, m2) -> int:
    """Integer-rescaled inner product of two label vectors (scale label_gram_scale)."""
    g = rd.label_gram
    total = 0
    for i, a in enumerate(m1):
        if a:
            gi = g[i]
            total += a * sum(gi[j] * b for j, b in enumerate(m2) if b)
    return total


def coroot_coordinates(rd: RootDatum, beta: Coords) -> tuple[int, ...]:
    """Coefficients of the coroot of beta over the simple coroots.

    For beta = sum n_j alpha_j these are n_j (a_j,a_j)/(beta,beta); integers
    for every root."""
    if is_root(rd, beta) == "not_a_root":
        raise ValueError(f"{beta} is not a root of {rd.lie_type}")
    bb = inner_product(rd, beta, beta, basis="root")
    out = []
    for j, n in enumerate(beta):
        v = Fraction(n * rd.form[j][j], 1) / bb
        if v.denominator != 1:
            raise AssertionError("coroot coordinates must be integers")
        out.append(int(v))
    return tuple(out)


def simple_reflection(rd: RootDatum, i: int, labels: Labels) -> Labels:
    """Reflect a weight in the wall of alpha_i (1-based node index)."""
    if not 1 <= i <= rd.rank:
        raise ValueError(f"node {i} out of range for {rd.lie_type}")
    c = labels[i - 1]
    if not c:
        return tuple(labels)
    return tuple(labels[k] - c * rd.cartan[k][i - 1] for k in range(rd.rank))


def reflect_coords(rd: RootDatum, i: int, coords: Coords) -> Coords:
    """Simple reflection acting on root-basis coordinates."""
    label = sum(rd.cartan[i - 1][j] * coords[j] for j in range(rd.rank))
    return tuple(coords[k] - label * (k == i - 1) for k in range(rd.rank))


def weyl_orbit(rd: RootDatum, labels: Labels, cap: int = ORBIT_CAP) -> tuple[Labels, ...]:
    """Orbit of a weight under the Weyl group, sorted lexicographically."""
    seen = {tuple(labels)}
    frontier = [tuple(labels)]
    while frontier:
        new = []
        for w in frontier:
            for i in range(rd.rank):
                c = w[i]
                if c:
                    s = tuple(w[k] - c * rd.cartan[k][i] for k in range(rd.rank))
                    if s not in seen:
                        seen.add(s)
                        new.append(s)
                        if len(seen) > cap:
                            raise ResourceLimitError(
                                f"Weyl orbit exceeds cap {cap} for {rd.lie_type}"
                            )
        frontier = new
    return tuple(sorted(seen))


def to_dominant(rd: RootDatum, labels: Labels) -> tuple[Labels, int, bool]:
    """Dominant representative, reflection parity, and wall flag.

    Repeatedly reflects at the first negative label. parity = (-1)^steps;
    singular means the orbit lies on a wall (some label of the dominant
    representative is zero), in which case parity carries no meaning.
    """
    w = list(labels)
    steps = 0
    rank = rd.rank
    cartan = rd.cartan
    while True:
        for i in range(rank):
            if w[i] < 0:
                c = w[i]
                for k in range(rank):
                    w[k] -= c * cartan[k][i]
                steps += 1
                break
        else:
            break
    dom = tuple(w)
    singular = any(x == 0 for x in dom)
    return dom, (-1) ** (steps % 2), singular


def is_dominant(labels) -> bool:
    return all(x >= 0 for x in labels)


def adjoint_weight(rd: RootDatum) -> Labels:
    """Highest root expressed in Dynkin labels (adjoint highest weight)."""
    return coords_to_labels(rd, rd.highest_root)


def datum_as_dict(rd: RootDatum) -> dict:
    """Canonical JSON-ready document; field order is part of the contract."""
    return {
        "family": rd.lie_type.family,
        "rank": rd.lie_type.rank,
        "cartan": [list(r) for r in rd.cartan],
        "symmetrizers": list(rd.symmetrizers),
        "positive_roots": [list(r) for r in rd.positive_roots],
        "highest_root": list(rd.highest_root),
        "form": [list(r) for r in rd.form],
        "alias_of": str(rd.alias_of) if rd.alias_of else None,
    }
