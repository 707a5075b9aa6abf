"""Exact linear algebra over the rationals.

Dense matrices are tuples of tuples of Fraction (immutable once built);
sparse rows are dicts column -> Fraction used by the elimination engine.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]

Q0 = Fraction(0)
Q1 = Fraction(1)


def freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(n: int, m: int | None = None) -> list[list[Fraction]]:
    m = n if m is None else m
    return [[Q0] * m for _ in range(n)]


def eye(n: int) -> Matrix:
    return tuple(tuple(Q1 if i == j else Q0 for j in range(n)) for i in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    # Skips zero entries of a; representation matrices are mostly sparse.
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        oi = out[i]
        for t in range(k):
            x = row[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += x * bt[j]
    return tuple(tuple(r) for r in out)


def mat_vec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    out = [Q0] * len(a)
    for i, row in enumerate(a):
        s = Q0
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out[i] = s
    return tuple(out)


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def mat_trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Q0)


def mat_pow_is_zero(a: Matrix, k: int) -> bool:
    """Whether a**k == 0, squaring to keep the number of products low."""
    p = a
    e = 1
    while e < k:
        if is_zero_matrix(p):
            return True
        p = mat_mul(p, p)
        e *= 2
    return is_zero_matrix(p)


def mat_inverse(a: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan; raises ValueError on a singular input."""
    n = len(a)
    work = [list(row) + [Q1 if i == j else Q0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv = Q1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def charpoly(a: Matrix) -> tuple[Fraction, ...]:
    """Characteristic polynomial coefficients (c_0 .. c_n, leading first)
    by the Faddeev-LeVerrier recursion; exact."""
    n = len(a)
    coeffs = [Q1]
    m = eye(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        c = -mat_trace(m) / k
        coeffs.append(c)
        if k < n:
            m = tuple(
                tuple(m[i][j] + (c if i == j else Q0) for j in range(n)) for i in range(n)
            )
    return tuple(coeffs)


def is_nilpotent_charpoly(a: Matrix) -> bool:
    return all(not c for c in charpoly(a)[1:])


SparseRow = dict[int, Fraction]


class SparseEchelon:
    """Incremental reduced echelon form over Q with sparse rows.

    Supports span building (add), membership/coordinate solving, and
    kernel extraction for systems assembled row by row.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots: dict[int, SparseRow] = {}  # pivot column -> normalized row

    def reduce(self, row: SparseRow) -> SparseRow:
        row = {c: v for c, v in row.items() if v}
        for c in sorted(row):
            if c in self.pivots and row.get(c):
                f = row[c]
                for c2, v2 in self.pivots[c].items():
                    row[c2] = row.get(c2, Q0) - f * v2
                    if not row[c2]:
                        del row[c2]
        return {c: v for c, v in row.items() if v}

    def add(self, row: SparseRow) -> bool:
        """Reduce and insert; returns True if the row enlarged the span."""
        red = self.reduce(row)
        if not red:
            return False
        lead = min(red)
        inv = Q1 / red[lead]
        norm = {c: v * inv for c, v in red.items()}
        # Back-substitute into existing pivot rows to keep RREF.
        for c, prow in self.pivots.items():
            if lead in prow:
                f = prow[lead]
                for c2, v2 in norm.items():
                    prow[c2] = prow.get(c2, Q0) - f * v2
                    if not prow[c2]:
                        del prow[c2]
        self.pivots[lead] = norm
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)


def span_coordinates(basis: Sequence[SparseRow], target: SparseRow, width: int):
    """Coordinates of target in span(basis), or None if outside.

    Solved by eliminating the augmented system [basis | target]."""
    nb = len(basis)
    ech = SparseEchelon(width + nb)
    for k, b in enumerate(basis):
        row = dict(b)
        row[width + k] = Q1
        ech.add(row)
    red = ech.reduce(dict(target))
    if any(c < width for c in red):
        return None
    coords = [Q0] * nb
    for c, v in red.items():
        coords[c - width] = -v
    return tuple(coords)


def kernel_basis(rows: Iterable[SparseRow], width: int) -> list[Vector]:
    """Basis of {v : row . v = 0 for all rows}, dense vectors of length width."""
    ech = SparseEchelon(width)
    for row in rows:
        ech.add(row)
    pivot_cols = set(ech.pivots)
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [Q0] * width
        v[f] = Q1
        for c, prow in ech.pivots.items():
            if f in prow:
                v[c] = -prow[f]
        basis.append(tuple(v))
    return basis


def dense_to_sparse(vec: Sequence[Fraction]) -> SparseRow:
    return {i: Fraction(v) for i, v in enumerate(vec) if v}


def matrix_to_sparse(m: Matrix) -> SparseRow:
    ncols = len(m[0])
    return {i * ncols + j: v for i, row in enumerate(m) for j, v in enumerate(row) if v}


def rank_of(rows: Iterable[SparseRow], width: int) -> int:
    ech = SparseEchelon(width)
    for row in rows:
        ech.add(row)
    return ech.rank
