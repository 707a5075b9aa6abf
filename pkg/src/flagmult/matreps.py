"""Exact matrix realizations of the classical algebras and derived modules:
tautological sl/sp/so representations, exterior squares, adjoint and tensor
modules, and the symmetric-component membership test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linalg import (
    Matrix,
    Q0,
    Q1,
    SparseEchelon,
    bracket,
    freeze,
    is_zero_matrix,
    mat_add,
    mat_mul,
    mat_vec,
    matrix_to_sparse,
    transpose,
    zeros,
)
from .roots import LieType, build, cartan_matrix

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class MatrixRep:
    """Chevalley generator matrices on a concrete module.

    algebra_basis spans the image of the (semisimple) algebra and is
    bracket-closed; it is None for derived modules that only carry an action.
    """

    lie_type: LieType
    module_dim: int
    x: tuple[Matrix, ...]
    y: tuple[Matrix, ...]
    h: tuple[Matrix, ...]
    algebra_basis: tuple[Matrix, ...] | None = None
    form: Matrix | None = None

    @property
    def rank(self) -> int:
        return self.lie_type.rank


def _unit(n: int, r: int, c: int, v=Q1) -> Matrix:
    m = zeros(n, n)
    m[r][c] = Fraction(v)
    return tuple(tuple(row) for row in m)


def _combine(n: int, *terms) -> Matrix:
    m = zeros(n, n)
    for r, c, v in terms:
        m[r][c] += Fraction(v)
    return tuple(tuple(row) for row in m)


def _verify_chevalley(t: LieType, x, y, h) -> None:
    a = cartan_matrix(t)
    l = t.rank
    for i in range(l):
        for j in range(l):
            if not is_zero_matrix(
                mat_add(bracket(x[i], y[j]), _neg(h[i]) if i == j else _zero_like(h[i]))
            ):
                raise AssertionError(f"[x_{i+1}, y_{j+1}] != delta.h for {t}")
            if not is_zero_matrix(mat_add(bracket(h[i], x[j]), _scale(-a[i][j], x[j]))):
                raise AssertionError(f"[h_{i+1}, x_{j+1}] mismatch for {t}")
            if not is_zero_matrix(mat_add(bracket(h[i], y[j]), _scale(a[i][j], y[j]))):
                raise AssertionError(f"[h_{i+1}, y_{j+1}] mismatch for {t}")


def _neg(m: Matrix) -> Matrix:
    return tuple(tuple(-v for v in row) for row in m)


def _zero_like(m: Matrix) -> Matrix:
    return tuple(tuple(Q0 for _ in row) for row in m)


def _scale(c, m: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * v for v in row) for row in m)


def bracket_closure(generators) -> tuple[Matrix, ...]:
    """Span of the generators closed under the bracket; each added element
    is itself a single bracket, so weight vectors stay weight vectors."""
    basis: list[Matrix] = []
    n = len(generators[0])
    ech = SparseEchelon(n * n)
    for g in generators:
        if ech.add(matrix_to_sparse(g)):
            basis.append(g)
    i = 0
    while i < len(basis):
        for j in range(i):
            b = bracket(basis[i], basis[j])
            if ech.add(matrix_to_sparse(b)):
                basis.append(b)
        i += 1
    return tuple(basis)


def _finish(t: LieType, n: int, x, y, h, form=None) -> MatrixRep:
    x, y, h = tuple(x), tuple(y), tuple(h)
    _verify_chevalley(t, x, y, h)
    basis = bracket_closure(list(x) + list(y) + list(h))
    rd = build(t)
    expected = t.rank + 2 * len(rd.positive_roots)
    if len(basis) != expected:
        raise AssertionError(f"{t}: algebra span {len(basis)}, expected {expected}")
    if form is not None:
        for m in basis:
            if not is_zero_matrix(mat_add(mat_mul(form, m), mat_mul(transpose(m), form))):
                raise AssertionError(f"{t}: generated algebra does not preserve the form")
    return MatrixRep(lie_type=t, module_dim=n, x=x, y=y, h=h,
                     algebra_basis=basis, form=form)


def sl_tautological(n: int) -> MatrixRep:
    """sl_n on column vectors: x_i = E_{i,i+1}, y_i = E_{i+1,i},
    h_i = E_{ii} - E_{i+1,i+1}."""
    if n < 2:
        raise ValueError("sl_tautological needs n >= 2")
    x = [_unit(n, i, i + 1) for i in range(n - 1)]
    y = [_unit(n, i + 1, i) for i in range(n - 1)]
    h = [_combine(n, (i, i, 1), (i + 1, i + 1, -1)) for i in range(n - 1)]
    return _finish(LieType("A", n - 1), n, x, y, h)


def sp_tautological(l: int) -> MatrixRep:
    """sp_2l preserving omega = sum(e_i^* ^ e_{-i}^*), basis ordered
    e_1..e_l, e_{-1}..e_{-l}; the long-root triple completes the quoted
    short-root formulas."""
    if l < 2:
        raise ValueError("sp_tautological needs l >= 2")
    n = 2 * l
    pos = lambda i: i - 1          # e_i
    neg = lambda i: l + i - 1      # e_{-i}
    x, y, h = [], [], []
    for i in range(1, l):
        x.append(_combine(n, (pos(i), pos(i + 1), 1), (neg(i + 1), neg(i), -1)))
        y.append(_combine(n, (pos(i + 1), pos(i), 1), (neg(i), neg(i + 1), -1)))
        h.append(_combine(n, (pos(i), pos(i), 1), (pos(i + 1), pos(i + 1), -1),
                          (neg(i), neg(i), -1), (neg(i + 1), neg(i + 1), 1)))
    x.append(_unit(n, pos(l), neg(l)))
    y.append(_unit(n, neg(l), pos(l)))
    h.append(_combine(n, (pos(l), pos(l), 1), (neg(l), neg(l), -1)))
    omega = _combine(n, *[(pos(i), neg(i), 1) for i in range(1, l + 1)],
                     *[(neg(i), pos(i), -1) for i in range(1, l + 1)])
    return _finish(LieType("C", l), n, x, y, h, form=omega)


def so_vector(n: int) -> MatrixRep:
    """so_n preserving the split symmetric form with antidiagonal ones;
    rational Chevalley generators, no square roots."""
    if n < 5:
        raise ValueError("so_vector needs n >= 5")
    l = n // 2
    if n % 2:  # B_l, basis v_1..v_l, v_0, v_{-l}..v_{-1}
        t = LieType("B", l)
        pos = lambda i: i - 1
        mid = l
        neg = lambda i: 2 * l + 1 - i
    else:  # D_l, basis v_1..v_l, v_{-l}..v_{-1}
        t = LieType("D", l)
        pos = lambda i: i - 1
        neg = lambda i: 2 * l - i
    x, y, h = [], [], []
    for i in range(1, l):
        x.append(_combine(n, (pos(i), pos(i + 1), 1), (neg(i + 1), neg(i), -1)))
        y.append(_combine(n, (pos(i + 1), pos(i), 1), (neg(i), neg(i + 1), -1)))
        h.append(_combine(n, (pos(i), pos(i), 1), (pos(i + 1), pos(i + 1), -1),
                          (neg(i), neg(i), -1), (neg(i + 1), neg(i + 1), 1)))
    if n % 2:
        x.append(_combine(n, (pos(l), mid, 1), (mid, neg(l), -1)))
        y.append(_combine(n, (mid, pos(l), 2), (neg(l), mid, -2)))
        h.append(_combine(n, (pos(l), pos(l), 2), (neg(l), neg(l), -2)))
    else:
        x.append(_combine(n, (pos(l - 1), neg(l), 1), (pos(l), neg(l - 1), -1)))
        y.append(_combine(n, (neg(l), pos(l - 1), 1), (neg(l - 1), pos(l), -1)))
        h.append(_combine(n, (pos(l - 1), pos(l - 1), 1), (pos(l), pos(l), 1),
                          (neg(l - 1), neg(l - 1), -1), (neg(l), neg(l), -1)))
    form = _combine(n, *[(i, n - 1 - i, 1) for i in range(n)])
    return _finish(t, n, x, y, h, form=form)


@lru_cache(maxsize=None)
def pair_basis(n: int) -> tuple[tuple[int, int], ...]:
    """Ordered basis e_i ^ e_j (i < j, 0-based) of the exterior square."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_lookup(n: int) -> dict:
    return {p: k for k, p in enumerate(pair_basis(n))}


def pair_index(n: int, i: int, j: int) -> tuple[int, int]:
    """Index and sign of e_i ^ e_j in the ordered pair basis."""
    if i == j:
        raise ValueError("degenerate wedge")
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    return _pair_lookup(n)[(i, j)], sign


def exterior_operator(n: int, m: Matrix) -> Matrix:
    """Leibniz lift of an n x n matrix to the exterior square."""
    pairs = pair_basis(n)
    d = len(pairs)
    out = zeros(d, d)
    for c, (p, q) in enumerate(pairs):
        for r in range(n):
            if m[r][p] and r != p:
                idx, sign = pair_index(n, r, q) if r != q else (None, 0)
                if idx is not None:
                    out[idx][c] += sign * m[r][p]
            if m[r][q] and r != q:
                idx, sign = pair_index(n, p, r) if r != p else (None, 0)
                if idx is not None:
                    out[idx][c] += sign * m[r][q]
        # diagonal part: (m[p][p] + m[q][q]) e_p ^ e_q
        out[c][c] += m[p][p] + m[q][q]
    return tuple(tuple(row) for row in out)


def exterior_square_dual(rep: MatrixRep) -> MatrixRep:
    """Action on Lambda^2 W for a tautological sl module; this module plays
    the role of the dual of V(w_{n-2})."""
    if rep.lie_type.family != "A" or rep.algebra_basis is None:
        raise ValueError("exterior_square_dual expects a tautological sl module")
    n = rep.module_dim
    if n < 3:
        raise ValueError("exterior square of dimension < 3 is not faithful")
    lift = lambda m: exterior_operator(n, m)
    return MatrixRep(
        lie_type=rep.lie_type,
        module_dim=n * (n - 1) // 2,
        x=tuple(lift(m) for m in rep.x),
        y=tuple(lift(m) for m in rep.y),
        h=tuple(lift(m) for m in rep.h),
        algebra_basis=tuple(lift(m) for m in rep.algebra_basis),
    )


def gl_adjoint_module(n: int) -> MatrixRep:
    """ad-action of the sl_n Chevalley generators on all of gl_n,
    basis E_{rs} flattened row-major."""
    base = sl_tautological(n)
    d = n * n

    def ad_matrix(m: Matrix) -> Matrix:
        out = zeros(d, d)
        for r in range(n):
            for s in range(n):
                e = _unit(n, r, s)
                br = bracket(m, e)
                col = r * n + s
                for a in range(n):
                    for b in range(n):
                        if br[a][b]:
                            out[a * n + b][col] = br[a][b]
        return tuple(tuple(row) for row in out)

    return MatrixRep(
        lie_type=base.lie_type,
        module_dim=d,
        x=tuple(ad_matrix(m) for m in base.x),
        y=tuple(ad_matrix(m) for m in base.y),
        h=tuple(ad_matrix(m) for m in base.h),
        algebra_basis=None,
    )


def tensor_module(m1: MatrixRep, m2: MatrixRep) -> MatrixRep:
    """Tensor product action: x (x) 1 + 1 (x) x, generator by generator."""
    if m1.lie_type != m2.lie_type:
        raise ValueError("tensor factors must carry the same algebra")
    d1, d2 = m1.module_dim, m2.module_dim
    d = d1 * d2

    def combine(a: Matrix, b: Matrix) -> Matrix:
        out = zeros(d, d)
        for i in range(d1):
            row = a[i]
            for j in range(d1):
                if row[j]:
                    v = row[j]
                    for k in range(d2):
                        out[i * d2 + k][j * d2 + k] += v
        for k in range(d2):
            rowb = b[k]
            for m in range(d2):
                if rowb[m]:
                    v = rowb[m]
                    for i in range(d1):
                        out[i * d2 + k][i * d2 + m] += v
        return tuple(tuple(row) for row in out)

    return MatrixRep(
        lie_type=m1.lie_type,
        module_dim=d,
        x=tuple(combine(a, b) for a, b in zip(m1.x, m2.x)),
        y=tuple(combine(a, b) for a, b in zip(m1.y, m2.y)),
        h=tuple(combine(a, b) for a, b in zip(m1.h, m2.h)),
        algebra_basis=None,
    )


def annihilated_by_raising(module: MatrixRep, v) -> bool:
    """Whether every raising generator kills the vector."""
    d = module.module_dim
    if len(v) != d:
        raise ValueError("vector length does not match the module")
    support = [(j, Fraction(c)) for j, c in enumerate(v) if c]
    for xm in module.x:
        out = [Q0] * d
        for j, c in support:
            for r in range(d):
                if xm[r][j]:
                    out[r] += c * xm[r][j]
        if any(out):
            return False
    return True


def pair_tensor_from_terms(n: int, terms) -> dict:
    """Image in V* (x) V* (x) V of a sum of terms (wedge pair, gl matrix, coeff),
    V* the exterior square. Keys are (a, b, c) triples of pair indices."""
    out: dict[tuple[int, int, int], Fraction] = {}
    for (i, j), m, coeff in terms:
        a, sign = pair_index(n, i, j)
        lift = exterior_operator(n, m)
        c0 = Fraction(coeff) * sign
        d = len(lift)
        for b in range(d):
            for c in range(d):
                if lift[b][c]:
                    key = (a, b, c)
                    out[key] = out.get(key, Q0) + c0 * lift[b][c]
    return {k: v for k, v in out.items() if v}


def in_symmetric_component(module: MatrixRep, w: dict) -> bool:
    """Whether the induced map V* -> V* (x) V* lands in the symmetric square,
    i.e. the tensor is symmetric in its first two slots."""
    d = module.module_dim
    for (a, b, c), v in w.items():
        if not (0 <= a < d and 0 <= b < d and 0 <= c < d):
            raise ValueError("tensor index out of range")
        if w.get((b, a, c), Q0) != v:
            return False
    return True


def tensor_vector_from_terms(n: int, terms, gl_dim: int | None = None) -> Vector:
    """Flatten (wedge pair, gl matrix, coeff) terms into a vector of the
    module Lambda^2 W (x) gl_n for raising-annihilation checks."""
    d1 = n * (n - 1) // 2
    d2 = gl_dim if gl_dim is not None else n * n
    v = [Q0] * (d1 * d2)
    for (i, j), m, coeff in terms:
        a, sign = pair_index(n, i, j)
        c0 = Fraction(coeff) * sign
        for r in range(n):
            for s in range(n):
                if m[r][s]:
                    v[a * d2 + r * n + s] += c0 * m[r][s]
    return tuple(v)
