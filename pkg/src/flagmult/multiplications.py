"""Construction, verification, and search of compatible multiplications:
commutative associative products with nilpotent multiplication operators
realized inside a concrete algebra action, the symplectic trilinear-form
family, the worked nilpotent-algebra examples, and the passage from a
verified multiplication to a commutative unipotent complement subalgebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Matrix,
    Q0,
    Q1,
    SparseEchelon,
    bracket,
    is_nilpotent_charpoly,
    is_zero_matrix,
    kernel_basis,
    mat_mul,
    mat_pow_is_zero,
    mat_vec,
    matrix_to_sparse,
    mat_inverse,
    span_coordinates,
    zeros,
)
from .matreps import MatrixRep, sl_tautological

# Deterministic coefficient patterns for the characteristic-polynomial side
# of the nilpotency check (the quantifier over all of V is not linear in v).
_NILPOTENCY_PATTERNS = (
    lambda n: [1] * n,
    lambda n: list(range(1, n + 1)),
    lambda n: [k * k for k in range(1, n + 1)],
)


@dataclass(frozen=True)
class StructureTensor:
    """Rank-3 array of rationals: (basis_i . basis_j) = sum_k c[i][j][k] basis_k."""

    dim: int
    entries: tuple

    @staticmethod
    def zero(n: int) -> "StructureTensor":
        return StructureTensor(n, tuple(tuple((Q0,) * n for _ in range(n)) for _ in range(n)))

    @staticmethod
    def from_sparse(n: int, items) -> "StructureTensor":
        c = [[[Q0] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, v in items:
            c[i][j][k] += Fraction(v)
        return StructureTensor(n, tuple(tuple(tuple(r) for r in p) for p in c))

    def sparse_items(self):
        return tuple(
            (i, j, k, v)
            for i, p in enumerate(self.entries)
            for j, r in enumerate(p)
            for k, v in enumerate(r)
            if v
        )

    def mu(self, i: int) -> Matrix:
        """Left multiplication by basis_i as a matrix."""
        n = self.dim
        return tuple(tuple(self.entries[i][j][k] for j in range(n)) for k in range(n))

    def mu_vector(self, coeffs) -> Matrix:
        n = self.dim
        out = zeros(n, n)
        for i, c in enumerate(coeffs):
            if c:
                c = Fraction(c)
                mi = self.mu(i)
                for r in range(n):
                    for s in range(n):
                        if mi[r][s]:
                            out[r][s] += c * mi[r][s]
        return tuple(tuple(row) for row in out)

    def is_zero(self) -> bool:
        return all(not v for p in self.entries for r in p for v in r)


@dataclass(frozen=True)
class AlgebraSpec:
    names: tuple[str, ...]
    tensor: StructureTensor

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be unique")


@dataclass(frozen=True)
class CompatibilityReport:
    commutative: bool
    associative: bool
    all_nilpotent: bool
    mu_in_image: bool
    phi_matrix: Matrix | None  # coordinates of phi(basis_i) over the algebra basis

    @property
    def compatible(self) -> bool:
        return self.commutative and self.associative and self.all_nilpotent and self.mu_in_image

    def first_failure(self) -> str | None:
        for name in ("commutative", "associative", "all_nilpotent", "mu_in_image"):
            if not getattr(self, name):
                return name
        return None


def tensor_is_commutative(t: StructureTensor) -> bool:
    n = t.dim
    c = t.entries
    return all(c[i][j] == c[j][i] for i in range(n) for j in range(i))


def tensor_is_associative(t: StructureTensor) -> bool:
    """Checks mu_i . mu_j == sum_k c[i][j][k] mu_k on all basis pairs."""
    n = t.dim
    mus = [t.mu(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = mat_mul(mus[i], mus[j])
            rhs = zeros(n, n)
            for k in range(n):
                v = t.entries[i][j][k]
                if v:
                    mk = mus[k]
                    for r in range(n):
                        for s in range(n):
                            if mk[r][s]:
                                rhs[r][s] += v * mk[r][s]
            if lhs != tuple(tuple(row) for row in rhs):
                return False
    return True


def tensor_is_nilpotent(t: StructureTensor) -> bool:
    """mu^n == 0 for every basis vector, plus exact characteristic-polynomial
    checks on the documented deterministic coefficient patterns."""
    n = t.dim
    for i in range(n):
        if not mat_pow_is_zero(t.mu(i), n):
            return False
    for pattern in _NILPOTENCY_PATTERNS:
        if not is_nilpotent_charpoly(t.mu_vector(pattern(n))):
            return False
    return True


def _algebra_echelon(rep: MatrixRep):
    basis = [matrix_to_sparse(m) for m in rep.algebra_basis]
    return basis, rep.module_dim * rep.module_dim


def verify_compatible(rep: MatrixRep, t: StructureTensor) -> CompatibilityReport:
    """Check the four compatibility axioms of a multiplication against a
    faithful module: commutative, associative, nilpotent multiplication
    operators, every operator inside the algebra span."""
    if rep.algebra_basis is None:
        raise ValueError("module carries no algebra basis")
    if rep.module_dim != t.dim:
        raise ValueError(f"dimension mismatch: module {rep.module_dim}, tensor {t.dim}")
    commutative = tensor_is_commutative(t)
    associative = tensor_is_associative(t)
    nilpotent = tensor_is_nilpotent(t)
    basis, width = _algebra_echelon(rep)
    phi_cols = []
    in_image = True
    for i in range(t.dim):
        coords = span_coordinates(basis, matrix_to_sparse(t.mu(i)), width)
        if coords is None:
            in_image = False
            break
        phi_cols.append(coords)
    phi = None
    if in_image:
        phi = tuple(tuple(col[k] for col in phi_cols) for k in range(len(rep.algebra_basis)))
    return CompatibilityReport(
        commutative=commutative,
        associative=associative,
        all_nilpotent=nilpotent,
        mu_in_image=in_image,
        phi_matrix=phi,
    )


@dataclass(frozen=True)
class TrilinearForm:
    """Fully symmetric trilinear coefficient table."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        c = self.coeffs
        m = self.dim
        for a in range(m):
            for b in range(m):
                for d in range(m):
                    v = c[a][b][d]
                    if not (v == c[b][a][d] == c[a][d][b]):
                        raise ValueError("trilinear form is not totally symmetric")

    @staticmethod
    def from_sparse(m: int, items) -> "TrilinearForm":
        from itertools import permutations

        c = [[[Q0] * m for _ in range(m)] for _ in range(m)]
        seen = {}
        for a, b, d, v in items:
            key = tuple(sorted((a, b, d)))
            v = Fraction(v)
            if key in seen and seen[key] != v:
                raise ValueError(f"conflicting coefficients for {key}")
            seen[key] = v
        for (a, b, d), v in seen.items():
            for p, q, r in set(permutations((a, b, d))):
                c[p][q][r] = v
        return TrilinearForm(m, tuple(tuple(tuple(r) for r in p) for p in c))


def from_trilinear(l: int, c: TrilinearForm) -> StructureTensor:
    """Structure tensor on the 2l-dim symplectic module determined by a
    symmetric trilinear form on the quotient by the fixed Lagrangian
    Z = <e_1..e_l>: omega(uv, w) = c(u, v, w), so products of the e_{-a}
    land in Z and all triple products vanish."""
    if c.dim != l:
        raise ValueError("form dimension must equal l")
    items = []
    for a in range(l):
        for b in range(l):
            for j in range(l):
                v = c.coeffs[a][b][j]
                if v:
                    items.append((l + a, l + b, j, v))
    return StructureTensor.from_sparse(2 * l, items)


def linear_compat_space(rep: MatrixRep) -> list[Matrix]:
    """Basis of the linear maps phi: V -> algebra span with symmetric action,
    rho(phi(v)) w = rho(phi(w)) v; unknowns are coordinates over the
    algebra basis. Returns one (algebra_dim x module_dim) matrix per basis
    element of the solution space."""
    if rep.algebra_basis is None:
        raise ValueError("module carries no algebra basis")
    n = rep.module_dim
    nb = len(rep.algebra_basis)
    rows = _commutativity_rows(rep)
    kernel = kernel_basis(rows, nb * n)
    return [_reshape_phi(v, nb, n) for v in kernel]


def _commutativity_rows(rep: MatrixRep):
    n = rep.module_dim
    rows = []
    for i in range(n):
        for j in range(i):
            for r in range(n):
                row: dict[int, Fraction] = {}
                for k, bmat in enumerate(rep.algebra_basis):
                    if bmat[r][j]:
                        row[k * n + i] = row.get(k * n + i, Q0) + bmat[r][j]
                    if bmat[r][i]:
                        row[k * n + j] = row.get(k * n + j, Q0) - bmat[r][i]
                if row:
                    rows.append(row)
    return rows


def _reshape_phi(vec, nb: int, n: int) -> Matrix:
    return tuple(tuple(vec[k * n + j] for j in range(n)) for k in range(nb))


@dataclass(frozen=True)
class ScanCandidate:
    phi: Matrix
    tensor: StructureTensor
    commutative: bool
    associative: bool
    all_nilpotent: bool

    @property
    def passes(self) -> bool:
        return self.commutative and self.associative and self.all_nilpotent


def b_fixed_scan(rep: MatrixRep, space: list[Matrix]) -> list[ScanCandidate]:
    """Highest-weight candidates inside the symmetric-action space: joint
    kernel of the raising action, split into torus-weight components, each
    tested for associativity and nilpotency."""
    if not space:
        return []
    n = rep.module_dim
    nb = len(rep.algebra_basis)
    rows = _commutativity_rows(rep)
    rows.extend(_raising_rows(rep))
    kernel = kernel_basis(rows, nb * n)
    weights = _coordinate_weights(rep)
    homogeneous: list = []
    ech = SparseEchelon(nb * n)
    for vec in kernel:
        by_weight: dict[tuple, list] = {}
        for idx, v in enumerate(vec):
            if v:
                by_weight.setdefault(weights[idx], []).append((idx, v))
        for comp in by_weight.values():
            if ech.add(dict(comp)):
                dense = [Q0] * (nb * n)
                for idx, v in comp:
                    dense[idx] = v
                homogeneous.append(tuple(dense))
    out = []
    for vec in homogeneous:
        phi = _reshape_phi(vec, nb, n)
        tensor = tensor_from_phi(rep, phi)
        out.append(
            ScanCandidate(
                phi=phi,
                tensor=tensor,
                commutative=tensor_is_commutative(tensor),
                associative=tensor_is_associative(tensor),
                all_nilpotent=tensor_is_nilpotent(tensor),
            )
        )
    return out


def _raising_rows(rep: MatrixRep):
    """Linear equations for (x . phi) = 0: [x, phi(e_j)] = phi(x e_j)."""
    n = rep.module_dim
    rows = []
    for xm in rep.x:
        brackets = [bracket(xm, bmat) for bmat in rep.algebra_basis]
        for j in range(n):
            for r in range(n):
                for c in range(n):
                    row: dict[int, Fraction] = {}
                    for k, br in enumerate(brackets):
                        if br[r][c]:
                            row[k * n + j] = row.get(k * n + j, Q0) + br[r][c]
                    for m in range(n):
                        if xm[m][j]:
                            for k, bmat in enumerate(rep.algebra_basis):
                                if bmat[r][c]:
                                    key = k * n + m
                                    row[key] = row.get(key, Q0) - xm[m][j] * bmat[r][c]
                    if row:
                        rows.append(row)
    return rows


def _coordinate_weights(rep: MatrixRep):
    """Torus weight of each phi coordinate: wt(B_k) - wt(e_j)."""
    n = rep.module_dim
    rank = rep.rank
    module_wts = [tuple(rep.h[i][j][j] for i in range(rank)) for j in range(n)]
    for i in range(rank):
        for j in range(n):
            for k in range(n):
                if j != k and rep.h[i][j][k]:
                    raise AssertionError("module h-action is not diagonal")
    basis_wts = []
    for bmat in rep.algebra_basis:
        wt = []
        for i in range(rank):
            br = bracket(rep.h[i], bmat)
            ratio = None
            for r in range(n):
                for c in range(n):
                    if bmat[r][c]:
                        ratio = br[r][c] / bmat[r][c]
                        break
                if ratio is not None:
                    break
            scaled = tuple(tuple(ratio * v for v in row) for row in bmat)
            if br != scaled:
                raise AssertionError("algebra basis element is not a weight vector")
            wt.append(ratio)
        basis_wts.append(tuple(wt))
    return {
        k * n + j: tuple(a - b for a, b in zip(basis_wts[k], module_wts[j]))
        for k in range(len(rep.algebra_basis))
        for j in range(n)
    }


def tensor_from_phi(rep: MatrixRep, phi: Matrix) -> StructureTensor:
    """Multiplication induced by a linear map into the algebra span:
    e_i . e_j = rho(phi(e_i)) e_j."""
    n = rep.module_dim
    items = []
    for i in range(n):
        op = zeros(n, n)
        for k, bmat in enumerate(rep.algebra_basis):
            v = phi[k][i]
            if v:
                for r in range(n):
                    for s in range(n):
                        if bmat[r][s]:
                            op[r][s] += v * bmat[r][s]
        for j in range(n):
            for r in range(n):
                if op[r][j]:
                    items.append((i, j, r, op[r][j]))
    return StructureTensor.from_sparse(n, items)


@dataclass(frozen=True)
class FlagAmbient:
    """Maximal parabolic ambient for the subalgebra construction."""

    family: str
    rank: int
    node: int


@dataclass(frozen=True)
class SubalgebraReport:
    ambient: FlagAmbient
    basis: tuple[Matrix, ...]
    abelian: bool
    complement_to_p: bool
    dimension: int
    all_nilpotent: bool

    @property
    def all_checks_pass(self) -> bool:
        return self.abelian and self.complement_to_p and self.all_nilpotent


def subalgebra_from_mult(ambient: FlagAmbient, t: StructureTensor) -> SubalgebraReport:
    """Graph subalgebra {u + phi(u)} inside the ambient simple algebra.

    Supported ambient: A-type, node 1, where the opposite radical is the
    block column and the multiplication lives on it. The tensor must pass
    verify_compatible on the corresponding tautological module.
    """
    if ambient.family != "A" or ambient.node != 1:
        raise ValueError(
            "unsupported ambient: only A-type node 1 carries the block-column "
            "radical this construction covers"
        )
    l = ambient.rank
    if t.dim != l:
        raise ValueError(f"tensor dimension {t.dim} does not match rank {l}")
    if l == 1:
        # one-dimensional radical: the only nilpotent multiplication is zero
        if not t.is_zero():
            raise ValueError("incompatible tensor: all_nilpotent fails")
    else:
        report = verify_compatible(sl_tautological(l), t)
        if not report.compatible:
            raise ValueError(f"incompatible tensor: {report.first_failure()} fails")
    n = l + 1
    basis = []
    for i in range(l):
        mu = t.mu(i)
        m = zeros(n, n)
        m[1 + i][0] = Q1
        for r in range(l):
            for s in range(l):
                m[1 + r][1 + s] = mu[r][s]
        basis.append(tuple(tuple(row) for row in m))
    abelian = all(
        is_zero_matrix(bracket(a, b)) for ai, a in enumerate(basis) for b in basis[:ai]
    )
    # Projection to the block column is the identity, so the intersection
    # with p (matrices with zero block column) is trivial and dimensions add.
    proj = SparseEchelon(l)
    for m in basis:
        proj.add({r: m[1 + r][0] for r in range(l) if m[1 + r][0]})
    complement = proj.rank == l and (l + (n * n - 1 - l)) == n * n - 1
    nilpotent = all(mat_pow_is_zero(m, n) for m in basis)
    combined = tuple(
        tuple(sum(m[r][c] for m in basis) for c in range(n)) for r in range(n)
    )
    nilpotent = nilpotent and mat_pow_is_zero(combined, n)
    return SubalgebraReport(
        ambient=ambient,
        basis=tuple(basis),
        abelian=abelian,
        complement_to_p=complement,
        dimension=len(basis),
        all_nilpotent=nilpotent,
    )


def truncated_power_algebra(n: int) -> AlgebraSpec:
    """Span of x, x^2, .., x^n with x^i x^j = x^{i+j}, zero past degree n."""
    if n < 1:
        raise ValueError("need n >= 1")
    items = [(i, j, i + j + 1, 1) for i in range(n) for j in range(n) if i + j + 2 <= n]
    names = tuple("x" if k == 0 else f"x{k + 1}" for k in range(n))
    return AlgebraSpec(names=names, tensor=StructureTensor.from_sparse(n, items))


_A18_BASIS = (
    (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3),
    (4, 0), (3, 1), (2, 2), (1, 3), (0, 4), (2, 3), (3, 2), (5, 0), (0, 5),
)


def _a18_reduce(a: int, b: int) -> dict:
    """Normal form of the monomial x^a y^b modulo the defining relations
    x^5 + y^5 = x^3 y^3 and x^4 y = x y^4 = 0."""
    if a >= 4 and b >= 1:
        return {}
    if b >= 4 and a >= 1:
        return {}
    if a >= 6 or b >= 6:
        return {}
    if (a, b) == (3, 3):
        return {(5, 0): Q1, (0, 5): Q1}
    return {(a, b): Q1}


def build_a18() -> tuple[AlgebraSpec, dict]:
    """The 18-dimensional two-generator nilpotent algebra whose structure
    tensor admits only finitely many rescalings, with its verification facts."""
    idx = {m: k for k, m in enumerate(_A18_BASIS)}
    items = []
    for (a1, b1), i in idx.items():
        for (a2, b2), j in idx.items():
            for (a, b), v in _a18_reduce(a1 + a2, b1 + b2).items():
                items.append((i, j, idx[(a, b)], v))
    tensor = StructureTensor.from_sparse(18, items)
    names = tuple(
        ("x" if a == 1 else f"x{a}" if a else "") + ("y" if b == 1 else f"y{b}" if b else "")
        for a, b in _A18_BASIS
    )
    spec = AlgebraSpec(names=names, tensor=tensor)

    def product(i, j):
        return tuple(tensor.entries[i][j][k] for k in range(18))

    x, y = idx[(1, 0)], idx[(0, 1)]
    x4, x5, y3, x3 = idx[(4, 0)], idx[(5, 0)], idx[(0, 3)], idx[(3, 0)]
    e_x5 = tuple(Q1 if k == x5 else Q0 for k in range(18))
    e_x5_y5 = tuple(Q1 if k in (x5, idx[(0, 5)]) else Q0 for k in range(18))
    powers = [tuple(Q1 if k == x else Q0 for k in range(18))]
    mu_x = tensor.mu(x)
    for _ in range(7):
        powers.append(mat_vec(mu_x, powers[-1]))
    degree7_zero = all(
        not any(product(i, j))
        for (a1, b1), i in idx.items()
        for (a2, b2), j in idx.items()
        if a1 + a2 + b1 + b2 >= 7
    )
    facts = {
        "dimension": 18,
        "basis": names,
        "x_times_x4_is_x5_nonzero": product(x, x4) == e_x5 and any(e_x5),
        "x3_times_y3_is_x5_plus_y5": product(x3, y3) == e_x5_y5,
        "x4_times_y_is_zero": not any(product(x4, y)),
        "x5_nonzero": any(powers[4]),
        "x6_zero": not any(powers[5]),
        "x7_zero": not any(powers[6]),
        "degree_ge_7_vanishes": degree7_zero,
        "commutative": tensor_is_commutative(tensor),
        "associative": tensor_is_associative(tensor),
        "all_nilpotent": tensor_is_nilpotent(tensor),
    }
    return spec, facts


def scaling_action(g: Matrix, t: StructureTensor) -> StructureTensor:
    """Transport of structure: (g.t)(u, v) = g t(g^{-1}u, g^{-1}v)."""
    n = t.dim
    if len(g) != n or len(g[0]) != n:
        raise ValueError("matrix size does not match the tensor")
    gi = mat_inverse(freeze_matrix(g))
    c = t.entries
    out = [[[Q0] * n for _ in range(n)] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            row = c[p][q]
            if not any(row):
                continue
            for r in range(n):
                v = row[r]
                if not v:
                    continue
                for i in range(n):
                    if gi[p][i]:
                        for j in range(n):
                            if gi[q][j]:
                                w = v * gi[p][i] * gi[q][j]
                                for k in range(n):
                                    if g[k][r]:
                                        out[i][j][k] += w * g[k][r]
    return StructureTensor(n, tuple(tuple(tuple(r) for r in p) for p in out))


def freeze_matrix(g) -> Matrix:
    return tuple(tuple(Fraction(v) for v in row) for row in g)


def isotypic_vanishing_check(blocks, t: StructureTensor) -> bool:
    """Whether products across distinct blocks of a decomposition vanish."""
    owner = {}
    for bi, block in enumerate(blocks):
        for i in block:
            owner[i] = bi
    for i in range(t.dim):
        for j in range(t.dim):
            if owner.get(i) != owner.get(j) and any(t.entries[i][j]):
                return False
    return True
