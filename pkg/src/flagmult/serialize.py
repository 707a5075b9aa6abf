"""JSON conventions: exact rationals as [numerator, denominator] pairs,
integer data as plain ints, all set-valued output sorted."""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix
from .multiplications import (
    AlgebraSpec,
    CompatibilityReport,
    StructureTensor,
    SubalgebraReport,
    TrilinearForm,
)
from .tensor import IrrepDecomposition
from .weights import WeightSystem


def rational_out(v) -> list:
    f = Fraction(v)
    return [f.numerator, f.denominator]


def rational_in(v) -> Fraction:
    if isinstance(v, (int, float)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return Fraction(int(v[0]), int(v[1]))
    raise ValueError(f"cannot parse rational from {v!r}")


def matrix_out(m: Matrix) -> list:
    return [[rational_out(v) for v in row] for row in m]


def tensor_out(t: StructureTensor) -> dict:
    return {
        "n": t.dim,
        "entries": [[i, j, k, rational_out(v)] for i, j, k, v in t.sparse_items()],
    }


def tensor_in(doc: dict) -> StructureTensor:
    n = int(doc["n"])
    items = [(int(i), int(j), int(k), rational_in(v)) for i, j, k, v in doc["entries"]]
    for i, j, k, _ in items:
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise ValueError("structure tensor index out of range")
    return StructureTensor.from_sparse(n, items)


def trilinear_in(doc: dict) -> TrilinearForm:
    m = int(doc["l"])
    items = [(int(a), int(b), int(d), rational_in(v)) for a, b, d, v in doc["entries"]]
    for a, b, d, _ in items:
        if not (0 <= a < m and 0 <= b < m and 0 <= d < m):
            raise ValueError("trilinear index out of range")
    return TrilinearForm.from_sparse(m, items)


def weight_system_out(ws: WeightSystem) -> dict:
    return {
        "highest": list(ws.highest),
        "dimension": ws.dimension,
        "table": [[list(w), m] for w, m in sorted(ws.table.items())],
    }


def decomposition_out(dec: IrrepDecomposition) -> dict:
    return {"summands": [[list(w), m] for w, m in dec.sorted_items()]}


def compat_report_out(r: CompatibilityReport) -> dict:
    return {
        "commutative": r.commutative,
        "associative": r.associative,
        "all_nilpotent": r.all_nilpotent,
        "mu_in_image": r.mu_in_image,
        "compatible": r.compatible,
        "phi_matrix": matrix_out(r.phi_matrix) if r.phi_matrix is not None else None,
    }


def subalgebra_report_out(r: SubalgebraReport) -> dict:
    return {
        "ambient": {"family": r.ambient.family, "rank": r.ambient.rank,
                    "node": r.ambient.node},
        "dimension": r.dimension,
        "abelian": r.abelian,
        "complement_to_p": r.complement_to_p,
        "all_nilpotent": r.all_nilpotent,
        "all_checks_pass": r.all_checks_pass,
        "basis": [matrix_out(m) for m in r.basis],
    }


def algebra_spec_out(spec: AlgebraSpec) -> dict:
    return {"names": list(spec.names), "tensor": tensor_out(spec.tensor)}
