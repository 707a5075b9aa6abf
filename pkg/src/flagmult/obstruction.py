"""Exclusion criteria for nontrivial compatible multiplications on
irreducible modules: the coroot-coefficient candidate filter and the
weight-lattice witness search, with machine-checkable reports."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .roots import (
    Coords,
    Labels,
    RootDatum,
    coroot_coordinates,
    fundamental_weight,
    is_root,
    labels_to_coords,
)
from .tensor import dual_tensor_adjoint
from .weights import dual_weight, weight_system


@dataclass(frozen=True)
class CandidateReport:
    """Fundamental weights that survive the highest-short-coroot filter."""

    lie_type: object
    candidate_indices: tuple[int, ...]
    short_coroot_coefficients: tuple[int, ...]


@dataclass(frozen=True)
class GammaEntry:
    mu: Labels                 # summand highest weight
    gamma: Coords              # mu - lam*, in the simple-root basis (may be fractional)
    gamma_status: str          # positive_root | zero | not_root
    witness: Labels | None = None


@dataclass(frozen=True)
class ObstructionReport:
    lie_type: object
    lam: Labels
    entries: tuple[GammaEntry, ...]
    verdict: str               # Excluded | Inconclusive
    multiplicity_free: bool


def shortroot_candidates(rd: RootDatum) -> CandidateReport:
    """Indices whose simple coroot enters the highest short coroot with
    coefficient one. The coroot of the highest root is that coroot."""
    coeffs = coroot_coordinates(rd, rd.highest_root)
    return CandidateReport(
        lie_type=rd.lie_type,
        candidate_indices=tuple(i + 1 for i, c in enumerate(coeffs) if c == 1),
        short_coroot_coefficients=coeffs,
    )


def candidate_gammas(rd: RootDatum, lam: Labels) -> tuple[GammaEntry, ...]:
    """For each summand mu of V(lam)^* (x) adjoint, classify gamma = mu - lam*."""
    lam = _check_fundamental(rd, lam)
    lam_star = dual_weight(rd, lam)
    entries = []
    for mu, _ in dual_tensor_adjoint(rd, lam).sorted_items():
        diff = tuple(a - b for a, b in zip(mu, lam_star))
        gamma = labels_to_coords(rd, diff)
        if all(x == 0 for x in gamma):
            status = "zero"
        else:
            status = "positive_root" if is_root(rd, gamma) == "positive" else "not_root"
        gamma = tuple(int(x) if Fraction(x).denominator == 1 else x for x in gamma)
        entries.append(GammaEntry(mu=mu, gamma=gamma, gamma_status=status))
    return tuple(entries)


def find_witness(rd: RootDatum, lam: Labels, gamma: Coords) -> Labels | None:
    """First weight nu of V(lam), in lexicographic label order, with
    nu + gamma a weight and nu + lam* + gamma not a positive root.

    A None return means no such weight exists; the scan is exhaustive.
    """
    if is_root(rd, gamma) != "positive":
        raise ValueError(f"{gamma} is not a positive root")
    lam = _check_fundamental(rd, lam)
    ws = weight_system(rd, lam)
    lam_star = dual_weight(rd, lam)
    star_coords = labels_to_coords(rd, lam_star)
    gamma_labels = _root_labels(rd, gamma)
    for nu in ws.support():
        shifted = tuple(a + b for a, b in zip(nu, gamma_labels))
        if shifted not in ws.table:
            continue
        total = tuple(
            Fraction(c) + s + g
            for c, s, g in zip(labels_to_coords(rd, nu), star_coords, gamma)
        )
        if is_root(rd, total) != "positive":
            return nu
    return None


def witness_is_valid(rd: RootDatum, lam: Labels, gamma: Coords, nu: Labels) -> bool:
    """Re-check the three witness conditions literally against module data."""
    ws = weight_system(rd, tuple(lam))
    nu = tuple(nu)
    if nu not in ws.table:
        return False
    gamma_labels = _root_labels(rd, gamma)
    if tuple(a + b for a, b in zip(nu, gamma_labels)) not in ws.table:
        return False
    star_coords = labels_to_coords(rd, dual_weight(rd, tuple(lam)))
    total = tuple(
        Fraction(c) + s + g for c, s, g in zip(labels_to_coords(rd, nu), star_coords, gamma)
    )
    return is_root(rd, total) != "positive"


def obstruction_report(rd: RootDatum, lam: Labels) -> ObstructionReport:
    """Assemble gammas and witnesses; Excluded iff every positive-root gamma
    has a witness (so no nontrivial compatible multiplication can exist)."""
    lam = _check_fundamental(rd, lam)
    decomposition = dual_tensor_adjoint(rd, lam)
    entries = []
    excluded = True
    for entry in candidate_gammas(rd, lam):
        if entry.gamma_status == "positive_root":
            nu = find_witness(rd, lam, entry.gamma)
            if nu is None:
                excluded = False
            entries.append(GammaEntry(entry.mu, entry.gamma, entry.gamma_status, nu))
        else:
            entries.append(entry)
    return ObstructionReport(
        lie_type=rd.lie_type,
        lam=lam,
        entries=tuple(entries),
        verdict="Excluded" if excluded else "Inconclusive",
        multiplicity_free=decomposition.multiplicity_free(),
    )


def _check_fundamental(rd: RootDatum, lam) -> Labels:
    lam = tuple(lam)
    if sorted(lam) != [0] * (rd.rank - 1) + [1]:
        raise ValueError(f"{lam} is not a fundamental weight")
    return lam


def _root_labels(rd: RootDatum, gamma: Coords) -> Labels:
    return tuple(
        sum(rd.cartan[i][j] * gamma[j] for j in range(rd.rank)) for i in range(rd.rank)
    )


def report_as_dict(report: ObstructionReport) -> dict:
    return {
        "type": str(report.lie_type),
        "highest_weight": list(report.lam),
        "multiplicity_free": report.multiplicity_free,
        "verdict": report.verdict,
        "summands": [
            {
                "mu": list(e.mu),
                "gamma": [str(x) for x in e.gamma],
                "gamma_status": e.gamma_status,
                "witness": list(e.witness) if e.witness is not None else None,
            }
            for e in report.entries
        ],
    }
