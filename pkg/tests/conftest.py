"""Shared test helpers: conversion tables from the per-type orthogonal
coordinate models into Dynkin labels, so externally stated weights and
witnesses can be validated verbatim against the engine."""

from fractions import Fraction

import pytest

from flagmult.roots import LieType, build


def eps_to_labels(family: str, rank: int, coeffs, zeta=Fraction(0)):
    """Dynkin labels of sum(coeffs[i] eps_i) (+ zeta for E6) in the
    conventional coordinate model of each type."""
    c = [Fraction(v) for v in coeffs]
    l = rank
    if family == "A":
        assert len(c) == l + 1
        return tuple(int(c[j] - c[j + 1]) for j in range(l))
    if family == "B":
        assert len(c) == l
        return tuple(int(c[j] - c[j + 1]) for j in range(l - 1)) + (int(2 * c[l - 1]),)
    if family == "C":
        assert len(c) == l
        return tuple(int(c[j] - c[j + 1]) for j in range(l - 1)) + (int(c[l - 1]),)
    if family == "D":
        assert len(c) == l
        return tuple(int(c[j] - c[j + 1]) for j in range(l - 1)) + (int(c[l - 2] + c[l - 1]),)
    if family == "F":
        assert len(c) == 4
        return (int(c[1] - c[2]), int(c[2] - c[3]), int(2 * c[3]),
                int(c[0] - c[1] - c[2] - c[3]))
    if family == "G":
        assert len(c) == 3
        second = Fraction(2 * c[1] - c[0] - c[2], 3)
        assert second.denominator == 1
        return (int(c[0] - c[1]), int(second))
    if family == "E" and rank == 6:
        assert len(c) == 6
        mean = sum(c) / 6
        c = [v - mean for v in c]
        out = [c[0] - c[1], c[3] + c[4] + c[5] - zeta,
               c[1] - c[2], c[2] - c[3], c[3] - c[4], c[4] - c[5]]
        assert all(Fraction(v).denominator == 1 for v in out)
        return tuple(int(v) for v in out)
    if family == "E" and rank == 7:
        assert len(c) == 8
        mean = sum(c) / 8
        c = [v - mean for v in c]
        out = [c[1] - c[2], c[4] + c[5] + c[6] + c[7],
               c[2] - c[3], c[3] - c[4], c[4] - c[5], c[5] - c[6], c[6] - c[7]]
        assert all(Fraction(v).denominator == 1 for v in out)
        return tuple(int(v) for v in out)
    raise ValueError(f"no coordinate model for {family}{rank}")


def eps(*pairs):
    """Sparse coefficient vector builder: eps(n, (i, v), ...) with 1-based i."""
    n = pairs[0]
    out = [Fraction(0)] * n
    for i, v in pairs[1:]:
        out[i - 1] += Fraction(v)
    return out


@pytest.fixture(scope="session")
def datum():
    return lambda fam, rank: build(LieType(fam, rank))
