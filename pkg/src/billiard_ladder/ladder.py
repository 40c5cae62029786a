"""Plane-wave form of the eigenfunctions and the raising/lowering operator.

Each eigenfunction is half the real (or imaginary) part of a signed sum of
plane waves ``exp(i (a*ux*x + b*uy*y))`` with integer lattice frequencies
``(a, b)``. The diagonal ladder operator multiplies every plane wave by a
further plane wave, so its ``p``-th power adds ``p * shift`` to each
term's integer frequencies. All operator algebra therefore happens on
integers and is exact.

Lattice units are ``(1, 1)`` for the right isosceles triangle and
``(2/3, 2/sqrt(3))`` for the equilateral triangle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    SQRT3,
    BilliardKind,
    EigenfunctionSpec,
    SymmetryFamily,
    make_state,
)
from .errors import InvalidQuantumNumbers


@dataclass(frozen=True)
class LatticeBasis:
    unit_x: float
    unit_y: float


ISOSCELES_BASIS = LatticeBasis(1.0, 1.0)
EQUILATERAL_BASIS = LatticeBasis(2.0 / 3.0, 2.0 / SQRT3)


class Reduction(str, enum.Enum):
    HALF_RE = "half_re"
    HALF_IM = "half_im"


@dataclass(frozen=True)
class PlaneWaveTerm:
    sign: int
    a: int
    b: int
    shift_a: int
    shift_b: int


@dataclass(frozen=True)
class PlaneWaveSum:
    basis: LatticeBasis
    reduction: Reduction
    terms: tuple[PlaneWaveTerm, ...]

    @property
    def kind(self) -> BilliardKind:
        if self.basis == ISOSCELES_BASIS:
            return BilliardKind.RIGHT_ISOSCELES
        return BilliardKind.EQUILATERAL

    @property
    def family(self) -> SymmetryFamily:
        if self.kind is BilliardKind.RIGHT_ISOSCELES:
            return SymmetryFamily.DEFAULT
        if self.reduction is Reduction.HALF_IM:
            return SymmetryFamily.COSINE
        return SymmetryFamily.SINE

    def frequencies(self) -> list[tuple[int, int, int]]:
        """``(sign, a, b)`` triples in canonical order."""
        return [(t.sign, t.a, t.b) for t in self.terms]


def plane_wave_rep(spec: EigenfunctionSpec) -> PlaneWaveSum:
    """Exact plane-wave sum for ``spec``.

    Terms are listed in the diagonal-slot order of the operator matrix;
    each term carries the shift of the slot it sits in.
    """
    m, n = spec.m, spec.n
    T = PlaneWaveTerm
    if spec.kind is BilliardKind.RIGHT_ISOSCELES:
        terms = (
            T(+1, m, -n, 2 * n, 0),
            T(-1, m, n, 2 * n, 0),
            T(-1, -n, m, 0, 2 * n),
            T(+1, n, m, 0, 2 * n),
        )
        return PlaneWaveSum(ISOSCELES_BASIS, Reduction.HALF_RE, terms)

    # slot shifts of the equilateral operator, in lattice units
    s1, s2, s3, s4, s5 = (6 * n, 0), (-3 * n, 3 * n), (-3 * n, -3 * n), (3 * n, -3 * n), (3 * n, 3 * n)
    if spec.family is SymmetryFamily.COSINE:
        terms = (
            T(+1, 2 * m - n, n, *s1),
            T(-1, 2 * m - n, -n, *s1),
            T(-1, 2 * n - m, m, *s2),
            T(+1, 2 * n - m, -m, *s3),
            T(-1, m + n, n - m, *s4),
            T(+1, m + n, m - n, *s5),
        )
        return PlaneWaveSum(EQUILATERAL_BASIS, Reduction.HALF_IM, terms)
    terms = (
        T(+1, 2 * m - n, -n, *s1),
        T(-1, 2 * m - n, n, *s1),
        T(+1, 2 * n - m, m, *s2),
        T(-1, 2 * n - m, -m, *s3),
        T(-1, m + n, n - m, *s4),
        T(+1, m + n, m - n, *s5),
    )
    return PlaneWaveSum(EQUILATERAL_BASIS, Reduction.HALF_RE, terms)


def ladder_shift(pws: PlaneWaveSum, p: int) -> PlaneWaveSum:
    """Apply the ladder operator ``p`` times (``p < 0`` lowers)."""
    p = int(p)
    terms = tuple(
        replace(t, a=t.a + p * t.shift_a, b=t.b + p * t.shift_b) for t in pws.terms
    )
    return replace(pws, terms=terms)


def reduce(pws: PlaneWaveSum, x, y=None):
    """Evaluate the plane-wave sum.

    Accepts either a point ``(x, y)`` as the second argument, returning a
    float, or coordinate arrays ``x`` and ``y``, returning an array.
    """
    scalar = y is None
    if scalar:
        x, y = x
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    ux, uy = pws.basis.unit_x, pws.basis.unit_y
    total = np.zeros(np.broadcast(x, y).shape, dtype=complex)
    for t in pws.terms:
        total += t.sign * np.exp(1j * (t.a * ux * x + t.b * uy * y))
    part = total.real if pws.reduction is Reduction.HALF_RE else total.imag
    out = 0.5 * part
    return float(out) if scalar else out


def canonical_state_of(pws: PlaneWaveSum) -> EigenfunctionSpec:
    """Read ``(m, n)`` back off the leading term and validate them.

    Raises ``InvalidQuantumNumbers`` when lowering has gone past the bottom
    of the tower.
    """
    first = pws.terms[0]
    n = abs(first.b)
    if pws.kind is BilliardKind.RIGHT_ISOSCELES:
        m = first.a
    else:
        if (first.a + n) % 2:
            raise InvalidQuantumNumbers(f"term {first} is not on the eigenfunction lattice")
        m = (first.a + n) // 2
    state = make_state(pws.kind, pws.family, m, n)
    if plane_wave_rep(state).frequencies() != pws.frequencies():
        raise InvalidQuantumNumbers(f"term pattern does not match any ({m},{n}) eigenstate")
    return state
