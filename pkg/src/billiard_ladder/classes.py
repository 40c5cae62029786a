"""Equivalence classes ``c = m mod k*n`` and towers of states."""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BilliardKind,
    EigenfunctionSpec,
    SymmetryFamily,
    as_family,
    as_kind,
    make_state,
)
from .errors import EmptyClass, InvalidQuantumNumbers, ZeroFunctionError

# residue periods scanned before a class is declared empty
_MAX_PERIODS = 4


@dataclass(frozen=True)
class EquivalenceClass:
    kind: BilliardKind
    family: SymmetryFamily
    n: int
    index: int

    @property
    def modulus_factor(self) -> int:
        return self.kind.modulus_factor

    @property
    def modulus(self) -> int:
        return self.modulus_factor * self.n

    def __str__(self) -> str:
        return f"class {self.index} mod {self.modulus}"


def class_index(spec: EigenfunctionSpec) -> EquivalenceClass:
    k = spec.kind.modulus_factor
    return EquivalenceClass(spec.kind, spec.family, spec.n, spec.m % (k * spec.n))


def _check_class_args(kind, family, n, c):
    kind, family = as_kind(kind), as_family(family)
    if int(n) != n or n < 1:
        raise InvalidQuantumNumbers(f"n must be a positive integer, got {n!r}")
    modulus = kind.modulus_factor * n
    if int(c) != c or not 0 <= c < modulus:
        raise InvalidQuantumNumbers(f"class index must lie in [0, {modulus}), got {c!r}")
    return kind, family, int(n), int(c)


def lowest_in_class(kind, family, n: int, c: int) -> EigenfunctionSpec:
    """Smallest valid ``m > n`` with ``m = c (mod k*n)``.

    Degenerate labels (zero functions) are skipped; the scan moves on to
    the next residue period.
    """
    kind, family, n, c = _check_class_args(kind, family, n, c)
    modulus = kind.modulus_factor * n
    m = c
    while m <= n:
        m += modulus
    for _ in range(_MAX_PERIODS):
        try:
            return make_state(kind, family, m, n)
        except ZeroFunctionError:
            m += modulus
    raise EmptyClass(f"no valid state with n={n} in class {c} mod {modulus}")


def tower(kind, family, n: int, c: int, count: int) -> list[EigenfunctionSpec]:
    """The ``count`` lowest members of a class, by ascending energy."""
    if count < 1:
        raise ValueError("count must be positive")
    base = lowest_in_class(kind, family, n, c)
    return [step(base, p) for p in range(count)]


def step(spec: EigenfunctionSpec, p: int) -> EigenfunctionSpec:
    """Move ``p`` rungs along the tower: ``m -> m + k*n*p``."""
    m = spec.m + spec.kind.modulus_factor * spec.n * int(p)
    return make_state(spec.kind, spec.family, m, spec.n)
