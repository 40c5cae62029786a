"""Triangle billiard geometry and closed-form Dirichlet eigenfunctions.

Two billiards are supported, both with side length ``pi``:

* the right isosceles triangle with vertices ``(0, 0)``, ``(pi, 0)``,
  ``(pi, pi)``, eigenfunctions ``sin(mx) sin(ny) - sin(nx) sin(my)``;
* the equilateral triangle with vertices ``(0, 0)``, ``(pi, 0)``,
  ``(pi/2, sqrt(3) pi/2)``, with a cosine and a sine family of
  three-term eigenfunctions.

No normalisation is applied anywhere.
"""
from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import FamilyMismatch, InvalidQuantumNumbers, ZeroFunctionError

SQRT3 = math.sqrt(3.0)


class BilliardKind(str, enum.Enum):
    RIGHT_ISOSCELES = "iso"
    EQUILATERAL = "equi"

    @property
    def modulus_factor(self) -> int:
        """``k`` in the class label ``c = m mod k*n``."""
        return 2 if self is BilliardKind.RIGHT_ISOSCELES else 3


class SymmetryFamily(str, enum.Enum):
    DEFAULT = "default"
    COSINE = "cos"
    SINE = "sin"


_ALLOWED_FAMILIES = {
    BilliardKind.RIGHT_ISOSCELES: (SymmetryFamily.DEFAULT,),
    BilliardKind.EQUILATERAL: (SymmetryFamily.COSINE, SymmetryFamily.SINE),
}


def as_kind(kind) -> BilliardKind:
    if isinstance(kind, BilliardKind):
        return kind
    try:
        return BilliardKind(kind)
    except ValueError:
        try:
            return BilliardKind[str(kind).upper()]
        except KeyError:
            raise ValueError(f"unknown billiard kind {kind!r}") from None


def as_family(family) -> SymmetryFamily:
    if isinstance(family, SymmetryFamily):
        return family
    try:
        return SymmetryFamily(family)
    except ValueError:
        try:
            return SymmetryFamily[str(family).upper()]
        except KeyError:
            raise ValueError(f"unknown symmetry family {family!r}") from None


class QuantumNumbers(NamedTuple):
    m: int
    n: int


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class EigenfunctionSpec:
    """Identity of one eigenstate. Build it with :func:`make_state`."""

    kind: BilliardKind
    family: SymmetryFamily
    m: int
    n: int
    energy: float

    @property
    def qn(self) -> QuantumNumbers:
        return QuantumNumbers(self.m, self.n)

    @property
    def key(self) -> tuple[str, str, int, int]:
        return (self.kind.value, self.family.value, self.m, self.n)

    def __str__(self) -> str:
        label = self.kind.value
        if self.family is not SymmetryFamily.DEFAULT:
            label += f"/{self.family.value}"
        return f"{label} ({self.m},{self.n})"


def _energy(kind: BilliardKind, m: int, n: int) -> float:
    if kind is BilliardKind.RIGHT_ISOSCELES:
        return float(m * m + n * n)
    return 16.0 * (m * m + n * n - m * n) / 9.0


def make_state(kind, family, m, n) -> EigenfunctionSpec:
    """Validate labels and return the eigenstate spec with its energy.

    Raises
    ------
    InvalidQuantumNumbers
        ``m`` or ``n`` is not an integer, ``n < 1`` or ``m <= n``.
    ZeroFunctionError
        Equilateral sine family with ``m == 2n``; all terms cancel.
    FamilyMismatch
        The symmetry family does not exist for this billiard.
    """
    kind = as_kind(kind)
    family = as_family(family)
    if family not in _ALLOWED_FAMILIES[kind]:
        allowed = ", ".join(f.value for f in _ALLOWED_FAMILIES[kind])
        raise FamilyMismatch(
            f"family {family.value!r} is not defined for {kind.value!r} (allowed: {allowed})"
        )
    for name, value in (("m", m), ("n", n)):
        if isinstance(value, bool) or not isinstance(value, numbers.Integral):
            raise InvalidQuantumNumbers(f"{name} must be an integer, got {value!r}")
    m, n = int(m), int(n)
    if n < 1 or m <= n:
        raise InvalidQuantumNumbers(f"quantum numbers must satisfy m > n >= 1, got ({m},{n})")
    if family is SymmetryFamily.SINE and m == 2 * n:
        raise ZeroFunctionError(f"sine family vanishes identically for m = 2n, got ({m},{n})")
    return EigenfunctionSpec(kind, family, m, n, _energy(kind, m, n))


def energy(spec: EigenfunctionSpec) -> float:
    """Helmholtz eigenvalue in units where hbar^2/2M = 1."""
    return _energy(spec.kind, spec.m, spec.n)


def evaluate(spec: EigenfunctionSpec, x, y) -> np.ndarray:
    """Vectorised closed-form value at arrays of coordinates."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    m, n = spec.m, spec.n
    if spec.kind is BilliardKind.RIGHT_ISOSCELES:
        return np.sin(m * x) * np.sin(n * y) - np.sin(n * x) * np.sin(m * y)
    u = 2.0 * x / 3.0
    v = 2.0 * y / SQRT3
    if spec.family is SymmetryFamily.COSINE:
        return (
            np.cos((2 * m - n) * u) * np.sin(n * v)
            - np.cos((2 * n - m) * u) * np.sin(m * v)
            + np.cos((m + n) * u) * np.sin((m - n) * v)
        )
    return (
        np.sin((2 * m - n) * u) * np.sin(n * v)
        - np.sin((2 * n - m) * u) * np.sin(m * v)
        - np.sin((m + n) * u) * np.sin((m - n) * v)
    )


def eval_point(spec: EigenfunctionSpec, point) -> float:
    x, y = point
    return float(evaluate(spec, np.array([x]), np.array([y]))[0])


def triangle_vertices(kind) -> np.ndarray:
    """Vertices in counter-clockwise order, shape ``(3, 2)``."""
    kind = as_kind(kind)
    if kind is BilliardKind.RIGHT_ISOSCELES:
        return np.array([[0.0, 0.0], [math.pi, 0.0], [math.pi, math.pi]])
    return np.array([[0.0, 0.0], [math.pi, 0.0], [math.pi / 2, SQRT3 * math.pi / 2]])


def contains_array(kind, x, y, inset: float = 0.0) -> np.ndarray:
    """Strict interior test, vectorised.

    ``inset`` is a distance kept clear of every edge, in units of the
    shortest side (``pi`` for both triangles).
    """
    kind = as_kind(kind)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d = inset * math.pi
    if kind is BilliardKind.RIGHT_ISOSCELES:
        # distance to y = x is (x - y)/sqrt(2)
        return (y > d) & (x < math.pi - d) & (x - y > d * math.sqrt(2.0))
    # edge normals have unit length after dividing by 2
    return (
        (y > d)
        & ((SQRT3 * x - y) / 2.0 > d)
        & ((SQRT3 * (math.pi - x) - y) / 2.0 > d)
    )


def contains(kind, point) -> bool:
    x, y = point
    return bool(contains_array(kind, x, y))


def boundary_samples(kind, count: int) -> list[Point]:
    """``count`` points spread uniformly by arc length over the perimeter.

    Samples sit at the midpoints of ``count`` equal arc-length cells, so no
    sample lands on a vertex.
    """
    if count < 3:
        raise ValueError("count must be at least 3")
    verts = triangle_vertices(kind)
    ends = np.roll(verts, -1, axis=0)
    lengths = np.hypot(*(ends - verts).T)
    cum = np.concatenate([[0.0], np.cumsum(lengths)])
    s = (np.arange(count) + 0.5) * cum[-1] / count
    edge = np.minimum(np.searchsorted(cum, s, side="right") - 1, 2)
    t = (s - cum[edge]) / lengths[edge]
    pts = verts[edge] + t[:, None] * (ends[edge] - verts[edge])
    if as_kind(kind) is BilliardKind.EQUILATERAL:
        # recompute y with the interior test's own expressions so rounding
        # never puts a slanted-edge sample strictly inside
        right, left = edge == 1, edge == 2
        pts[right, 1] = SQRT3 * (math.pi - pts[right, 0])
        pts[left, 1] = SQRT3 * pts[left, 0]
    return [Point(float(px), float(py)) for px, py in pts]


@dataclass(frozen=True)
class GridSpec:
    resolution: int = 512
    inset: float = 0.0

    def __post_init__(self):
        if int(self.resolution) != self.resolution or self.resolution < 2:
            raise ValueError(f"resolution must be an integer >= 2, got {self.resolution!r}")
        if not 0.0 <= self.inset < 0.5:
            raise ValueError(f"inset must lie in [0, 0.5), got {self.inset!r}")


@dataclass(frozen=True, eq=False)
class FieldGrid:
    """Sampled field on a cell-centred raster.

    ``values`` and ``mask`` have shape ``(resolution, resolution)``; row ``i``
    holds the samples at the ``i``-th smallest ``y``. Outside the mask the
    value is 0. ``state`` names the sampled eigenfunction, if there is one.
    """

    spec: GridSpec
    bbox: tuple[float, float, float, float]
    values: np.ndarray
    mask: np.ndarray
    state: EigenfunctionSpec | None = None

    @property
    def resolution(self) -> int:
        return self.spec.resolution

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        return raster_coordinates(self.bbox, self.spec.resolution)


def bounding_box(kind) -> tuple[float, float, float, float]:
    verts = triangle_vertices(kind)
    return (
        float(verts[:, 0].min()),
        float(verts[:, 0].max()),
        float(verts[:, 1].min()),
        float(verts[:, 1].max()),
    )


def raster_coordinates(bbox, resolution: int) -> tuple[np.ndarray, np.ndarray]:
    """Cell-centre coordinate arrays ``(X, Y)`` of shape ``(res, res)``."""
    x0, x1, y0, y1 = bbox
    xs = x0 + (np.arange(resolution) + 0.5) * ((x1 - x0) / resolution)
    ys = y0 + (np.arange(resolution) + 0.5) * ((y1 - y0) / resolution)
    return np.meshgrid(xs, ys)


def eval_grid(spec: EigenfunctionSpec, grid: GridSpec | None = None) -> FieldGrid:
    grid = GridSpec() if grid is None else grid
    bbox = bounding_box(spec.kind)
    X, Y = raster_coordinates(bbox, grid.resolution)
    mask = contains_array(spec.kind, X, Y, grid.inset)
    values = np.zeros(X.shape)
    values[mask] = evaluate(spec, X[mask], Y[mask])
    return FieldGrid(grid, bbox, values, mask, spec)
