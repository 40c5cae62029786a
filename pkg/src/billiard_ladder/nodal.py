"""Nodal domains: sign rasters, connected-component counting, rendering."""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import ndimage, sparse
from scipy.sparse import csgraph

from .classes import EquivalenceClass, class_index
from .core import EigenfunctionSpec, FieldGrid, GridSpec, eval_grid, raster_coordinates
from .errors import ResolutionSuspect

# components smaller than this many pixels indicate an under-resolved raster
MIN_DOMAIN_PIXELS = 4

_STRUCTURES = {
    4: ndimage.generate_binary_structure(2, 1),
    8: ndimage.generate_binary_structure(2, 2),
}


@dataclass(frozen=True, eq=False)
class SignGrid:
    resolution: int
    mask: np.ndarray
    signs: np.ndarray
    state: EigenfunctionSpec | None = None


@dataclass(frozen=True)
class NodalReport:
    state: EigenfunctionSpec | None
    resolution: int
    connectivity: int
    domain_count: int
    domain_sizes: tuple[int, ...]
    equivalence_class: EquivalenceClass | None
    resolution_suspect: bool = False

    @property
    def nu(self) -> int:
        return self.domain_count


def sign_grid(field: FieldGrid) -> SignGrid:
    signs = np.sign(field.values).astype(np.int8)
    signs[~field.mask] = 0
    return SignGrid(field.resolution, field.mask.copy(), signs, field.state)


def flood_fill_labels(signs: np.ndarray, mask: np.ndarray | None = None,
                      connectivity: int = 4) -> tuple[np.ndarray, int]:
    """Label constant-sign components with an explicit-stack flood fill.

    Pure Python and slow; kept as an independent check on
    :func:`label_domains`, with the same boundary bridging rule. Zero
    cells are never labelled.
    """
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    rows, cols = signs.shape
    if mask is None:
        mask = np.ones(signs.shape, dtype=bool)
    labels = np.zeros(signs.shape, dtype=np.int64)
    count = 0
    for i0 in range(rows):
        for j0 in range(cols):
            s = signs[i0, j0]
            if s == 0 or labels[i0, j0]:
                continue
            count += 1
            labels[i0, j0] = count
            stack = [(i0, j0)]
            while stack:
                i, j = stack.pop()
                for di in (-1, 0, 1):
                    for dj in (-1, 0, 1):
                        a, b = i + di, j + dj
                        if (di == dj == 0) or not (0 <= a < rows and 0 <= b < cols):
                            continue
                        if labels[a, b] or signs[a, b] != s:
                            continue
                        if di and dj and connectivity == 4 and mask[i, b] and mask[a, j]:
                            continue
                        labels[a, b] = count
                        stack.append((a, b))
    return labels, count


def _diagonal_bridges(signs, mask, labels):
    """Label pairs joined diagonally across a cell outside the mask."""
    s00, s11 = signs[:-1, :-1], signs[1:, 1:]
    s01, s10 = signs[:-1, 1:], signs[1:, :-1]
    main = (s00 != 0) & (s00 == s11) & (~mask[1:, :-1] | ~mask[:-1, 1:])
    anti = (s01 != 0) & (s01 == s10) & (~mask[:-1, :-1] | ~mask[1:, 1:])
    u = np.concatenate([labels[:-1, :-1][main], labels[:-1, 1:][anti]])
    v = np.concatenate([labels[1:, 1:][main], labels[1:, :-1][anti]])
    return u, v


def label_domains(signs: np.ndarray, mask: np.ndarray | None = None,
                  connectivity: int = 4) -> tuple[np.ndarray, int]:
    """Component labels over nonzero cells; components never mix signs.

    With 4-connectivity, two same-sign cells touching only at a corner
    are still joined when one of the two cells across that corner lies
    outside ``mask``. No saddle can be seen there, and thin wedges at
    acute vertices would otherwise split into single-pixel fragments.
    """
    structure = _STRUCTURES[connectivity]
    pos, n_pos = ndimage.label(signs > 0, structure=structure)
    neg, n_neg = ndimage.label(signs < 0, structure=structure)
    labels = pos + np.where(neg > 0, neg + n_pos, 0)
    count = n_pos + n_neg
    if connectivity == 8 or mask is None or mask.all() or count == 0:
        return labels, count
    u, v = _diagonal_bridges(signs, mask, labels)
    if not len(u):
        return labels, count
    graph = sparse.coo_matrix((np.ones(len(u)), (u - 1, v - 1)), shape=(count, count))
    count, group = csgraph.connected_components(graph, directed=False)
    lookup = np.concatenate([[0], group + 1])
    return lookup[labels], int(count)


def count_domains(grid: SignGrid, connectivity: int = 4) -> NodalReport:
    """Count nodal domains of a sign raster.

    4-connectivity is the default and the correct choice: with 8, two
    same-sign domains meeting at a nodal crossing would be merged.
    Emits :class:`ResolutionSuspect` if any domain is tiny.
    """
    if connectivity not in _STRUCTURES:
        raise ValueError("connectivity must be 4 or 8")
    labels, count = label_domains(grid.signs, grid.mask, connectivity)
    sizes = np.bincount(labels.ravel(), minlength=count + 1)[1:]
    suspect = bool(count and sizes.min() < MIN_DOMAIN_PIXELS)
    if suspect:
        warnings.warn(
            f"{int((sizes < MIN_DOMAIN_PIXELS).sum())} nodal domain(s) smaller than "
            f"{MIN_DOMAIN_PIXELS} pixels at resolution {grid.resolution}",
            ResolutionSuspect,
            stacklevel=2,
        )
    return NodalReport(
        state=grid.state,
        resolution=grid.resolution,
        connectivity=connectivity,
        domain_count=int(count),
        domain_sizes=tuple(int(s) for s in sizes),
        equivalence_class=None if grid.state is None else class_index(grid.state),
        resolution_suspect=suspect,
    )


def nodal_count(spec: EigenfunctionSpec, resolution: int = 512) -> NodalReport:
    return count_domains(sign_grid(eval_grid(spec, GridSpec(resolution))))


def checkerboard_count(m: int, n: int) -> int:
    """Nodal domains of ``sin(mx) sin(ny)`` on the square: an ``m x n`` checkerboard."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return m * n


def rectangle_field(m: int, n: int, resolution: int = 512) -> FieldGrid:
    """Separable baseline ``sin(mx) sin(ny)`` sampled on ``(0, pi)^2``."""
    bbox = (0.0, math.pi, 0.0, math.pi)
    X, Y = raster_coordinates(bbox, resolution)
    values = np.sin(m * X) * np.sin(n * Y)
    return FieldGrid(GridSpec(resolution), bbox, values, np.ones(X.shape, dtype=bool))


class RenderMode(str, enum.Enum):
    SIGN = "sign"
    AMPLITUDE = "amplitude"


def nodal_render(field: FieldGrid, mode=RenderMode.SIGN) -> np.ndarray:
    """Greyscale ``uint8`` image, same orientation as ``field.values``.

    Row 0 is the smallest ``y``; flip vertically for top-down image
    formats. Pixels outside the billiard are mid-grey.
    """
    mode = RenderMode(mode)
    if mode is RenderMode.SIGN:
        img = np.choose(np.sign(field.values).astype(int) + 1, [0, 128, 255]).astype(np.uint8)
    else:
        peak = np.abs(field.values[field.mask]).max() if field.mask.any() else 0.0
        if peak > 0:
            scaled = np.rint((field.values / peak + 1.0) * 127.5)
            img = np.clip(scaled, 0, 255).astype(np.uint8)
        else:
            img = np.full(field.values.shape, 128, dtype=np.uint8)
    img[~field.mask] = 128
    return img
