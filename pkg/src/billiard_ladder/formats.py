"""CSV grids, binary PGM images and the JSON state catalog."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .classes import class_index
from .core import EigenfunctionSpec, FieldGrid

CATALOG_FIELDS = (
    "billiard", "family", "m", "n", "modulus", "class_index",
    "energy", "nodal_count", "resolution",
)


class CatalogError(ValueError):
    pass


def _g9(v: float) -> str:
    return f"{v:.9g}"


def grid_csv(field: FieldGrid) -> str:
    """``x,y,value`` rows for every sample inside the billiard, row-major."""
    X, Y = field.coordinates()
    lines = ["x,y,value"]
    for x, y, v in zip(X[field.mask], Y[field.mask], field.values[field.mask]):
        lines.append(f"{_g9(x)},{_g9(y)},{_g9(v)}")
    return "\n".join(lines) + "\n"


def write_grid_csv(field: FieldGrid, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(grid_csv(field))


def pgm_bytes(image: np.ndarray) -> bytes:
    """Binary P5 encoding; ``image`` row 0 is the smallest ``y`` and is written last."""
    image = np.asarray(image, dtype=np.uint8)
    height, width = image.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(image[::-1]).tobytes()


def write_pgm(image: np.ndarray, path) -> None:
    Path(path).write_bytes(pgm_bytes(image))


def read_pgm(path) -> np.ndarray:
    """Inverse of :func:`write_pgm`, returning row 0 = smallest ``y``."""
    data = Path(path).read_bytes()
    magic, dims, maxval, raw = data.split(b"\n", 3)
    if magic != b"P5" or maxval != b"255":
        raise ValueError(f"{path}: not an 8-bit binary PGM")
    width, height = (int(t) for t in dims.split())
    return np.frombuffer(raw, dtype=np.uint8).reshape(height, width)[::-1]


@dataclass(frozen=True)
class CatalogEntry:
    billiard: str
    family: str
    m: int
    n: int
    modulus: int
    class_index: int
    energy: float
    nodal_count: int | None = None
    resolution: int | None = None

    @property
    def key(self) -> tuple[str, str, int, int]:
        return (self.billiard, self.family, self.m, self.n)

    @classmethod
    def from_state(cls, spec: EigenfunctionSpec, nodal_count=None, resolution=None):
        cls_ = class_index(spec)
        return cls(
            billiard=spec.kind.value,
            family=spec.family.value,
            m=spec.m,
            n=spec.n,
            modulus=cls_.modulus,
            class_index=cls_.index,
            energy=spec.energy,
            nodal_count=nodal_count,
            resolution=resolution,
        )

    @classmethod
    def from_json(cls, obj) -> "CatalogEntry":
        if not isinstance(obj, dict) or set(obj) != set(CATALOG_FIELDS):
            raise CatalogError(f"catalog entry has wrong fields: {obj!r}")
        for name in ("m", "n", "modulus", "class_index"):
            if not isinstance(obj[name], int) or isinstance(obj[name], bool):
                raise CatalogError(f"catalog field {name!r} must be an integer")
        if obj["m"] % obj["modulus"] != obj["class_index"]:
            raise CatalogError(f"inconsistent class index in {obj!r}")
        return cls(**{k: obj[k] for k in CATALOG_FIELDS})


def read_catalog(path) -> list[CatalogEntry]:
    """Load a catalog; a missing file is an empty catalog."""
    if not os.path.exists(path):
        return []
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: {exc}") from None
    if not isinstance(data, list):
        raise CatalogError(f"{path}: top level must be a JSON array")
    entries = [CatalogEntry.from_json(obj) for obj in data]
    if len({e.key for e in entries}) != len(entries):
        raise CatalogError(f"{path}: duplicate (billiard, family, m, n) entries")
    return entries


def catalog_json(entries) -> str:
    ordered = sorted(entries, key=lambda e: e.key)
    return json.dumps([asdict(e) for e in ordered], indent=2) + "\n"


def merge_catalog(path, new_entries) -> list[CatalogEntry]:
    """Insert or overwrite entries by key and rewrite the file.

    The existing file is validated before anything is written, so a
    malformed catalog is left untouched. No locking: last writer wins.
    """
    merged = {e.key: e for e in read_catalog(path)}
    for e in new_entries:
        merged[e.key] = e
    entries = sorted(merged.values(), key=lambda e: e.key)
    with open(path, "w", newline="\n") as fh:
        fh.write(catalog_json(entries))
    return entries
