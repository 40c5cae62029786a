import numpy as np
from sklearn.utils.validation import check_array

from .core import as_family, as_kind


def check_points(X):
    """Coordinates as a float array of shape ``(n_samples, 2)``."""
    X = check_array(X, dtype=np.float64, ensure_2d=True)
    if X.shape[1] != 2:
        raise ValueError(f"expected (x, y) columns, got {X.shape[1]} features")
    return X


def check_quantum_numbers(X):
    """``(m, n)`` rows as an integer array; rejects non-integral entries."""
    X = check_array(X, dtype=None, ensure_2d=True)
    if X.shape[1] != 2:
        raise ValueError(f"expected (m, n) columns, got {X.shape[1]} features")
    as_int = X.astype(np.int64)
    if not np.array_equal(as_int, X):
        raise ValueError("quantum numbers must be integers")
    return as_int


def resolve_billiard(billiard, family):
    kind = as_kind(billiard)
    if family is None:
        family = "default" if kind.value == "iso" else "cos"
    return kind, as_family(family)
