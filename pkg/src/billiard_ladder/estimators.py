"""scikit-learn style wrappers.

The eigenfunctions act as fixed feature maps from ``(x, y)`` coordinates
to wavefunction values, so they slot into pipelines as transformers.
``fit`` only validates hyper-parameters and builds the state; it learns
nothing from ``X``.
"""
import warnings

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import classes, core, ladder, nodal
from ._validation import check_points, check_quantum_numbers, resolve_billiard


class BilliardEigenfunction(TransformerMixin, BaseEstimator):
    """Closed-form eigenfunction as a transformer.

    Parameters
    ----------
    billiard : {"iso", "equi"}
    family : {"default", "cos", "sin"} or None
        ``None`` picks the natural family of the billiard.
    m, n : int
        Quantum numbers, ``m > n >= 1``.

    Attributes
    ----------
    state_ : EigenfunctionSpec
    energy_ : float
    class_ : EquivalenceClass
    """

    def __init__(self, billiard="iso", family=None, m=2, n=1):
        self.billiard = billiard
        self.family = family
        self.m = m
        self.n = n

    def _build_state(self):
        kind, family = resolve_billiard(self.billiard, self.family)
        return core.make_state(kind, family, self.m, self.n)

    def fit(self, X=None, y=None):
        if X is not None:
            check_points(X)
        self.state_ = self._build_state()
        self.energy_ = self.state_.energy
        self.class_ = classes.class_index(self.state_)
        return self

    def _values(self, X):
        return core.evaluate(self.state_, X[:, 0], X[:, 1])

    def transform(self, X):
        """Wavefunction values, shape ``(n_samples, 1)``."""
        check_is_fitted(self, "state_")
        X = check_points(X)
        return self._values(X)[:, None]

    def predict(self, X):
        """Same values as :meth:`transform`, flattened."""
        return self.transform(X)[:, 0]

    def inside(self, X):
        """Boolean mask of samples strictly inside the billiard."""
        check_is_fitted(self, "state_")
        X = check_points(X)
        return core.contains_array(self.state_.kind, X[:, 0], X[:, 1])


class PlaneWaveEigenfunction(BilliardEigenfunction):
    """Eigenfunction evaluated through its plane-wave sum.

    With ``p != 0`` the ladder operator is applied ``p`` times first, so
    the transformer represents the state ``p`` rungs up (or down) the
    tower; ``target_`` names it.
    """

    def __init__(self, billiard="iso", family=None, m=2, n=1, p=0):
        super().__init__(billiard=billiard, family=family, m=m, n=n)
        self.p = p

    def fit(self, X=None, y=None):
        super().fit(X, y)
        self.target_ = classes.step(self.state_, self.p)
        self.terms_ = ladder.ladder_shift(ladder.plane_wave_rep(self.state_), self.p)
        return self

    def _values(self, X):
        return ladder.reduce(self.terms_, X[:, 0], X[:, 1])


class NodalDomainCounter(BaseEstimator):
    """Predicts the nodal domain count for rows of ``(m, n)`` labels."""

    def __init__(self, billiard="iso", family=None, resolution=512):
        self.billiard = billiard
        self.family = family
        self.resolution = resolution

    def fit(self, X=None, y=None):
        self.kind_, self.family_ = resolve_billiard(self.billiard, self.family)
        core.GridSpec(self.resolution)
        if X is not None:
            check_quantum_numbers(X)
        return self

    def predict(self, X):
        check_is_fitted(self, "kind_")
        X = check_quantum_numbers(X)
        out = np.empty(len(X), dtype=np.int64)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            for i, (m, n) in enumerate(X):
                state = core.make_state(self.kind_, self.family_, int(m), int(n))
                out[i] = nodal.nodal_count(state, self.resolution).domain_count
        return out
