"""Closed-form triangle billiard eigenfunctions and their ladder operators."""
from .classes import EquivalenceClass, class_index, lowest_in_class, step, tower
from .core import (
    BilliardKind,
    EigenfunctionSpec,
    FieldGrid,
    GridSpec,
    Point,
    QuantumNumbers,
    SymmetryFamily,
    boundary_samples,
    contains,
    energy,
    eval_grid,
    eval_point,
    evaluate,
    make_state,
)
from .errors import (
    BilliardError,
    EmptyClass,
    FamilyMismatch,
    InvalidQuantumNumbers,
    ResolutionSuspect,
    StencilExitsDomain,
    ZeroFunctionError,
)
from .estimators import BilliardEigenfunction, NodalDomainCounter, PlaneWaveEigenfunction
from .ladder import PlaneWaveSum, PlaneWaveTerm, canonical_state_of, ladder_shift, plane_wave_rep, reduce
from .nodal import NodalReport, checkerboard_count, count_domains, nodal_render, sign_grid

__version__ = "0.1.0"
