"""Numerical checks of every identity the toolkit relies on.

The Helmholtz and Dirichlet checks only touch the closed-form evaluator;
the ladder check is the one place where the plane-wave route and the
closed form meet.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import classes, core, ladder
from .core import EigenfunctionSpec, GridSpec, as_family, as_kind, evaluate
from .errors import BilliardError, StencilExitsDomain

# fraction of the peak amplitude below which the eigenvalue ratio is not sampled
AMPLITUDE_FLOOR = 0.1


@dataclass(frozen=True)
class Tolerances:
    helmholtz_h: float = 1e-3
    helmholtz_rel: float = 1e-4
    order_target: float = 2.0
    order_tol: float = 0.2
    boundary_count: int = 1000
    boundary_abs: float = 1e-12
    ladder_resolution: int = 201
    ladder_abs: float = 1e-9
    quadrature_resolution: int = 400
    orthogonality_abs: float = 1e-3


@dataclass(frozen=True)
class ResidualReport:
    state: EigenfunctionSpec
    h: float
    residual: float
    order: float | None
    points: int


def _stencil_points(spec, h, lattice):
    x0, x1, y0, y1 = core.bounding_box(spec.kind)
    X, Y = core.raster_coordinates((x0, x1, y0, y1), lattice)
    X, Y = X.ravel(), Y.ravel()
    ok = core.contains_array(spec.kind, X, Y)
    for dx, dy in ((h, 0), (-h, 0), (0, h), (0, -h)):
        ok &= core.contains_array(spec.kind, X + dx, Y + dy)
    return X[ok], Y[ok]


def _laplacian_ratio(spec, X, Y, h):
    psi = evaluate(spec, X, Y)
    lap = (
        evaluate(spec, X + h, Y)
        + evaluate(spec, X - h, Y)
        + evaluate(spec, X, Y + h)
        + evaluate(spec, X, Y - h)
        - 4.0 * psi
    ) / (h * h)
    return -lap / psi


def helmholtz_residual(spec: EigenfunctionSpec, h: float = 1e-3, refine: bool = True,
                       lattice: int = 64) -> ResidualReport:
    """Five-point-stencil estimate of ``-lap(psi)/psi`` against the energy.

    The ratio is sampled on a ``lattice x lattice`` grid of interior points
    whose whole stencil stays inside, skipping points closer to a nodal
    line than ``AMPLITUDE_FLOOR`` of the peak. With ``refine`` the check
    is repeated at ``h/2`` on the same points to measure the order.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    X, Y = _stencil_points(spec, h, lattice)
    if X.size == 0:
        raise StencilExitsDomain(f"no stencil of width {h} fits inside {spec}")
    psi = np.abs(evaluate(spec, X, Y))
    keep = psi > AMPLITUDE_FLOOR * psi.max()
    X, Y = X[keep], Y[keep]
    E = spec.energy
    res = float(np.max(np.abs(_laplacian_ratio(spec, X, Y, h) - E)) / E)
    order = None
    if refine:
        res_half = float(np.max(np.abs(_laplacian_ratio(spec, X, Y, h / 2) - E)) / E)
        order = math.log2(res / res_half)
    return ResidualReport(spec, h, res, order, int(X.size))


def boundary_residual(spec: EigenfunctionSpec, count: int = 1000,
                      offset: tuple[float, float] = (0.0, 0.0)) -> float:
    """Largest ``|psi|`` over ``count`` boundary samples.

    ``offset`` displaces the sampled boundary; a nonzero offset is a
    control that the check can fail.
    """
    pts = np.array(core.boundary_samples(spec.kind, count)) + np.asarray(offset)
    return float(np.max(np.abs(evaluate(spec, pts[:, 0], pts[:, 1]))))


def _node_raster(kind, resolution):
    x0, x1, y0, y1 = core.bounding_box(kind)
    return np.meshgrid(np.linspace(x0, x1, resolution), np.linspace(y0, y1, resolution))


def ladder_identity_check(spec: EigenfunctionSpec, p: int, resolution: int = 201) -> float:
    """Sup-norm gap between the shifted plane-wave sum and the target state.

    The raster spans the bounding box of the billiard, edges included.
    """
    target = classes.step(spec, p)
    shifted = ladder.ladder_shift(ladder.plane_wave_rep(spec), p)
    X, Y = _node_raster(spec.kind, resolution)
    return float(np.max(np.abs(ladder.reduce(shifted, X, Y) - evaluate(target, X, Y))))


def orthogonality(a: EigenfunctionSpec, b: EigenfunctionSpec, resolution: int = 400) -> float:
    """``|<a, b>| / (|a| |b|)`` by the midpoint rule on the masked raster."""
    if a.kind is not b.kind:
        raise ValueError("states must live on the same billiard")
    grid = GridSpec(resolution)
    fa = core.eval_grid(a, grid).values
    fb = core.eval_grid(b, grid).values
    # cell area cancels in the normalised product
    return float(abs(np.sum(fa * fb)) / math.sqrt(np.sum(fa * fa) * np.sum(fb * fb)))


@dataclass(frozen=True)
class CheckResult:
    check: str
    state: str
    value: float
    limit: float
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    kind: str
    family: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def executed(self) -> int:
        return len(self.results)

    @property
    def vacuous(self) -> bool:
        return not self.results

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def worst(self) -> dict[str, CheckResult]:
        """Worst case per check, failures first, then by value/limit ratio."""
        out: dict[str, CheckResult] = {}
        for r in self.results:
            cur = out.get(r.check)
            if cur is None or (not r.passed, _ratio(r)) > (not cur.passed, _ratio(cur)):
                out[r.check] = r
        return out

    def summary(self) -> str:
        lines = [f"suite {self.kind}/{self.family}: {self.executed} checks"]
        if self.vacuous:
            lines.append("  no checks executed (empty range): vacuous pass")
        for name, r in sorted(self.worst().items()):
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"  {status} {name:<14} worst {r.value:.3e} (limit {r.limit:.1e}) at {r.state}"
                + (f" [{r.detail}]" if r.detail else "")
            )
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _ratio(r: CheckResult) -> float:
    if r.check == "order":
        return abs(r.value - Tolerances.order_target) / r.limit if r.limit else 0.0
    return r.value / r.limit if r.limit else 0.0


def _states(kind, family, n_values, m_span):
    for n in n_values:
        for m in range(n + 1, n + m_span + 1):
            try:
                yield core.make_state(kind, family, m, n)
            except BilliardError:
                continue


def run_suite(kind, family, n_values=range(1, 7), m_span: int = 12,
              p_values=range(1, 4), tol: Tolerances | None = None,
              vertex_shift: tuple[float, float] = (0.0, 0.0)) -> SuiteReport:
    """Run every check over ``n in n_values``, ``n < m <= n + m_span``.

    Failures are recorded in the report, never raised.
    """
    tol = Tolerances() if tol is None else tol
    kind, family = as_kind(kind), as_family(family)
    report = SuiteReport(kind.value, family.value)
    add = report.results.append
    for spec in _states(kind, family, n_values, m_span):
        label = str(spec)
        try:
            hr = helmholtz_residual(spec, tol.helmholtz_h)
        except StencilExitsDomain as exc:
            add(CheckResult("helmholtz", label, math.inf, tol.helmholtz_rel, False, str(exc)))
        else:
            add(CheckResult("helmholtz", label, hr.residual, tol.helmholtz_rel,
                            hr.residual <= tol.helmholtz_rel))
            add(CheckResult("order", label, hr.order, tol.order_tol,
                            abs(hr.order - tol.order_target) <= tol.order_tol))
        br = boundary_residual(spec, tol.boundary_count, vertex_shift)
        add(CheckResult("boundary", label, br, tol.boundary_abs, br <= tol.boundary_abs))
        for p in itertools.chain([0], p_values):
            try:
                dev = ladder_identity_check(spec, p, tol.ladder_resolution)
            except BilliardError as exc:
                add(CheckResult("ladder", f"{label} p={p}", math.inf, tol.ladder_abs, False,
                                exc.code))
                continue
            add(CheckResult("ladder", f"{label} p={p}", dev, tol.ladder_abs,
                            dev <= tol.ladder_abs))
        upper = classes.step(spec, 1)
        cos = orthogonality(spec, upper, tol.quadrature_resolution)
        add(CheckResult("orthogonality", f"{label} vs {upper}", cos, tol.orthogonality_abs,
                        cos <= tol.orthogonality_abs))
    return report


SUITES = {
    "default": dict(n_values=range(1, 7), m_span=12, p_values=range(1, 4)),
    "quick": dict(n_values=range(1, 3), m_span=4, p_values=range(1, 3)),
    "perturbed": dict(n_values=range(1, 3), m_span=4, p_values=range(1, 3),
                      vertex_shift=(1e-3, 1e-3)),
    "empty": dict(n_values=range(0), m_span=0, p_values=range(0)),
}
