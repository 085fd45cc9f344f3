"""
Harmonic approximation of the relative-coordinate problem.

For ``eps > 1`` the effective potential

    V_eff(x, y) = (x**2 + eps**2 y**2) / 4 + g V(sqrt(x**2 + y**2))

has its minima at ``(+-x0, 0)`` with ``1/(2g) = -V'(x0)/x0``.  Expanding to
second order gives an x-oscillator with squared frequency

    omega_x^2 = (1 + V''(x0) / (-V'(x0)/x0)) / 2

and a y-oscillator fixed by the trap alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InvalidHarmonicApproximationError,
    IsotropicTrapError,
    Overflow,
    RootNotFoundError,
)
from .potentials import InteractionPotential

# s < VALIDITY_GATE keeps the overlap correction to the occupancies below 1e-8
VALIDITY_GATE = 1e-8

MAX_BRACKET_STEPS = 200


@dataclass(frozen=True)
class CouplingConfig:
    g: float
    potential: InteractionPotential

    def __post_init__(self):
        self.potential.check_coupling(self.g)


@dataclass(frozen=True)
class HarmonicApproximation:
    """Solved harmonic approximation for one (potential, g) pair.

    ``overlap`` is ``s = exp(-x0**2 omega_x / sqrt(2))``, the overlap of the
    Gaussians centred on the two minima.
    """

    x0: float
    omega_x_sq: float
    overlap: float
    v_eff_min: float
    g: float
    potential: InteractionPotential

    @property
    def omega_x(self) -> float:
        return math.sqrt(self.omega_x_sq)


@dataclass(frozen=True)
class HAReport:
    overlap: float
    valid: bool
    gate: float
    delta_x: float
    delta_p: float
    separation_ratio: float


def _as_config(cfg, g=None) -> CouplingConfig:
    if isinstance(cfg, CouplingConfig):
        return cfg
    return CouplingConfig(g, cfg)


def _pull(potential, r):
    """-V'(r)/r, the quantity balanced against 1/(2g) at the minimum."""
    return -float(potential.first_derivative(r)) / r


def _pull_slope(potential, r):
    return -float(potential.second_derivative(r)) / r + float(potential.first_derivative(r)) / r**2


def find_bracket(potential: InteractionPotential, g: float):
    """Bracket the root of ``-V'(r)/r - 1/(2g)`` by doubling/halving from r=1."""
    target = 0.5 / g
    lo = hi = 1.0
    f1 = _pull(potential, 1.0) - target
    if f1 == 0:
        return 1.0, 1.0
    for _ in range(MAX_BRACKET_STEPS):
        if f1 > 0:
            lo, hi = hi, 2.0 * hi
            f = _pull(potential, hi) - target
            if f <= 0:
                return lo, hi
        else:
            hi, lo = lo, 0.5 * lo
            with np.errstate(all="ignore"):
                f = _pull(potential, lo) - target
            if f >= 0:
                return lo, hi
    raise RootNotFoundError(
        f"no sign change of -V'(r)/r - 1/(2g) found for {potential.spec()} at g={g:g} "
        f"after {MAX_BRACKET_STEPS} doublings; last bracket [{lo:.6g}, {hi:.6g}]",
        bracket=(lo, hi),
    )


def solve_minimum_numeric(potential: InteractionPotential, g: float, rtol: float = 1e-14) -> float:
    """Bisection to 1e-6 relative width, then Newton polish inside the bracket."""
    target = 0.5 / g
    lo, hi = find_bracket(potential, g)
    if lo == hi:
        return lo

    def f(r):
        return _pull(potential, r) - target

    for _ in range(200):
        if (hi - lo) <= 1e-6 * hi:
            break
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid

    x = 0.5 * (lo + hi)
    for _ in range(50):
        fx = f(x)
        if fx == 0:
            return x
        if fx > 0:
            lo = x
        else:
            hi = x
        slope = _pull_slope(potential, x)
        step = fx / slope if slope != 0 else math.inf
        x_new = x - step
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= rtol * x:
            return x_new
        x = x_new
        if (hi - lo) <= rtol * x:
            return x
    raise RootNotFoundError(
        f"minimum of {potential.spec()} at g={g:g} did not converge; bracket [{lo!r}, {hi!r}]",
        bracket=(lo, hi),
    )


def solve_minimum(cfg, g=None, *, closed_form: bool = True) -> float:
    """Return x0 > 0 solving ``1/(2g) = -V'(x0)/x0``.

    Accepts a CouplingConfig or ``(potential, g)``.  Families with a closed
    form use it unless ``closed_form=False``.
    """
    cfg = _as_config(cfg, g)
    if closed_form:
        x0 = cfg.potential.minimum_closed_form(cfg.g)
        if x0 is not None:
            return float(x0)
    return solve_minimum_numeric(cfg.potential, cfg.g)


def frequency(cfg, x0: float, *, closed_form: bool = True) -> float:
    """Squared x-frequency ``omega_x^2`` of the harmonic approximation at x0."""
    if isinstance(cfg, CouplingConfig):
        potential = cfg.potential
    else:
        potential = cfg
    w2 = potential.frequency_closed_form(x0) if closed_form else None
    if w2 is None:
        pull = _pull(potential, x0)
        w2 = 0.5 * (1.0 + float(potential.second_derivative(x0)) / pull)
    w2 = float(w2)
    if not w2 > 0:
        raise InvalidHarmonicApproximationError(
            f"omega_x^2 = {w2:g} <= 0 at x0 = {x0:g}: not a stable transverse well"
        )
    return w2


def effective_potential(x, y, eps: float, cfg, g=None):
    """``(x**2 + eps**2 y**2)/4 + g V(sqrt(x**2 + y**2))``.

    Scalar input returns a float, or an ``Overflow`` tag when the value is
    not finite (e.g. at the origin for singular families).  Array input
    returns an array with NaN at such points.
    """
    cfg = _as_config(cfg, g)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r = np.hypot(x, y)
    with np.errstate(all="ignore"):
        out = 0.25 * (x * x + eps * eps * y * y) + cfg.g * np.asarray(cfg.potential.value(r), dtype=float)
        out = np.where(np.isfinite(out), out, np.nan)
    if out.ndim == 0:
        val = float(out)
        if not math.isfinite(val):
            return Overflow(float(r), "effective potential is singular here")
        return val
    return out


def solve(potential: InteractionPotential, g: float, *, closed_form: bool = True) -> HarmonicApproximation:
    """Solve minimum, frequency, overlap and V_eff at the minimum in one call."""
    cfg = CouplingConfig(g, potential)
    x0 = solve_minimum(cfg, closed_form=closed_form)
    w2 = frequency(cfg, x0, closed_form=closed_form)
    overlap = math.exp(-x0 * x0 * math.sqrt(w2) / math.sqrt(2.0))
    v_min = 0.25 * x0 * x0 + g * float(potential.value(x0))
    return HarmonicApproximation(x0, w2, overlap, v_min, g, potential)


def minimum_residual(ha: HarmonicApproximation) -> float:
    """Relative residual ``|1/(2g) + V'(x0)/x0| / (1/(2g))``."""
    target = 0.5 / ha.g
    return abs(target + float(ha.potential.first_derivative(ha.x0)) / ha.x0) / target


def position_width(omega_x_sq: float) -> float:
    """Relative-coordinate width ``2**(1/4) / sqrt(omega_x)``."""
    return 2.0**0.25 / omega_x_sq**0.25


def momentum_width(omega_x_sq: float) -> float:
    """Relative-momentum width ``sqrt(omega_x) / 2**(5/4)``."""
    return omega_x_sq**0.25 / 2.0**1.25


def diagnostics(ha: HarmonicApproximation, g=None, gate: float = VALIDITY_GATE) -> HAReport:
    """Overlap, large-g validity flag and uncertainty widths.

    ``valid`` means ``overlap < gate``; the default gate 1e-8 is a choice
    made here, not a derived bound.
    """
    dx = position_width(ha.omega_x_sq)
    return HAReport(
        overlap=ha.overlap,
        valid=ha.overlap < gate,
        gate=gate,
        delta_x=dx,
        delta_p=momentum_width(ha.omega_x_sq),
        separation_ratio=ha.x0 / dx,
    )


def require_anisotropic(eps: float) -> None:
    if eps == 1:
        raise IsotropicTrapError("isotropic trap: entropies diverge; see asymptote command")
    if not eps > 1:
        raise DomainError(f"anisotropy eps must exceed 1, got {eps!r}")
