"""
Radial interaction potentials.

Every potential maps a positive interparticle distance ``r`` (oscillator
units) to a real number and exposes analytic first and second derivatives.
The four built-in families are

    ip(beta=b)             V(r) = r**(-2 b)                 inverse power
    il()                   V(r) = 1 / ln(r + 1)             inverse logarithm
    sip(beta=b, gamma=c)   V(r) = exp(-c r) r**(-2 b)       screened inverse power
    gr(sigma=s)            V(r) = exp(-r**2 / (2 s**2))     Gaussian repulsion

``parse_potential`` turns the text form above into an instance.  User
potentials without analytic derivatives can be wrapped in
``NumericPotential``.
"""

from __future__ import annotations

import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import DomainError, Overflow

BETA_MAX = 50.0
GAMMA_MAX = 50.0
SIGMA_MAX = 1.0e3

# evaluations below this magnitude carry no usable relative precision
_UNDERFLOW_FLOOR = 1e-250


class Derivatives(NamedTuple):
    value: float
    first: float
    second: float


class InteractionPotential(ABC):
    """Radial, repulsive, monotonically decreasing interaction ``V(r)``.

    Subclasses implement ``value``, ``first_derivative`` and
    ``second_derivative``; all three accept scalars or numpy arrays.
    Families with closed-form minimum or frequency override
    ``minimum_closed_form`` / ``frequency_closed_form``.
    """

    name = "custom"

    @abstractmethod
    def value(self, r):
        ...

    @abstractmethod
    def first_derivative(self, r):
        ...

    @abstractmethod
    def second_derivative(self, r):
        ...

    def derivatives(self, r) -> Derivatives:
        return Derivatives(self.value(r), self.first_derivative(r), self.second_derivative(r))

    def minimum_closed_form(self, g: float) -> Optional[float]:
        """Return x0 solving ``1/(2g) = -V'(x0)/x0`` in closed form, if known."""
        return None

    def frequency_closed_form(self, x0: float) -> Optional[float]:
        """Return omega_x^2 at the minimum x0 in closed form, if known."""
        return None

    def check_coupling(self, g: float) -> None:
        """Raise DomainError when ``g`` is outside the family's domain."""
        if not (g > 0 and math.isfinite(g)):
            raise DomainError(f"coupling g must be positive and finite, got {g!r}")

    def spec(self) -> str:
        return f"{self.name}()"

    def __call__(self, r):
        return self.value(r)


def _inverse_power(r, beta):
    r = np.asarray(r, dtype=float)
    v = r ** (-2.0 * beta)
    dv = -2.0 * beta * r ** (-2.0 * beta - 1.0)
    d2v = 2.0 * beta * (2.0 * beta + 1.0) * r ** (-2.0 * beta - 2.0)
    return v, dv, d2v


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def _check_range(name, value, lo, hi, lo_open):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    below = value <= lo if lo_open else value < lo
    if below or value > hi:
        bracket = "(" if lo_open else "["
        raise DomainError(f"{name}={value!r} outside {bracket}{lo:g}, {hi:g}]")


@dataclass(frozen=True)
class InversePower(InteractionPotential):
    """``V(r) = r**(-2 beta)``; beta=1 is the Calogero model, beta=1/2 Hooke-like."""

    beta: float
    name = "ip"

    def __post_init__(self):
        _check_range("beta", self.beta, 0.0, BETA_MAX, lo_open=True)

    def value(self, r):
        with np.errstate(over="ignore", divide="ignore"):
            return _scalar(_inverse_power(r, self.beta)[0])

    def first_derivative(self, r):
        with np.errstate(over="ignore", divide="ignore"):
            return _scalar(_inverse_power(r, self.beta)[1])

    def second_derivative(self, r):
        with np.errstate(over="ignore", divide="ignore"):
            return _scalar(_inverse_power(r, self.beta)[2])

    def minimum_closed_form(self, g):
        return (4.0 * g * self.beta) ** (1.0 / (2.0 * (self.beta + 1.0)))

    def frequency_closed_form(self, x0):
        return self.beta + 1.0

    def spec(self):
        return f"ip(beta={self.beta:g})"


@dataclass(frozen=True)
class InverseLog(InteractionPotential):
    """``V(r) = 1 / ln(r + 1)``."""

    name = "il"

    def value(self, r):
        with np.errstate(divide="ignore"):
            return _scalar(1.0 / np.log1p(np.asarray(r, dtype=float)))

    def first_derivative(self, r):
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", over="ignore"):
            lg = np.log1p(r)
            return _scalar(-1.0 / ((1.0 + r) * lg * lg))

    def second_derivative(self, r):
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            lg = np.log1p(r)
            return _scalar((lg + 2.0) / ((1.0 + r) ** 2 * lg**3))

    def frequency_closed_form(self, x0):
        lg = math.log1p(x0)
        return 0.5 * (1.0 + (2.0 / lg + 1.0) / (1.0 / x0 + 1.0))


@dataclass(frozen=True)
class ScreenedInversePower(InteractionPotential):
    """``V(r) = exp(-gamma r) r**(-2 beta)``; ``1/gamma`` is the cut-off distance.

    With ``gamma == 0`` every method defers to the inverse-power formulas so
    results coincide bit for bit with ``InversePower(beta)``.
    """

    beta: float
    gamma: float
    name = "sip"

    def __post_init__(self):
        _check_range("beta", self.beta, 0.0, BETA_MAX, lo_open=False)
        _check_range("gamma", self.gamma, 0.0, GAMMA_MAX, lo_open=False)
        if self.beta == 0 and self.gamma == 0:
            raise DomainError("screened inverse power needs beta > 0 or gamma > 0")

    def _triple(self, r):
        if self.gamma == 0:
            return _inverse_power(r, self.beta)
        r = np.asarray(r, dtype=float)
        v = np.exp(-self.gamma * r) * r ** (-2.0 * self.beta)
        rate = self.gamma + 2.0 * self.beta / r
        return v, -rate * v, (rate * rate + 2.0 * self.beta / (r * r)) * v

    def value(self, r):
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            return _scalar(self._triple(r)[0])

    def first_derivative(self, r):
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            return _scalar(self._triple(r)[1])

    def second_derivative(self, r):
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            return _scalar(self._triple(r)[2])

    def minimum_closed_form(self, g):
        if self.gamma == 0:
            return InversePower(self.beta).minimum_closed_form(g)
        return None

    def frequency_closed_form(self, x0):
        if self.gamma == 0:
            return self.beta + 1.0
        k = 2.0 * self.beta + self.gamma * x0
        return 0.5 * (1.0 + 2.0 * self.beta / k + k)

    def spec(self):
        return f"sip(beta={self.beta:g},gamma={self.gamma:g})"


@dataclass(frozen=True)
class GaussianRepulsive(InteractionPotential):
    """``V(r) = exp(-r**2 / (2 sigma**2))``; sigma is the half width.

    Minima exist only for ``g > sigma**2 / 2``.
    """

    sigma: float
    name = "gr"

    def __post_init__(self):
        _check_range("sigma", self.sigma, 0.0, SIGMA_MAX, lo_open=True)

    def value(self, r):
        r = np.asarray(r, dtype=float)
        return _scalar(np.exp(-(r * r) / (2.0 * self.sigma**2)))

    def first_derivative(self, r):
        r = np.asarray(r, dtype=float)
        s2 = self.sigma**2
        return _scalar(-(r / s2) * np.exp(-(r * r) / (2.0 * s2)))

    def second_derivative(self, r):
        r = np.asarray(r, dtype=float)
        s2 = self.sigma**2
        return _scalar((r * r / (s2 * s2) - 1.0 / s2) * np.exp(-(r * r) / (2.0 * s2)))

    def check_coupling(self, g):
        super().check_coupling(g)
        if g <= 0.5 * self.sigma**2:
            raise DomainError(
                f"Gaussian repulsion needs g > sigma^2/2 = {0.5 * self.sigma**2:g}, got g={g:g}"
            )

    def minimum_closed_form(self, g):
        return self.sigma * math.sqrt(2.0 * math.log(2.0 * g / self.sigma**2))

    def frequency_closed_form(self, x0):
        return 0.5 * x0 * x0 / self.sigma**2

    def critical_coupling(self) -> float:
        """Coupling at which omega_x^2 = 1/2 and x0 = sigma."""
        return 0.5 * self.sigma**2 * math.exp(0.5)

    def spec(self):
        return f"gr(sigma={self.sigma:g})"


def _richardson_first(f, r, h):
    d1 = (f(r + h) - f(r - h)) / (2.0 * h)
    d2 = (f(r + h / 2) - f(r - h / 2)) / h
    return (4.0 * d2 - d1) / 3.0


def _richardson_second(f, r, h):
    f0 = f(r)
    d1 = (f(r + h) - 2.0 * f0 + f(r - h)) / (h * h)
    d2 = (f(r + h / 2) - 2.0 * f0 + f(r - h / 2)) / (h * h / 4)
    return (4.0 * d2 - d1) / 3.0


@dataclass(frozen=True)
class NumericPotential(InteractionPotential):
    """Adapter for a user potential given only as a value function.

    Derivatives that are not supplied are approximated by one Richardson
    step on central differences: step ``1e-6 * max(1, r)`` for the first
    derivative and ``2e-3 * max(1, r)`` for the second (a 1e-6 step would
    leave the second difference dominated by round-off).  Steps never
    exceed ``r / 4``.
    """

    func: Callable[[float], float]
    first: Optional[Callable[[float], float]] = None
    second: Optional[Callable[[float], float]] = None
    label: str = field(default="custom")

    name = "custom"

    def value(self, r):
        return self.func(r)

    def first_derivative(self, r):
        if self.first is not None:
            return self.first(r)
        return np.vectorize(self._d1)(r)[()]

    def second_derivative(self, r):
        if self.second is not None:
            return self.second(r)
        return np.vectorize(self._d2)(r)[()]

    def _d1(self, r):
        h = min(1e-6 * max(1.0, r), 0.25 * r)
        return float(_richardson_first(self.func, r, h))

    def _d2(self, r):
        h = min(2e-3 * max(1.0, r), 0.25 * r)
        return float(_richardson_second(self.func, r, h))

    def spec(self):
        return f"{self.label}()"


def evaluate(potential: InteractionPotential, r: float):
    """Return ``Derivatives(V, dV, d2V)`` at ``r``.

    Raises DomainError for ``r <= 0``; returns an ``Overflow`` tag (falsy)
    instead of infinities when any of the three values is not finite.
    """
    r = float(r)
    if not r > 0:
        raise DomainError(f"interparticle distance must be positive, got r={r!r}")
    with np.errstate(all="ignore"):
        trio = potential.derivatives(r)
    values = tuple(float(t) for t in trio)
    if not all(math.isfinite(t) for t in values):
        return Overflow(r, f"{potential.spec()} is not finite at r={r:g}")
    return Derivatives(*values)


def derivative_errors(potential: InteractionPotential, r: float):
    """Scaled deviations of the analytic derivatives from central differences.

    Uses one Richardson step with base step ``1e-5 * l`` for V' and
    ``1e-3 * l`` for V'', where ``l = min(r, |V/V'|)`` is the local length
    scale.  Deviations are divided by ``|V'| + |V|/r`` and
    ``|V''| + |V'|/r + |V|/r**2`` so zeros of a derivative (the Gaussian's
    inflection point) do not blow up the ratio.  Returns ``(e1, e2)``, or
    ``(0, 0)`` when V has underflowed.
    """
    v, dv, d2v = (float(t) for t in potential.derivatives(r))
    if abs(v) < _UNDERFLOW_FLOOR:
        return 0.0, 0.0
    length = r if dv == 0 else min(r, abs(v / dv))
    fd1 = float(_richardson_first(potential.value, r, 1e-5 * length))
    fd2 = float(_richardson_second(potential.value, r, 1e-3 * length))
    scale1 = abs(dv) + abs(v) / r
    scale2 = abs(d2v) + abs(dv) / r + abs(v) / r**2
    return abs(fd1 - dv) / scale1, abs(fd2 - d2v) / scale2


@dataclass
class ValidityReport:
    """Offending grid points for each precondition of the minimum formula."""

    not_positive: list = field(default_factory=list)
    not_decreasing: list = field(default_factory=list)
    no_decay: list = field(default_factory=list)
    bad_derivatives: list = field(default_factory=list)
    # V and V' both underflowed to 0: positivity is untestable in double precision
    underflow: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.not_positive or self.not_decreasing or self.no_decay or self.bad_derivatives)

    def __bool__(self):
        return self.ok


def validate(potential: InteractionPotential, r_grid: Sequence[float], rtol: float = 1e-6) -> ValidityReport:
    """Check repulsion, monotone decrease, decay and derivative consistency.

    Decay is tested by requiring ``V`` to keep decreasing towards zero at
    ``1e3`` and ``1e6`` times the largest grid point.  Points where both V
    and V' have underflowed to zero cannot be tested and are listed under
    ``underflow`` instead of counting as violations.
    """
    grid = np.asarray(r_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("r_grid must be a non-empty 1-D sequence")
    if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
        raise DomainError("r_grid must be positive and strictly increasing")

    report = ValidityReport()
    with np.errstate(all="ignore"):
        for r in grid:
            r = float(r)
            v = float(potential.value(r))
            dv = float(potential.first_derivative(r))
            if v == 0.0 and dv == 0.0:
                report.underflow.append(r)
                continue
            if not v > 0:
                report.not_positive.append(r)
            if not dv < 0:
                report.not_decreasing.append(r)
            e1, e2 = derivative_errors(potential, r)
            if not (e1 <= rtol and e2 <= rtol):
                report.bad_derivatives.append(r)

        r_max = float(grid[-1])
        v_max = float(potential.value(r_max))
        far1 = float(potential.value(1e3 * r_max))
        far2 = float(potential.value(1e6 * r_max))
    decays = 0 <= far2 <= far1 <= v_max and (far2 < v_max or v_max == 0)
    if not decays:
        report.no_decay.append(r_max)
    return report


_SPEC_RE = re.compile(r"^\s*([a-z]+)\s*\((.*)\)\s*$", re.IGNORECASE | re.DOTALL)
_ARG_RE = re.compile(r"^\s*([a-z_]+)\s*=\s*([^,]+?)\s*$", re.IGNORECASE)

_FAMILIES = {
    "ip": (InversePower, ("beta",)),
    "il": (InverseLog, ()),
    "sip": (ScreenedInversePower, ("beta", "gamma")),
    "gr": (GaussianRepulsive, ("sigma",)),
}


def parse_potential(text: str) -> InteractionPotential:
    """Parse ``ip(beta=1)``, ``il()``, ``sip(beta=1,gamma=0.5)`` or ``gr(sigma=10)``.

    Case-insensitive and whitespace-tolerant.  Raises DomainError on
    unknown families, missing/extra parameters or malformed numbers.
    """
    m = _SPEC_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse potential specification {text!r}")
    family = m.group(1).lower()
    if family not in _FAMILIES:
        raise DomainError(f"unknown potential family {m.group(1)!r}; expected one of {sorted(_FAMILIES)}")
    cls, names = _FAMILIES[family]
    kwargs = {}
    body = m.group(2).strip()
    if body:
        for part in body.split(","):
            am = _ARG_RE.match(part)
            if not am:
                raise DomainError(f"malformed argument {part.strip()!r} in {text!r}")
            key = am.group(1).lower()
            if key not in names:
                raise DomainError(f"{family}() takes {names or 'no parameters'}, got {key!r}")
            if key in kwargs:
                raise DomainError(f"duplicate parameter {key!r} in {text!r}")
            try:
                kwargs[key] = float(am.group(2))
            except ValueError:
                raise DomainError(f"parameter {key}={am.group(2)!r} is not a number") from None
    missing = [n for n in names if n not in kwargs]
    if missing:
        raise DomainError(f"{family}() missing parameter(s) {missing}")
    return cls(**kwargs)
