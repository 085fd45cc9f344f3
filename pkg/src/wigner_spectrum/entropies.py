"""
Closed-form entropies of the geometric entanglement spectrum.

Each Cartesian coordinate contributes an independent term; the x term
carries one extra bit from the exchange degeneracy.  For a geometric ratio
``r`` and Renyi order ``alpha``

    S^alpha(r) = log2((1 - r)**alpha / (1 - r**alpha)) / (1 - alpha)

with the von Neumann (alpha -> 1), min- (alpha -> inf) and max-entropy
(alpha -> 0) limits handled explicitly.  Divergences are returned as
``Divergent`` values, never raised.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from . import harmonic
from .errors import (
    INFINITE_RANK,
    ISOTROPIC_LIMIT,
    STRONG_CRYSTALLIZATION,
    DomainError,
    Divergent,
    WignerSpectrumError,
)
from .potentials import GaussianRepulsive, InteractionPotential, InversePower, ScreenedInversePower
from .spectrum import SpectralRatios, TrapGeometry, _fmt, spectral_ratios

LN2 = math.log(2.0)

VON_NEUMANN = 1.0
MIN_ENTROPY = math.inf
MAX_ENTROPY = 0.0

DEFAULT_ALPHAS = (0.2, 0.4, 0.8, 1.0, 1.5, 2.0, math.inf)

# below this distance from alpha = 1 the generic formula is replaced by a
# second-order expansion about the von Neumann value
NEAR_ONE = 1e-4

_ORDER_NAMES = {"vn": 1.0, "inf": math.inf, "min": math.inf, "max": 0.0}


def renyi_order(value) -> float:
    """Normalise an order: a positive float, 0, ``inf``, or 'vn'/'min'/'max'."""
    if isinstance(value, str):
        key = value.strip().lower()
        if key in _ORDER_NAMES:
            return _ORDER_NAMES[key]
        value = float(key)
    alpha = float(value)
    if math.isnan(alpha) or alpha < 0:
        raise DomainError(f"Renyi order must be >= 0, got {value!r}")
    return alpha


def order_label(alpha: float) -> str:
    if alpha == 1.0:
        return "vN"
    if math.isinf(alpha):
        return "inf"
    return f"{alpha:g}"


def _check_ratio(ratio, x_branch):
    if not ratio >= 0:
        raise DomainError(f"spectral ratio must lie in [0, 1), got {ratio!r}")
    if ratio >= 1:
        return Divergent(STRONG_CRYSTALLIZATION if x_branch else ISOTROPIC_LIMIT)
    return None


def _vn(ratio):
    if ratio == 0:
        return 0.0
    return -(math.log1p(-ratio) + ratio * math.log(ratio) / (1.0 - ratio)) / LN2


def _near_one(ratio, eps):
    if ratio == 0:
        return 0.0
    lr = math.log(ratio)
    om = 1.0 - ratio
    d1 = math.log1p(-ratio) + ratio * lr / om
    d2 = ratio * lr * lr / (om * om)
    d3 = ratio * lr**3 * (1.0 + ratio) / om**3
    return -(d1 + 0.5 * d2 * eps + d3 * eps * eps / 6.0) / LN2


def _renyi(ratio, alpha):
    if alpha == 1.0:
        return _vn(ratio)
    if math.isinf(alpha):
        return -math.log1p(-ratio) / LN2
    if alpha == 0.0:
        return 0.0 if ratio == 0 else Divergent(INFINITE_RANK)
    if ratio == 0:
        return 0.0
    if abs(alpha - 1.0) < NEAR_ONE:
        return _near_one(ratio, alpha - 1.0)
    return (alpha * math.log1p(-ratio) - math.log1p(-(ratio**alpha))) / ((1.0 - alpha) * LN2)


def renyi_term(ratio: float, alpha, x_branch: bool = False) -> float:
    """One coordinate's Renyi entropy for geometric ratio ``ratio``.

    ``x_branch`` adds the exchange-degeneracy bit.  Ratios >= 1 give a
    ``Divergent`` value.
    """
    alpha = renyi_order(alpha)
    bad = _check_ratio(ratio, x_branch)
    if bad is not None:
        return bad
    value = _renyi(float(ratio), alpha)
    if isinstance(value, Divergent) or not x_branch:
        return value
    return value + 1.0


def von_neumann_term(ratio: float, x_branch: bool = False) -> float:
    bad = _check_ratio(ratio, x_branch)
    if bad is not None:
        return bad
    value = _vn(float(ratio))
    return value + 1.0 if x_branch else value


def _sum_terms(terms):
    total = 0.0
    for t in terms:
        if isinstance(t, Divergent):
            return t
        total += t
    return total


def min_entropy(ratios: SpectralRatios) -> float:
    """``1 - log2(1 - zeta) - sum log2(1 - xi_i)``, i.e. ``-log2`` of the top occupancy at s -> 0."""
    return _sum_terms(
        [renyi_term(ratios.zeta, math.inf, True)] + [renyi_term(r, math.inf) for r in ratios.xi]
    )


@dataclass(frozen=True)
class MaxEntropy:
    """Strict total max-entropy plus the x-branch term and rank.

    ``x_rank`` is 2 when zeta == 0 (finite x support) and None otherwise.
    """

    total: float
    x_term: float
    x_rank: Optional[int]
    y_terms: tuple


def max_entropy(ratios: SpectralRatios) -> MaxEntropy:
    x = renyi_term(ratios.zeta, 0.0, True)
    ys = tuple(renyi_term(r, 0.0) for r in ratios.xi)
    rank = 2 if ratios.zeta == 0 else None
    return MaxEntropy(_sum_terms((x,) + ys), x, rank, ys)


def linear_entropy(ratios: SpectralRatios) -> float:
    """``1 - (1/2) (1-zeta)/(1+zeta) prod (1-xi)/(1+xi)``."""
    purity = 0.5 * (1.0 - ratios.zeta) / (1.0 + ratios.zeta)
    for r in ratios.xi:
        purity *= (1.0 - r) / (1.0 + r)
    return 1.0 - purity


def vn_isotropic_asymptote(epsilon: float) -> float:
    """Leading term ``-ln(eps - 1) / ln 16`` of S_y^1 as eps -> 1+; valid for 1 < eps <= 1.1."""
    if not 1.0 < epsilon <= 1.1:
        raise DomainError(f"isotropic asymptote is only claimed for 1 < eps <= 1.1, got {epsilon!r}")
    return -math.log(epsilon - 1.0) / math.log(16.0)


def renyi_entropy(ratios: SpectralRatios, alpha) -> float:
    """Total Renyi entropy, the sum of the x term and every y term."""
    alpha = renyi_order(alpha)
    return _sum_terms([renyi_term(ratios.zeta, alpha, True)] + [renyi_term(r, alpha) for r in ratios.xi])


def spectrum_entropy(values: Sequence[float], alpha) -> float:
    """Renyi/von Neumann/min/max entropy summed directly over occupancies."""
    alpha = renyi_order(alpha)
    lam = np.asarray(values, dtype=float)
    lam = lam[lam > 0]
    if alpha == 1.0:
        return float(-np.sum(lam * np.log2(lam)))
    if math.isinf(alpha):
        return float(-math.log2(lam.max()))
    if alpha == 0.0:
        return math.log2(lam.size)
    return math.log2(math.fsum(lam**alpha)) / (1.0 - alpha)


def spectrum_linear_entropy(values: Sequence[float]) -> float:
    lam = np.asarray(values, dtype=float)
    return 1.0 - math.fsum(lam * lam)


@dataclass(frozen=True)
class SpecialPoints:
    """Anisotropy and coupling singled out by the interaction.

    ``epsilon_c`` makes the harmonic well locally isotropic
    (eps^2 = 2 omega_x^2 + 1); ``g_c`` gives omega_x^2 = 1/2, where the
    x-spectrum has rank 2.
    """

    epsilon_c: Optional[float]
    g_c: Optional[float]
    omega_half_condition: str


def _g_independent_frequency(potential):
    pure = isinstance(potential, InversePower) or (
        isinstance(potential, ScreenedInversePower) and potential.gamma == 0
    )
    return float(potential.frequency_closed_form(1.0)) if pure else None


def _omega_sq_at(potential, g):
    return harmonic.solve(potential, g).omega_x_sq


def find_half_frequency_coupling(potential: InteractionPotential, g_min: float = 1e-6, g_max: float = 1e12):
    """Root of ``omega_x^2(g) = 1/2`` located by a log-grid scan plus Brent refinement.

    Returns None when no sign change is found in the domain.
    """
    grid = np.logspace(math.log10(g_min), math.log10(g_max), 181)
    prev = None
    for g in grid:
        try:
            val = _omega_sq_at(potential, float(g)) - 0.5
        except WignerSpectrumError:
            prev = None
            continue
        if val == 0:
            return float(g)
        if prev is not None and (prev[1] < 0) != (val < 0):
            return brentq(lambda t: _omega_sq_at(potential, t) - 0.5, prev[0], float(g), xtol=1e-14 * g, rtol=4e-16)
        prev = (float(g), val)
    return None


def special_points(potential: InteractionPotential, g: Optional[float] = None) -> SpecialPoints:
    """epsilon_c (needs ``g`` unless omega_x^2 is g-independent) and g_c."""
    w2 = _g_independent_frequency(potential)
    if w2 is None and g is not None:
        w2 = _omega_sq_at(potential, g)
    eps_c = math.sqrt(2.0 * w2 + 1.0) if w2 is not None else None

    if isinstance(potential, GaussianRepulsive):
        g_c = potential.critical_coupling()
        cond = f"omega_x^2 = 1/2 at g_c = sigma^2 e^(1/2) / 2 = {g_c:.16g}"
    elif _g_independent_frequency(potential) is not None:
        g_c = None
        cond = f"omega_x^2 = {w2:g} for every g; never 1/2"
    else:
        g_c = find_half_frequency_coupling(potential)
        if g_c is None:
            cond = "omega_x^2(g) - 1/2 has no sign change for g in [1e-6, 1e12]"
        else:
            cond = f"omega_x^2(g) = 1/2 solved numerically at g = {g_c:.16g}"
    return SpecialPoints(eps_c, g_c, cond)


@dataclass(frozen=True)
class EntropyTerms:
    alpha: float
    x: float
    y: tuple
    total: float


@dataclass(frozen=True)
class EntropyReport:
    potential: str
    g: float
    eps: tuple
    ratios: SpectralRatios
    diagnostics: harmonic.HAReport
    x0: float
    omega_x_sq: float
    rows: tuple
    von_neumann: EntropyTerms
    min_entropy: EntropyTerms
    max_entropy: MaxEntropy
    linear: float
    extra: dict = field(default_factory=dict)

    def row(self, alpha) -> EntropyTerms:
        alpha = renyi_order(alpha)
        for r in self.rows:
            if r.alpha == alpha:
                return r
        raise KeyError(alpha)

    def to_csv(self) -> str:
        buf = io.StringIO(newline="")
        cols = ["alpha", "x"] + [f"y{i + 1}" for i in range(len(self.eps))] + ["total"]
        buf.write(",".join(cols) + "\n")
        for r in self.rows:
            vals = [_fmt(r.alpha), _fmt(r.x)] + [_fmt(v) for v in r.y] + [_fmt(r.total)]
            buf.write(",".join(vals) + "\n")
        return buf.getvalue()

    def summary(self) -> str:
        d = self.diagnostics
        lines = [
            "# entropy report",
            f"potential        {self.potential}",
            f"g                {_fmt(self.g)}",
            "eps              " + " ".join(_fmt(e) for e in self.eps),
            f"x0               {_fmt(self.x0)}",
            f"omega_x^2        {_fmt(self.omega_x_sq)}",
            f"zeta             {_fmt(self.ratios.zeta)}",
            "xi               " + " ".join(_fmt(v) for v in self.ratios.xi),
            f"overlap s        {_fmt(d.overlap)}",
            f"HA valid         {'yes' if d.valid else 'no'} (s < {d.gate:g})",
            f"delta_x          {_fmt(d.delta_x)}",
            f"delta_p          {_fmt(d.delta_p)}",
            f"S_L              {_fmt(self.linear)}",
        ]
        for name, t in (("S_vN", self.von_neumann), ("S^inf", self.min_entropy)):
            ys = " ".join(_fmt(v) for v in t.y)
            lines.append(f"{name:<16} x={_fmt(t.x)} y={ys} total={_fmt(t.total)}")
        m = self.max_entropy
        rank = "R_x=2" if m.x_rank else "R_x=inf"
        lines.append(f"{'S^0':<16} x={_fmt(m.x_term)} total={_fmt(m.total)} {rank}")
        for r in self.rows:
            ys = " ".join(_fmt(v) for v in r.y)
            label = f"S^{order_label(r.alpha)}"
            lines.append(f"{label:<16} x={_fmt(r.x)} y={ys} total={_fmt(r.total)}")
        return "\n".join(lines) + "\n"


def _terms(ratios, alpha):
    x = renyi_term(ratios.zeta, alpha, True)
    ys = tuple(renyi_term(r, alpha) for r in ratios.xi)
    return EntropyTerms(alpha, x, ys, _sum_terms((x,) + ys))


def entropy_report(
    ha: harmonic.HarmonicApproximation,
    geometry: TrapGeometry,
    alphas: Sequence = DEFAULT_ALPHAS,
) -> EntropyReport:
    """Every entropy of the family for one solved configuration."""
    ratios = spectral_ratios(ha, geometry)
    orders = tuple(renyi_order(a) for a in alphas)
    return EntropyReport(
        potential=ha.potential.spec(),
        g=ha.g,
        eps=geometry.eps,
        ratios=ratios,
        diagnostics=harmonic.diagnostics(ha),
        x0=ha.x0,
        omega_x_sq=ha.omega_x_sq,
        rows=tuple(_terms(ratios, a) for a in orders),
        von_neumann=_terms(ratios, 1.0),
        min_entropy=_terms(ratios, math.inf),
        max_entropy=max_entropy(ratios),
        linear=linear_entropy(ratios),
    )
