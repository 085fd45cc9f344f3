"""
Parameter sweeps and the named presets behind the figure data.

Every sweep is a ``SweepTable``: documented parameters (emitted as ``#``
comment lines), column names and one row per grid point in declared
order.  Rows that fail carry ``nan`` values and the error class in the
``status`` column.
"""

from __future__ import annotations

import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from . import entropies, harmonic, spectrum
from .errors import DomainError, WignerSpectrumError
from .potentials import GaussianRepulsive, InteractionPotential, InverseLog, InversePower, ScreenedInversePower
from .spectrum import TrapGeometry, _fmt

MAX_POINTS = 10**6
THREADS_ENV = "WIGNER_SPECTRUM_THREADS"

PRESETS = ("fig1a", "fig1b", "fig2", "fig3", "fig4", "fig6", "fig7", "figS5a", "figS5b")


def thread_count(env=None) -> int:
    """Worker cap from WIGNER_SPECTRUM_THREADS; 0 or unset means one per CPU."""
    env = os.environ if env is None else env
    raw = env.get(THREADS_ENV, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be a non-negative integer, got {raw!r}") from None
    if n < 0:
        raise DomainError(f"{THREADS_ENV} must be a non-negative integer, got {raw!r}")
    return n or (os.cpu_count() or 1)


def _cell(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return _fmt(float(v))


@dataclass(frozen=True)
class SweepTable:
    name: str
    meta: tuple
    columns: tuple
    rows: tuple

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows])

    @property
    def n_ok(self) -> int:
        if "status" not in self.columns:
            return len(self.rows)
        i = self.columns.index("status")
        return sum(1 for r in self.rows if r[i] == "ok")

    def to_csv(self) -> str:
        buf = io.StringIO(newline="")
        buf.write(f"# sweep = {self.name}\n")
        for key, value in self.meta:
            buf.write(f"# {key} = {value}\n")
        buf.write(",".join(self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(_cell(v) for v in row) + "\n")
        return buf.getvalue()


def run_rows(func: Callable, points: Sequence, n_columns: int, threads: Optional[int] = None) -> tuple:
    """Evaluate ``func`` on every point, in parallel, keeping declared order.

    ``func`` returns the row without its status; failures become a row of
    nan plus the error class name.
    """

    def safe(p):
        try:
            return tuple(func(p)) + ("ok",)
        except WignerSpectrumError as exc:
            return tuple(p) + (math.nan,) * (n_columns - len(p) - 1) + (type(exc).__name__,)

    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(points) < 2:
        return tuple(safe(p) for p in points)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return tuple(pool.map(safe, points))


def _grid(lo, hi, n, spacing):
    if n < 1:
        raise DomainError(f"grid needs at least one point, got {n}")
    if spacing == "log":
        if not (lo > 0 and hi > 0):
            raise DomainError("log spacing needs positive endpoints")
        return np.logspace(math.log10(lo), math.log10(hi), n)
    if spacing == "lin":
        return np.linspace(lo, hi, n)
    raise DomainError(f"spacing must be 'log' or 'lin', got {spacing!r}")


# generic sweep ------------------------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    """g values outer, geometries inner; one row per pair."""

    potential: InteractionPotential
    g_values: tuple
    geometries: tuple
    alphas: tuple = entropies.DEFAULT_ALPHAS
    tail_bound: Optional[float] = None

    def __post_init__(self):
        if not self.g_values or not self.geometries or not self.alphas:
            raise DomainError("sweep ranges must be non-empty")
        n = len(self.g_values) * len(self.geometries)
        if n > MAX_POINTS:
            raise DomainError(f"sweep has {n} points; the cap is {MAX_POINTS}")
        dims = {len(geo.eps) for geo in self.geometries}
        if len(dims) != 1:
            raise DomainError("every geometry in a sweep must have the same dimension")


def sweep(spec: SweepSpec, threads: Optional[int] = None) -> SweepTable:
    k = len(spec.geometries[0].eps)
    alphas = tuple(entropies.renyi_order(a) for a in spec.alphas)
    cols = ["g"] + [f"eps{i + 1}" for i in range(k)]
    cols += ["x0", "omega_x_sq", "overlap", "ha_valid", "zeta"] + [f"xi{i + 1}" for i in range(k)]
    cols += [f"S_{entropies.order_label(a)}" for a in alphas] + ["S_x_vN", "S_L"]
    if spec.tail_bound is not None:
        cols.append("n_levels")
    cols.append("status")

    def row(p):
        g, geo = p[0], TrapGeometry(tuple(p[1:]))
        ha = harmonic.solve(spec.potential, g)
        r = spectrum.spectral_ratios(ha, geo)
        out = [g, *geo.eps, ha.x0, ha.omega_x_sq, ha.overlap, harmonic.diagnostics(ha).valid, r.zeta, *r.xi]
        out += [entropies.renyi_entropy(r, a) for a in alphas]
        out += [entropies.von_neumann_term(r.zeta, True), entropies.linear_entropy(r)]
        if spec.tail_bound is not None:
            out.append(len(spectrum.enumerate_spectrum(r, spec.tail_bound)))
        return out

    points = [(float(g),) + tuple(geo.eps) for g in spec.g_values for geo in spec.geometries]
    meta = (
        ("potential", spec.potential.spec()),
        ("points", str(len(points))),
        ("loop", "g outer, eps inner"),
    )
    return SweepTable("custom", meta, tuple(cols), run_rows(row, points, len(cols), threads))


# presets ------------------------------------------------------------------


def _x_terms(w2, alphas):
    z = spectrum.zeta(w2)
    return [entropies.renyi_term(z, a, True) for a in alphas]


def fig1a(threads=None) -> SweepTable:
    """x term of the entropies against omega_x^2 (minimum 1 at omega_x^2 = 1/2)."""
    w2 = np.union1d(np.logspace(-2, 2, 201), [0.5])
    alphas = (1.0, 2.0)
    cols = ("omega_x_sq", "zeta", "S_x_vN", "S_x_2", "status")

    def row(p):
        return [p[0], spectrum.zeta(p[0])] + _x_terms(p[0], alphas)

    meta = (("omega_x_sq", "logspace(1e-2, 1e2, 201) plus 0.5"), ("quantity", "x-coordinate terms"))
    return SweepTable("fig1a", meta, cols, run_rows(row, [(float(w),) for w in w2], len(cols), threads))


def fig1b(threads=None) -> SweepTable:
    """y term against eps, diverging as eps -> 1+."""
    eps = 1.0 + np.logspace(-6, math.log10(9.0), 201)
    cols = ("eps", "xi", "S_y_vN", "S_y_2", "status")

    def row(p):
        x = spectrum.xi(p[0])
        return [p[0], x, entropies.von_neumann_term(x), entropies.renyi_term(x, 2.0)]

    meta = (("eps", "1 + logspace(1e-6, 9, 201)"), ("quantity", "y-coordinate terms"))
    return SweepTable("fig1b", meta, cols, run_rows(row, [(float(e),) for e in eps], len(cols), threads))


FIG2_ALPHAS = (0.4, 0.5, 0.6, 1.0, 2.0)
FIG2_STEP = 1e-7


def fig2(threads=None) -> SweepTable:
    """x terms and their central-difference slopes across omega_x^2 = 1/2."""
    w2 = 0.5 + np.linspace(-0.1, 0.1, 201)
    labels = [entropies.order_label(a) for a in FIG2_ALPHAS]
    cols = ("omega_x_sq",) + tuple(f"S_x_{l}" for l in labels) + tuple(f"dS_x_{l}" for l in labels) + ("status",)
    h = FIG2_STEP

    def row(p):
        w = p[0]
        vals = _x_terms(w, FIG2_ALPHAS)
        hi, lo = _x_terms(w + h, FIG2_ALPHAS), _x_terms(w - h, FIG2_ALPHAS)
        return [w] + vals + [(a - b) / (2 * h) for a, b in zip(hi, lo)]

    meta = (
        ("omega_x_sq", "0.5 + linspace(-0.1, 0.1, 201)"),
        ("slope", f"central difference, step {h:g}"),
    )
    return SweepTable("fig2", meta, cols, run_rows(row, [(float(w),) for w in w2], len(cols), threads))


FIG3_LEVELS = 21


def fig3(threads=None) -> SweepTable:
    """Lambda_{0, lt} against ln(eps - 1) for the Calogero model at g = 1e8."""
    ha = harmonic.solve(InversePower(1.0), 1e8)
    # Lambda_{0, lt} peaks where xi = lt/(lt + 1); lt = 20 needs ln(eps - 1) near -18.5
    lnd = np.linspace(-20.0, 3.0, 461)
    cols = ("ln_eps_minus_1", "eps", "xi") + tuple(f"Lambda_0_{m}" for m in range(FIG3_LEVELS)) + ("status",)

    def row(p):
        eps = 1.0 + math.exp(p[0])
        r = spectrum.spectral_ratios(ha, TrapGeometry((eps,)))
        lx = spectrum.x_occupancy(r, 0)
        return [p[0], eps, r.xi[0]] + [lx * spectrum.y_occupancy(r.xi[0], m) for m in range(FIG3_LEVELS)]

    meta = (
        ("potential", "ip(beta=1)"),
        ("g", "1e8"),
        ("ln_eps_minus_1", "linspace(-20, 3, 461)"),
        ("levels", f"l = 0, lt = 0..{FIG3_LEVELS - 1}"),
    )
    return SweepTable("fig3", meta, cols, run_rows(row, [(float(v),) for v in lnd], len(cols), threads))


FIG4_ALPHAS = (0.5, 1.0, 2.0, math.inf)


def fig4(threads=None) -> SweepTable:
    """x terms against the inverse-power exponent beta (g-independent)."""
    betas = np.linspace(0.1, 20.0, 200)
    labels = [entropies.order_label(a) for a in FIG4_ALPHAS]
    cols = ("beta", "omega_x_sq", "zeta") + tuple(f"S_x_{l}" for l in labels) + ("status",)

    def row(p):
        w2 = harmonic.frequency(InversePower(p[0]), 1.0)
        return [p[0], w2, spectrum.zeta(w2)] + _x_terms(w2, FIG4_ALPHAS)

    meta = (("potential", "ip(beta)"), ("beta", "linspace(0.1, 20, 200)"))
    return SweepTable("fig4", meta, cols, run_rows(row, [(float(b),) for b in betas], len(cols), threads))


FIG6_GAMMAS = (0.0, 0.5, 1.0, 2.0)


def fig6(threads=None) -> SweepTable:
    """x term of the von Neumann entropy against g for the screened potential."""
    gs = np.logspace(0, 8, 81)
    cols = ("gamma", "g", "x0", "omega_x_sq", "overlap", "ha_valid", "S_x_vN", "status")

    def row(p):
        ha = harmonic.solve(ScreenedInversePower(1.0, p[0]), p[1])
        valid = harmonic.diagnostics(ha).valid
        return [p[0], p[1], ha.x0, ha.omega_x_sq, ha.overlap, valid, _x_terms(ha.omega_x_sq, (1.0,))[0]]

    points = [(float(gm), float(g)) for gm in FIG6_GAMMAS for g in gs]
    meta = (
        ("potential", "sip(beta=1,gamma)"),
        ("gamma", "0, 0.5, 1, 2 (outer loop)"),
        ("g", "logspace(1, 1e8, 81) (inner loop)"),
    )
    return SweepTable("fig6", meta, cols, run_rows(row, points, len(cols), threads))


def fig7(threads=None) -> SweepTable:
    """Lambda_0^x and Lambda_1^x against g around g_c for the Gaussian, sigma = 10."""
    pot = GaussianRepulsive(10.0)
    gc = pot.critical_coupling()
    gs = np.union1d(np.linspace(52.0, 150.0, 197), [gc])
    cols = ("g", "x0", "omega_x_sq", "overlap", "zeta", "Lambda_0_x", "Lambda_1_x", "status")

    def row(p):
        ha = harmonic.solve(pot, p[0])
        r = spectrum.SpectralRatios(spectrum.zeta(ha.omega_x_sq), (), ha.overlap)
        return [p[0], ha.x0, ha.omega_x_sq, ha.overlap, r.zeta, spectrum.x_occupancy(r, 0), spectrum.x_occupancy(r, 1)]

    meta = (("potential", "gr(sigma=10)"), ("g", f"linspace(52, 150, 197) plus g_c = {gc!r}"))
    return SweepTable("fig7", meta, cols, run_rows(row, [(float(g),) for g in gs], len(cols), threads))


FIGS5_FAMILIES = (InversePower(1.0), InverseLog(), ScreenedInversePower(1.0, 0.5), GaussianRepulsive(10.0))


def figS5a(threads=None) -> SweepTable:
    """Minimum position x0 against g for each built-in family."""
    gs = np.logspace(2, 8, 61)
    cols = ("potential", "g", "x0", "omega_x_sq", "overlap", "status")

    def row(p):
        ha = harmonic.solve(FIGS5_FAMILIES[p[0]], p[1])
        return [FIGS5_FAMILIES[p[0]].spec(), p[1], ha.x0, ha.omega_x_sq, ha.overlap]

    points = [(i, float(g)) for i in range(len(FIGS5_FAMILIES)) for g in gs]
    meta = (
        ("potentials", " ".join(p.spec() for p in FIGS5_FAMILIES) + " (outer loop)"),
        ("g", "logspace(1e2, 1e8, 61) (inner loop)"),
    )
    table = run_rows(row, points, len(cols), threads)
    # failed rows keep the family index; give them the label instead
    table = tuple((FIGS5_FAMILIES[r[0]].spec(),) + r[1:] if not isinstance(r[0], str) else r for r in table)
    return SweepTable("figS5a", meta, cols, table)


def figS5b(threads=None) -> SweepTable:
    """Renyi entropy against alpha for the Calogero model, g = 1e4, eps = 3."""
    ha = harmonic.solve(InversePower(1.0), 1e4)
    r = spectrum.spectral_ratios(ha, TrapGeometry((3.0,)))
    alphas = list(np.logspace(-2, 2, 161)) + [math.inf]
    cols = ("alpha", "S_x", "S_y1", "S_total", "status")

    def row(p):
        a = p[0]
        return [a, entropies.renyi_term(r.zeta, a, True), entropies.renyi_term(r.xi[0], a), entropies.renyi_entropy(r, a)]

    meta = (("potential", "ip(beta=1)"), ("g", "1e4"), ("eps", "3"), ("alpha", "logspace(1e-2, 1e2, 161) plus inf"))
    return SweepTable("figS5b", meta, cols, run_rows(row, [(float(a),) for a in alphas], len(cols), threads))


def preset(name: str, threads: Optional[int] = None) -> SweepTable:
    funcs = {
        "fig1a": fig1a,
        "fig1b": fig1b,
        "fig2": fig2,
        "fig3": fig3,
        "fig4": fig4,
        "fig6": fig6,
        "fig7": fig7,
        "figS5a": figS5a,
        "figS5b": figS5b,
    }
    if name not in funcs:
        raise DomainError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    return funcs[name](threads)


def grid(lo: float, hi: float, n: int, spacing: str = "log") -> tuple:
    return tuple(float(v) for v in _grid(lo, hi, n, spacing))
