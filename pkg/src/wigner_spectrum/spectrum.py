"""
Entanglement spectrum of the harmonic-approximation ground state.

The one-particle reduced density matrix factorises over Cartesian
coordinates.  Its eigenvalues are

    Lambda_{l, lt_1..lt_K} = Lambda^x_l * prod_i Lambda^y_{lt_i}(eps_i)
    Lambda^x_l  = (1 - zeta) zeta**l / (2 (1 + s))      (each value twice, parity +/-)
    Lambda^y_lt = (1 - xi) xi**lt

with ``zeta`` set by omega_x^2, ``xi`` by each anisotropy and ``s`` the
overlap of the two wells.  The natural orbitals are symmetric and
antisymmetric combinations of oscillator functions centred at +-x0/2.
"""

from __future__ import annotations

import io
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError, IsotropicTrapError, TruncationError
from .harmonic import VALIDITY_GATE, HarmonicApproximation

INDEX_CAP = 500

PARITIES = ("+", "-")


@dataclass(frozen=True)
class TrapGeometry:
    """Anisotropies ``eps_1 < ... < eps_{D-1}``, all > 1; D = len(eps) + 1."""

    eps: tuple

    def __post_init__(self):
        eps = tuple(float(e) for e in np.atleast_1d(self.eps))
        object.__setattr__(self, "eps", eps)
        if not eps:
            raise DomainError("need at least one anisotropy parameter (D >= 2)")
        if any(e == 1.0 for e in eps):
            raise IsotropicTrapError("isotropic trap: entropies diverge; see asymptote command")
        if any(not (e > 1.0 and math.isfinite(e)) for e in eps):
            raise DomainError(f"anisotropy parameters must be finite and > 1, got {eps}")
        if any(b <= a for a, b in zip(eps, eps[1:])):
            raise DomainError(f"anisotropy parameters must be strictly increasing, got {eps}")

    @property
    def D(self) -> int:
        return len(self.eps) + 1


def _signed_x_ratio(omega_x_sq: float) -> float:
    # (w - 1)/(w + 1) with w = (2 omega^2)^(1/4), written without the w - 1 cancellation
    w2 = math.sqrt(2.0 * omega_x_sq)
    w = math.sqrt(w2)
    return (2.0 * omega_x_sq - 1.0) / ((w2 + 1.0) * (w + 1.0) ** 2)


def _signed_y_ratio(epsilon: float) -> float:
    # (d^(1/2) - eps^(1/2)) / (d^(1/2) + eps^(1/2)) with d = sqrt(eps^2 - 1);
    # the numerator equals -1/(d + eps) / (d^(1/2) + eps^(1/2))
    d = math.sqrt((epsilon - 1.0) * (epsilon + 1.0))
    return -1.0 / ((d + epsilon) * (math.sqrt(d) + math.sqrt(epsilon)) ** 2)


def zeta(omega_x_sq: float) -> float:
    """Geometric ratio of the x-spectrum, ``((w-1)/(w+1))**2``, ``w = (2 omega_x^2)**(1/4)``.

    Has a double zero at omega_x^2 = 1/2 that survives in floating point.
    """
    if not omega_x_sq > 0:
        raise DomainError(f"omega_x^2 must be positive, got {omega_x_sq!r}")
    return _signed_x_ratio(omega_x_sq) ** 2


def xi(epsilon: float) -> float:
    """Geometric ratio of a transverse spectrum for anisotropy ``epsilon > 1``."""
    if epsilon == 1:
        raise IsotropicTrapError("xi(1) = 1: isotropic limit, use the divergence asymptote")
    if not epsilon > 1:
        raise DomainError(f"epsilon must exceed 1, got {epsilon!r}")
    return _signed_y_ratio(epsilon) ** 2


@dataclass(frozen=True)
class SpectralRatios:
    zeta: float
    xi: tuple
    overlap: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(float(v) for v in np.atleast_1d(self.xi)))


def spectral_ratios(ha: HarmonicApproximation, geometry: TrapGeometry) -> SpectralRatios:
    return SpectralRatios(zeta(ha.omega_x_sq), tuple(xi(e) for e in geometry.eps), ha.overlap)


class OccupancyIndex(NamedTuple):
    l: int
    l_tilde: tuple
    parity: str = "+"


def x_occupancy(ratios: SpectralRatios, l: int, renormalize: bool = False) -> float:
    z = ratios.zeta
    norm = 2.0 if renormalize else 2.0 * (1.0 + ratios.overlap)
    return (1.0 - z) * z**l / norm


def y_occupancy(ratio: float, l_tilde: int) -> float:
    return (1.0 - ratio) * ratio**l_tilde


def occupancy(ratios: SpectralRatios, idx: OccupancyIndex, renormalize: bool = False) -> float:
    """Occupancy for one index; parity does not change the value."""
    if idx.l < 0 or any(m < 0 for m in idx.l_tilde):
        raise DomainError(f"occupancy labels must be non-negative, got {idx}")
    if len(idx.l_tilde) != len(ratios.xi):
        raise DomainError(f"index has {len(idx.l_tilde)} transverse labels, geometry has {len(ratios.xi)}")
    value = x_occupancy(ratios, idx.l, renormalize)
    for r, m in zip(ratios.xi, idx.l_tilde):
        value *= y_occupancy(r, m)
    return value


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return f"{x:.16e}"


@dataclass(frozen=True)
class Spectrum:
    """Ordered, truncated spectrum.

    ``entries`` are ``(OccupancyIndex, value)`` in non-increasing order;
    ``omitted_mass`` is the exact total of everything left out.
    """

    entries: tuple
    captured_mass: float
    omitted_mass: float
    threshold: float
    total_mass: float

    @property
    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.entries])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_csv(self) -> str:
        k = len(self.entries[0][0].l_tilde) if self.entries else 1
        buf = io.StringIO(newline="")
        cols = ["l"] + [f"ltilde{i + 1}" for i in range(k)] + ["parity", "occupancy"]
        buf.write(",".join(cols) + "\n")
        for idx, value in self.entries:
            row = [str(idx.l)] + [str(m) for m in idx.l_tilde] + [idx.parity, _fmt(value)]
            buf.write(",".join(row) + "\n")
        return buf.getvalue()


def _walk(coords, threshold, cap):
    """Collect index tuples with product >= threshold; return (entries, omitted).

    ``coords`` is a list of (c, r) with factor c*r**l per coordinate.  The
    omitted mass is accumulated from closed-form geometric tails.
    """
    n = len(coords)
    max_rest = [1.0] * (n + 1)
    mass_rest = [1.0] * (n + 1)
    for k in range(n - 1, -1, -1):
        c, r = coords[k]
        max_rest[k] = max_rest[k + 1] * c
        mass_rest[k] = mass_rest[k + 1] * (c / (1.0 - r))

    entries = []
    omitted = []

    def visit(k, prefix, labels):
        c, r = coords[k]
        l = 0
        while True:
            term = c * r**l
            if term == 0.0 or prefix * term * max_rest[k + 1] < threshold:
                tail = term / (1.0 - r)
                if tail:
                    omitted.append(prefix * tail * mass_rest[k + 1])
                return
            if l > cap:
                raise TruncationError(
                    f"tail bound needs label {l} > index cap {cap} in coordinate {k}",
                    captured_mass=math.fsum(v for _, v in entries),
                )
            if k == n - 1:
                entries.append((labels + (l,), prefix * term))
            else:
                visit(k + 1, prefix * term, labels + (l,))
            l += 1

    visit(0, 1.0, ())
    return entries, math.fsum(omitted)


def enumerate_spectrum(
    ratios: SpectralRatios,
    tail_bound: float,
    renormalize: bool = False,
    index_cap: int = INDEX_CAP,
) -> Spectrum:
    """All occupancies above a threshold chosen so the omitted mass < tail_bound.

    Both parity branches are listed.  Ties are broken by index, then ``+``
    before ``-``.  Raises TruncationError when the bound would need a label
    above ``index_cap``.
    """
    if not 0 < tail_bound < 1:
        raise DomainError(f"tail_bound must lie in (0, 1), got {tail_bound!r}")
    x_norm = 0.5 if renormalize else 0.5 / (1.0 + ratios.overlap)
    coords = [((1.0 - ratios.zeta) * x_norm, ratios.zeta)]
    coords += [(1.0 - r, r) for r in ratios.xi]
    total = 2.0 * x_norm

    threshold = tail_bound
    for _ in range(200):
        raw, omitted = _walk(coords, threshold, index_cap)
        omitted *= 2.0
        if omitted < tail_bound:
            break
        threshold *= 0.25
    else:  # pragma: no cover - 200 quarterings reach subnormal thresholds
        raise TruncationError("could not meet tail bound", omitted_mass=omitted)

    entries = []
    for labels, value in raw:
        for parity in PARITIES:
            entries.append((OccupancyIndex(labels[0], tuple(labels[1:]), parity), value))
    entries.sort(key=lambda e: (-e[1], e[0].l, e[0].l_tilde, e[0].parity))
    captured = math.fsum(v for _, v in entries)
    return Spectrum(tuple(entries), captured, omitted, threshold, total)


def hermite_functions(l_max: int, u, scale: float = 1.0) -> np.ndarray:
    """Normalised oscillator functions of orders 0..l_max at ``u``.

    ``phi_l(u) = sqrt(scale) h_l(scale*u)`` with ``h_l`` the unit-norm
    Hermite function, built by the three-term recurrence on normalised
    functions.  Output shape is ``(l_max + 1,) + u.shape``.
    """
    if l_max < 0 or l_max > INDEX_CAP:
        raise DomainError(f"Hermite order must be in [0, {INDEX_CAP}], got {l_max}")
    x = scale * np.asarray(u, dtype=float)
    out = np.empty((l_max + 1,) + x.shape)
    out[0] = math.pi**-0.25 * np.exp(-0.5 * x * x)
    if l_max >= 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for n in range(1, l_max):
        out[n + 1] = math.sqrt(2.0 / (n + 1)) * x * out[n] - math.sqrt(n / (n + 1)) * out[n - 1]
    return math.sqrt(scale) * out


def hermite_function(l: int, u, scale: float = 1.0):
    res = hermite_functions(l, u, scale)[l]
    return float(res) if res.ndim == 0 else res


def orbital_scale(omega_x_sq: float) -> float:
    """Inverse length of the x natural orbitals, ``(sqrt(2) omega_x)**(1/4)``."""
    return (2.0 * omega_x_sq) ** 0.125


def transverse_scale(epsilon: float) -> float:
    """Inverse length of the y natural orbitals, ``(eps sqrt(eps^2-1))**(1/4)``."""
    return (epsilon * math.sqrt(epsilon * epsilon - 1.0)) ** 0.25


def _warn_overlap(ha):
    if ha.overlap >= VALIDITY_GATE:
        warnings.warn(
            f"well overlap s={ha.overlap:.3g} >= {VALIDITY_GATE:g}: natural orbitals are only "
            "approximately orthonormal",
            RuntimeWarning,
            stacklevel=3,
        )


def natural_orbital(ha: HarmonicApproximation, l: int, parity: str, u):
    """``phi_l^+`` (even combination) or ``phi_l^-`` of the shifted oscillator states."""
    if parity not in PARITIES:
        raise DomainError(f"parity must be '+' or '-', got {parity!r}")
    _warn_overlap(ha)
    k = orbital_scale(ha.omega_x_sq)
    u = np.asarray(u, dtype=float)
    left = hermite_functions(l, u + 0.5 * ha.x0, k)[l]
    right = hermite_functions(l, u - 0.5 * ha.x0, k)[l]
    out = (left + right) if parity == "+" else (right - left)
    out = out / math.sqrt(2.0)
    return float(out) if out.ndim == 0 else out


def transverse_orbital(m: int, epsilon: float, v):
    """y natural orbital of order m (scale ``(eps sqrt(eps^2-1))**(1/4)``)."""
    return hermite_function(m, v, transverse_scale(epsilon))


def x_normalization(ha: HarmonicApproximation) -> float:
    return math.sqrt(math.sqrt(ha.omega_x) / (2.0**0.75 * math.pi * (1.0 + ha.overlap)))


def y_normalization(epsilon: float) -> float:
    return math.sqrt(math.sqrt(epsilon * math.sqrt(epsilon * epsilon - 1.0)) / math.pi)


def schmidt_coefficient(ha: HarmonicApproximation, l: int) -> float:
    """Signed coefficient lambda_l of the x Schmidt sum; lambda_l**2 = Lambda^x_l."""
    y = _signed_x_ratio(ha.omega_x_sq)
    k = orbital_scale(ha.omega_x_sq)
    return x_normalization(ha) * math.sqrt(math.pi * (1.0 - y * y)) / k * y**l


def transverse_schmidt_coefficient(epsilon: float, m: int) -> float:
    y = _signed_y_ratio(epsilon)
    k = transverse_scale(epsilon)
    return y_normalization(epsilon) * math.sqrt(math.pi * (1.0 - y * y)) / k * y**m


def _q(u, v, c):
    return np.exp(-0.25 * (1.0 + c) * (u * u + v * v) - 0.5 * (1.0 - c) * u * v)


def psi_x(ha: HarmonicApproximation, x1, x2):
    """x factor of the ground state: two Gaussians centred at x2 - x1 = -+x0."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    c = math.sqrt(2.0) * ha.omega_x
    h = 0.5 * ha.x0
    return x_normalization(ha) * (_q(x1 - h, x2 + h, c) + _q(x1 + h, x2 - h, c))


def psi_y(epsilon: float, y1, y2):
    y1 = np.asarray(y1, dtype=float)
    y2 = np.asarray(y2, dtype=float)
    d = math.sqrt(epsilon * epsilon - 1.0)
    expo = -0.25 * (epsilon + d) * (y1 * y1 + y2 * y2) - 0.5 * (epsilon - d) * y1 * y2
    return y_normalization(epsilon) * np.exp(expo)


def psi_x_schmidt(ha: HarmonicApproximation, x1, x2, n_terms: int = 40):
    """Truncated Schmidt sum for psi_x built from shifted oscillator functions."""
    k = orbital_scale(ha.omega_x_sq)
    h = 0.5 * ha.x0
    a1 = hermite_functions(n_terms - 1, np.asarray(x1, dtype=float) - h, k)
    b2 = hermite_functions(n_terms - 1, np.asarray(x2, dtype=float) + h, k)
    b1 = hermite_functions(n_terms - 1, np.asarray(x1, dtype=float) + h, k)
    a2 = hermite_functions(n_terms - 1, np.asarray(x2, dtype=float) - h, k)
    lam = np.array([schmidt_coefficient(ha, l) for l in range(n_terms)])
    lam = lam.reshape((-1,) + (1,) * (a1.ndim - 1))
    return np.sum(lam * (a1 * b2 + b1 * a2), axis=0)


def ground_state(ha: HarmonicApproximation, geometry: TrapGeometry, point: Sequence[float]) -> float:
    """Psi(r1, r2) with ``point = (x1, y1, ..., x2, y2, ...)`` of length 2D."""
    point = [float(p) for p in point]
    D = geometry.D
    if len(point) != 2 * D:
        raise DomainError(f"point must have {2 * D} coordinates for D={D}, got {len(point)}")
    r1, r2 = point[:D], point[D:]
    value = float(psi_x(ha, r1[0], r2[0]))
    for i, eps in enumerate(geometry.eps, start=1):
        value *= float(psi_y(eps, r1[i], r2[i]))
    return value
