"""Exception hierarchy and the value-level sentinels used instead of exceptions."""

from __future__ import annotations

import math
from typing import NamedTuple


class WignerSpectrumError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WignerSpectrumError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class IsotropicTrapError(DomainError):
    """The trap is isotropic (eps == 1); the minima degenerate into a circle."""


class InvalidHarmonicApproximationError(DomainError):
    """The stationary point is not a stable transverse well (omega_x^2 <= 0)."""


class RootNotFoundError(WignerSpectrumError, RuntimeError):
    """Bracketing failed or did not converge.

    ``bracket`` holds the last interval examined.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class TruncationError(WignerSpectrumError, RuntimeError):
    """The requested tail bound cannot be met within the index cap."""

    def __init__(self, message, captured_mass=None, omitted_mass=None):
        super().__init__(message)
        self.captured_mass = captured_mass
        self.omitted_mass = omitted_mass


class ResolutionError(WignerSpectrumError, ValueError):
    """A quadrature/FD grid does not resolve the wavefunction it samples."""


class NumericError(WignerSpectrumError, RuntimeError):
    """An eigensolver or other numerical kernel failed."""


class Overflow(NamedTuple):
    """Tagged non-finite result returned by potential evaluations.

    Falsy, so ``if not result: skip`` works in sweep loops.
    """

    r: float
    reason: str = "non-finite potential value"

    def __bool__(self):
        return False


class Divergent(float):
    """``+inf`` carrying the reason it diverged.

    Behaves as a float in arithmetic (sums give plain ``inf``) and prints as
    ``inf`` so CSV output stays uniform.
    """

    reason: str

    def __new__(cls, reason: str = "divergent"):
        obj = super().__new__(cls, math.inf)
        obj.reason = reason
        return obj

    def __repr__(self):
        return f"Divergent({self.reason!r})"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Divergent, (self.reason,))


ISOTROPIC_LIMIT = "isotropic limit"
STRONG_CRYSTALLIZATION = "strong crystallization"
INFINITE_RANK = "infinite Schmidt rank"
