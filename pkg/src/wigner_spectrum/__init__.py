"""
Entanglement spectrum and entropies of two particles in an anisotropic
harmonic trap with a repulsive radial interaction, in the large-coupling
harmonic approximation, plus numerical oracles that check every closed
form.
"""

from .entropies import (
    DEFAULT_ALPHAS,
    EntropyReport,
    entropy_report,
    linear_entropy,
    max_entropy,
    min_entropy,
    renyi_entropy,
    renyi_term,
    special_points,
    von_neumann_term,
    vn_isotropic_asymptote,
)
from .errors import (
    Divergent,
    DomainError,
    InvalidHarmonicApproximationError,
    IsotropicTrapError,
    NumericError,
    Overflow,
    ResolutionError,
    RootNotFoundError,
    TruncationError,
    WignerSpectrumError,
)
from .harmonic import CouplingConfig, HarmonicApproximation, diagnostics, frequency, solve, solve_minimum
from .potentials import (
    GaussianRepulsive,
    InteractionPotential,
    InverseLog,
    InversePower,
    NumericPotential,
    ScreenedInversePower,
    parse_potential,
)
from .spectrum import (
    OccupancyIndex,
    SpectralRatios,
    Spectrum,
    TrapGeometry,
    enumerate_spectrum,
    natural_orbital,
    occupancy,
    spectral_ratios,
    xi,
    zeta,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
