import math

import numpy as np
import pytest

import reference as ref
from wigner_spectrum import (
    CouplingConfig,
    DomainError,
    GaussianRepulsive,
    InverseLog,
    InversePower,
    InvalidHarmonicApproximationError,
    IsotropicTrapError,
    NumericPotential,
    Overflow,
    RootNotFoundError,
    ScreenedInversePower,
    diagnostics,
    frequency,
    solve,
    solve_minimum,
)
from wigner_spectrum.harmonic import (
    effective_potential,
    minimum_residual,
    momentum_width,
    position_width,
    require_anisotropic,
    solve_minimum_numeric,
)

BUILTINS = {
    "ip": InversePower(1.0),
    "ip3": InversePower(3.0),
    "il": InverseLog(),
    "sip": ScreenedInversePower(1.0, 0.5),
    "gr": GaussianRepulsive(10.0),
}
G_GRID = np.logspace(1, 8, 29)


def g_grid(pot):
    # the Gaussian needs g > sigma^2 / 2
    lo = 0.5 * pot.sigma**2 if isinstance(pot, GaussianRepulsive) else 0.0
    return [float(g) for g in G_GRID if g > lo]


def test_calogero_minimum():
    assert solve_minimum(InversePower(1.0), 1000.0) == pytest.approx(ref.X0_IP1_G1000, rel=1e-15)


def test_gaussian_minimum_at_critical_coupling():
    pot = GaussianRepulsive(10.0)
    gc = pot.critical_coupling()
    assert gc == pytest.approx(ref.G_C_SIGMA10, rel=1e-15)
    ha = solve(pot, gc)
    assert ha.x0 == pytest.approx(10.0, rel=1e-14)
    assert ha.omega_x_sq == pytest.approx(0.5, rel=1e-14)


def test_inverse_log_minimum():
    ha = solve(InverseLog(), 100.0)
    assert ha.x0 == pytest.approx(ref.X0_IL_G100, rel=1e-13)
    assert ha.omega_x_sq == pytest.approx(ref.W2_IL_G100, rel=1e-13)


@pytest.mark.parametrize("gamma", ["0P5", "1", "2"])
def test_screened_minimum(gamma):
    ha = solve(ScreenedInversePower(1.0, float(gamma.replace("P", "."))), 1e4)
    assert ha.x0 == pytest.approx(getattr(ref, f"X0_SIP1_{gamma}_G1E4"), rel=1e-13)
    assert ha.omega_x_sq == pytest.approx(getattr(ref, f"W2_SIP1_{gamma}_G1E4"), rel=1e-13)


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_root_residual_over_g_grid(name):
    for g in g_grid(BUILTINS[name]):
        for closed in (True, False):
            ha = solve(BUILTINS[name], float(g), closed_form=closed)
            assert minimum_residual(ha) < 1e-12, (name, g, closed)


@pytest.mark.parametrize("name", ["ip", "ip3", "gr"])
def test_closed_form_matches_root_finder(name):
    pot = BUILTINS[name]
    for g in g_grid(pot):
        assert solve_minimum_numeric(pot, float(g)) == pytest.approx(pot.minimum_closed_form(float(g)), rel=1e-12)


def test_screened_zero_gamma_closed_form_matches_root_finder():
    pot = ScreenedInversePower(1.0, 0.0)
    for g in G_GRID:
        assert solve_minimum(pot, float(g), closed_form=False) == pytest.approx(solve_minimum(pot, float(g)), rel=1e-12)


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_frequency_closed_form_matches_generic(name):
    pot = BUILTINS[name]
    for g in g_grid(pot):
        x0 = solve_minimum(pot, float(g))
        assert frequency(pot, x0) == pytest.approx(frequency(pot, x0, closed_form=False), rel=1e-10)


def test_inverse_power_frequency_g_independent():
    vals = [solve(InversePower(1.0), g).omega_x_sq for g in (10.0, 1e4, 1e8)]
    assert vals == [2.0, 2.0, 2.0]
    generic = [solve(InversePower(1.0), g, closed_form=False).omega_x_sq for g in (10.0, 1e4, 1e8)]
    assert max(abs(v - 2.0) for v in generic) < 1e-12


@pytest.mark.parametrize("pot", [ScreenedInversePower(1.0, 0.5), ScreenedInversePower(2.0, 2.0), GaussianRepulsive(10.0)])
def test_frequency_increases_with_g(pot):
    w = [solve(pot, g).omega_x_sq for g in g_grid(pot)]
    assert np.all(np.diff(w) > 0)


def test_inverse_log_frequency_tends_to_one():
    w = [solve(InverseLog(), float(g)).omega_x_sq for g in np.logspace(2, 12, 11)]
    assert np.all(np.diff(w) < 0)
    assert all(v > 1.0 for v in w)
    assert w[-1] - 1.0 < 0.2


def test_gaussian_domain():
    pot = GaussianRepulsive(10.0)
    with pytest.raises(DomainError):
        solve(pot, 49.0)
    with pytest.raises(DomainError):
        CouplingConfig(50.0, pot)


@pytest.mark.parametrize("g", [0.0, -1.0, math.inf, math.nan])
def test_bad_coupling(g):
    with pytest.raises(DomainError):
        solve(InversePower(1.0), g)


def test_root_not_found_reports_bracket():
    # -V'/r never reaches 1/(2g) for a potential that is flat beyond r = 1
    flat = NumericPotential(lambda r: 1e-300 * np.exp(-r), lambda r: -1e-300 * np.exp(-r), lambda r: 1e-300 * np.exp(-r))
    with pytest.raises(RootNotFoundError) as info:
        solve_minimum_numeric(flat, 1.0)
    assert info.value.bracket is not None


def test_unstable_well_rejected():
    # V'' strongly negative at x0 drives omega_x^2 below zero
    pot = NumericPotential(lambda r: 1.0 / r, lambda r: -1.0 / r**2, lambda r: -50.0 / r**3)
    with pytest.raises(InvalidHarmonicApproximationError):
        solve(pot, 10.0)


def test_effective_potential_example():
    assert effective_potential(math.sqrt(2.0), 0.0, 2.0, InversePower(1.0), 1.0) == pytest.approx(1.0, rel=1e-15)


def test_effective_potential_origin_overflow():
    out = effective_potential(0.0, 0.0, 2.0, InversePower(1.0), 1.0)
    assert isinstance(out, Overflow)
    arr = effective_potential(np.array([0.0, 1.0]), np.array([0.0, 0.0]), 2.0, InversePower(1.0), 1.0)
    assert math.isnan(arr[0]) and arr[1] == pytest.approx(1.25)


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_effective_potential_minimum(name):
    pot = BUILTINS[name]
    ha = solve(pot, 1e4)
    eps = 3.0
    v = effective_potential(ha.x0, 0.0, eps, pot, 1e4)
    assert v == pytest.approx(ha.v_eff_min, rel=1e-15)
    # analytic gradient: d/dx = x/2 + g V'(r) x/r, d/dy = eps^2 y/2 + g V'(r) y/r
    gx = 0.5 * ha.x0 + 1e4 * pot.first_derivative(ha.x0)
    assert abs(gx) / (0.5 * ha.x0) < 1e-10
    h = 1e-5 * ha.x0
    assert effective_potential(ha.x0, h, eps, pot, 1e4) == effective_potential(ha.x0, -h, eps, pot, 1e4)


def test_effective_potential_symmetry():
    pot = ScreenedInversePower(1.0, 0.5)
    for x, y in [(1.3, 0.7), (5.0, -2.0), (0.2, 3.0)]:
        v = effective_potential(x, y, 2.5, pot, 50.0)
        assert effective_potential(x, -y, 2.5, pot, 50.0) == v
        assert effective_potential(-x, y, 2.5, pot, 50.0) == v


def test_diagnostics_widths():
    ha = solve(InversePower(1.0), 1e4)
    d = diagnostics(ha)
    assert d.delta_x == pytest.approx(1.0, rel=1e-15)
    assert d.delta_x * d.delta_p == pytest.approx(0.5, rel=1e-15)
    assert d.separation_ratio == pytest.approx(ha.x0)


def test_diagnostics_uncertainty_product_any_frequency():
    for w2 in (0.01, 0.5, 2.0, 137.0):
        assert position_width(w2) * momentum_width(w2) == pytest.approx(0.5, rel=1e-15)


def test_calogero_overlap_exponent():
    ha = solve(InversePower(1.0), 1e4)
    assert -math.log(ha.overlap) == pytest.approx(ref.S_EXPONENT_CALOGERO_G1E4, rel=1e-14)
    assert ha.overlap < 1e-60
    assert diagnostics(ha).valid


def test_validity_gate_flags_small_g():
    d = diagnostics(solve(InversePower(1.0), 10.0))
    assert not d.valid
    assert d.gate == 1e-8


def test_isotropic_refused():
    with pytest.raises(IsotropicTrapError, match="isotropic trap"):
        require_anisotropic(1.0)
    with pytest.raises(DomainError):
        require_anisotropic(0.5)
    require_anisotropic(1.5)
