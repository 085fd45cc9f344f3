"""Randomized invariants of the closed-form spectrum and entropy family."""

import math

import numpy as np
from hypothesis import given, settings, strategies as st

from wigner_spectrum import SpectralRatios
from wigner_spectrum.entropies import renyi_entropy, renyi_term, von_neumann_term
from wigner_spectrum.spectrum import OccupancyIndex, occupancy, x_occupancy, xi, zeta

omega_sq = st.floats(0.01, 100.0)
anisotropy = st.floats(1.001, 100.0)
orders = st.floats(0.05, 20.0).filter(lambda a: abs(a - 1.0) > 1e-3)
overlaps = st.floats(0.0, 1e-3)

SETTINGS = settings(max_examples=200, deadline=None, derandomize=True)
ALPHA_GRID = [round(0.1 * k, 1) for k in range(1, 101)]


def _log2_power_sum_x(z, a):
    # log2 of sum over both parities: 2 * sum_l ((1-z) z^l / 2)^a
    return (1.0 - a) + a * math.log2(1.0 - z) - math.log2(1.0 - z**a)


def _log2_power_sum_y(r, a):
    return a * math.log2(1.0 - r) - math.log2(1.0 - r**a)


@SETTINGS
@given(omega_sq, anisotropy, orders)
def test_separability(w2, eps, alpha):
    z, r = zeta(w2), xi(eps)
    total = renyi_entropy(SpectralRatios(z, (r,)), alpha)
    # entropy of the product spectrum from the product of its power sums
    joint = (_log2_power_sum_x(z, alpha) + _log2_power_sum_y(r, alpha)) / (1.0 - alpha)
    parts = renyi_term(z, alpha, x_branch=True) + renyi_term(r, alpha)
    assert abs(total - joint) < 1e-12 * max(1.0, abs(joint))
    assert abs(total - parts) < 1e-12 * max(1.0, abs(parts))


@SETTINGS
@given(omega_sq, anisotropy)
def test_alpha_one_consistency(w2, eps):
    for ratio, xb in ((zeta(w2), True), (xi(eps), False)):
        vn = von_neumann_term(ratio, x_branch=xb)
        for a in (1.0 - 1e-6, 1.0 + 1e-6):
            assert abs(renyi_term(ratio, a, x_branch=xb) - vn) < 1e-4


@SETTINGS
@given(omega_sq, anisotropy)
def test_monotone_in_alpha(w2, eps):
    ratios = SpectralRatios(zeta(w2), (xi(eps),))
    s = [renyi_entropy(ratios, a) for a in ALPHA_GRID] + [renyi_entropy(ratios, math.inf)]
    assert all(b <= a + 1e-12 * max(1.0, abs(a)) for a, b in zip(s, s[1:]))


@SETTINGS
@given(omega_sq, anisotropy, overlaps, st.integers(0, 60), st.integers(0, 60))
def test_parity_degeneracy(w2, eps, s, l, m):
    ratios = SpectralRatios(zeta(w2), (xi(eps),), s)
    plus = occupancy(ratios, OccupancyIndex(l, (m,), "+"))
    minus = occupancy(ratios, OccupancyIndex(l, (m,), "-"))
    assert plus == minus


@SETTINGS
@given(omega_sq, overlaps)
def test_x_branch_normalization(w2, s):
    ratios = SpectralRatios(zeta(w2), (xi(2.0),), s)
    z = ratios.zeta
    # terms beyond the cutoff are below 1e-17 of the leading one
    n = 1 if z == 0.0 else int(min(5000, math.ceil(-40.0 / math.log(z)))) + 1
    total = math.fsum(x_occupancy(ratios, l) for l in range(n))
    assert abs(total - 0.5 / (1.0 + s)) < 1e-14


@SETTINGS
@given(omega_sq)
def test_ratio_ranges(w2):
    z = zeta(w2)
    assert 0.0 <= z < 1.0
    assert (z == 0.0) == (w2 == 0.5)
    assert np.isfinite(renyi_term(z, 2.0, x_branch=True))
