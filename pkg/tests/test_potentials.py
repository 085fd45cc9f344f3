import math

import numpy as np
import pytest

import reference as ref
from wigner_spectrum import (
    DomainError,
    GaussianRepulsive,
    InverseLog,
    InversePower,
    NumericPotential,
    Overflow,
    ScreenedInversePower,
    parse_potential,
)
from wigner_spectrum.potentials import derivative_errors, evaluate, validate

LOG_GRID = np.logspace(-2, 2, 50)


def test_inverse_power_triple():
    v, dv, d2v = evaluate(InversePower(1.0), 2.0)
    assert (v, dv, d2v) == (0.25, -0.25, 0.375)


def test_inverse_log_at_e_minus_one():
    assert evaluate(InverseLog(), math.e - 1.0).value == pytest.approx(1.0, rel=1e-15)


def test_gaussian_at_sigma():
    assert evaluate(GaussianRepulsive(10.0), 10.0).value == pytest.approx(ref.GR10_AT_R10, rel=1e-15)


@pytest.mark.parametrize("r", [0.01, 0.3, 1.0, 2.0, 17.5, 300.0])
def test_screened_zero_gamma_is_inverse_power_bitwise(r):
    for beta in (0.5, 1.0, 3.7):
        assert evaluate(ScreenedInversePower(beta, 0.0), r) == evaluate(InversePower(beta), r)


def test_screened_zero_gamma_arrays_bitwise():
    r = np.logspace(-2, 2, 50)
    a, b = ScreenedInversePower(2.0, 0.0), InversePower(2.0)
    for name in ("value", "first_derivative", "second_derivative"):
        assert np.array_equal(getattr(a, name)(r), getattr(b, name)(r))


@pytest.mark.parametrize("r", [0.0, -1.0])
def test_nonpositive_distance(r):
    with pytest.raises(DomainError):
        evaluate(InversePower(1.0), r)


def test_overflow_tagged_not_raised():
    out = evaluate(InversePower(50.0), 1e-10)
    assert isinstance(out, Overflow)
    assert not out


@pytest.mark.parametrize(
    "factory",
    [
        lambda rng: InversePower(rng.uniform(0.05, 5.0)),
        lambda rng: InverseLog(),
        lambda rng: ScreenedInversePower(rng.uniform(0.0, 5.0), rng.uniform(0.01, 5.0)),
        lambda rng: GaussianRepulsive(rng.uniform(0.1, 100.0)),
    ],
    ids=["ip", "il", "sip", "gr"],
)
def test_random_parameter_draws_pass_derivative_check(factory):
    rng = np.random.default_rng(20240611)
    for _ in range(100):
        pot = factory(rng)
        for r in np.logspace(-1, 1.5, 12):
            e1, e2 = derivative_errors(pot, float(r))
            assert e1 < 1e-6 and e2 < 1e-6, (pot, r, e1, e2)


@pytest.mark.parametrize(
    "pot",
    [InversePower(1.0), InverseLog(), ScreenedInversePower(1.0, 0.5), GaussianRepulsive(1.0), GaussianRepulsive(10.0)],
)
def test_builtins_validate_on_log_grid(pot):
    assert validate(pot, LOG_GRID).ok


def test_underflow_is_not_a_violation():
    report = validate(GaussianRepulsive(1.0), LOG_GRID)
    assert report.ok
    assert report.underflow and min(report.underflow) > 30.0
    assert report.not_positive == []


def test_validate_examples():
    assert validate(InversePower(1.0), [0.5, 1, 2, 5, 10])
    assert validate(GaussianRepulsive(1.0), np.linspace(0.1, 10, 100))


def test_validate_flags_attractive():
    grid = [0.5, 1.0, 2.0, 5.0]
    bad = NumericPotential(lambda r: -1.0 / r, lambda r: 1.0 / r**2, lambda r: -2.0 / r**3)
    report = validate(bad, grid)
    assert not report
    assert report.not_positive == grid


@pytest.mark.parametrize("grid", [[], [1.0, 0.5], [0.0, 1.0], [[1.0, 2.0]]])
def test_validate_bad_grid(grid):
    with pytest.raises(DomainError):
        validate(InversePower(1.0), grid)


def test_numeric_adapter_matches_analytic():
    exact = ScreenedInversePower(1.0, 0.5)
    wrapped = NumericPotential(exact.value)
    for r in (0.5, 2.0, 7.0, 20.0):
        assert wrapped.first_derivative(r) == pytest.approx(exact.first_derivative(r), rel=1e-9)
        assert wrapped.second_derivative(r) == pytest.approx(exact.second_derivative(r), rel=1e-6)


@pytest.mark.parametrize(
    "ctor",
    [
        lambda: InversePower(0.0),
        lambda: InversePower(51.0),
        lambda: InversePower(math.nan),
        lambda: ScreenedInversePower(0.0, 0.0),
        lambda: ScreenedInversePower(1.0, -0.1),
        lambda: ScreenedInversePower(1.0, 60.0),
        lambda: GaussianRepulsive(0.0),
        lambda: GaussianRepulsive(2e3),
    ],
)
def test_parameter_ranges_enforced(ctor):
    with pytest.raises(DomainError):
        ctor()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("ip(beta=1)", InversePower(1.0)),
        ("IP( Beta = 0.5 )", InversePower(0.5)),
        ("il()", InverseLog()),
        (" il ( ) ", InverseLog()),
        ("sip(beta=1,gamma=0.5)", ScreenedInversePower(1.0, 0.5)),
        ("sip(gamma=2, beta=1)", ScreenedInversePower(1.0, 2.0)),
        ("gr(sigma=10)", GaussianRepulsive(10.0)),
        ("GR(SIGMA=1e1)", GaussianRepulsive(10.0)),
    ],
)
def test_parse_potential(text, expected):
    assert parse_potential(text) == expected


@pytest.mark.parametrize(
    "text",
    ["ip", "ip()", "ip(beta=x)", "xx(beta=1)", "il(beta=1)", "sip(beta=1)", "ip(beta=1,beta=2)", "gr(sigma=-1)", "ip(beta 1)"],
)
def test_parse_potential_rejects(text):
    with pytest.raises(DomainError):
        parse_potential(text)


def test_spec_round_trip():
    for pot in (InversePower(1.0), InverseLog(), ScreenedInversePower(1.0, 0.5), GaussianRepulsive(10.0)):
        assert parse_potential(pot.spec()) == pot
