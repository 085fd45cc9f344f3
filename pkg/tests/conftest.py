import functools

import pytest

from wigner_spectrum import GaussianRepulsive, InverseLog, InversePower, ScreenedInversePower, TrapGeometry, solve
from wigner_spectrum import oracle

FAMILIES = {
    "ip": InversePower(1.0),
    "il": InverseLog(),
    "sip": ScreenedInversePower(1.0, 0.5),
    "gr": GaussianRepulsive(10.0),
}


@functools.lru_cache(maxsize=None)
def svd_occupancies(family, g):
    """SVD spectra are the slow part of the suite; share them across tests."""
    return oracle.x_kernel_occupancies(solve(FAMILIES[family], g))


@pytest.fixture(scope="session")
def calogero():
    return solve(InversePower(1.0), 1e4)


@pytest.fixture(scope="session")
def gaussian_critical():
    pot = GaussianRepulsive(10.0)
    return solve(pot, pot.critical_coupling())


@pytest.fixture(scope="session")
def eps3():
    return TrapGeometry((3.0,))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
