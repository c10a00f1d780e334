"""Shared fixtures: solved orbits reused across test modules."""

import pytest

import frozenplanet as fp


@pytest.fixture(scope="session")
def sol_mu2():
    return fp.solve_orbit(2.0)


@pytest.fixture(scope="session")
def sol_mu4():
    return fp.solve_orbit(4.0)


@pytest.fixture(scope="session")
def sol_touch():
    return fp.solve_orbit(fp.critical_mu())


@pytest.fixture(scope="session")
def traj_mu2(sol_mu2):
    return fp.reconstruct(sol_mu2, 1024)
