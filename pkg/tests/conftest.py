import numpy as np
import pytest

from focklab.integrate import MCIntegrator, QuadIntegrator


@pytest.fixture(scope="session")
def quad():
    return QuadIntegrator()


@pytest.fixture(scope="session")
def mc():
    return MCIntegrator(samples=100_000, seed=777)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240801)


def random_points(rng, count, n, scale=1.0):
    return scale * (rng.normal(size=(count, n)) + 1j * rng.normal(size=(count, n))) / np.sqrt(2)
