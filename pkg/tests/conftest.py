import numpy as np
import pytest

from relsplit import scenarios as sc
from relsplit.fields import Chart


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def chart4():
    return Chart(("t", "x", "y", "z"))


@pytest.fixture(scope="session")
def rotating():
    return sc.scenario_rotating()


@pytest.fixture(scope="session")
def schiff_solution():
    return sc.scenario_schiff_solution()


@pytest.fixture(scope="session")
def schiff_natural():
    return sc.scenario_schiff_natural()
