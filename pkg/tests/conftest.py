import numpy as np
import pytest

from primelab import engine, zeta


@pytest.fixture(scope="session")
def table_1e6():
    return engine.build_table(10**6)


@pytest.fixture(scope="session")
def zero_table():
    return zeta.bundled_zeros()


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260809)
