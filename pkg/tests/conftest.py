import numpy as np
import pytest

from fuzzysweep.fixtures import load_fixture, two_blobs


@pytest.fixture(scope="session")
def iris():
    return load_fixture("iris")


@pytest.fixture(scope="session")
def blobs():
    return two_blobs()


@pytest.fixture()
def rng():
    return np.random.default_rng(12345)
