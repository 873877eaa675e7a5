import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from normbch import augmented_matrix, bch_matrix, validate_params

settings.register_profile("repro", derandomize=True, max_examples=100, deadline=None)
settings.load_profile("repro")


@pytest.fixture(scope="session")
def params524():
    return validate_params(5, 2, 4)


@pytest.fixture(scope="session")
def params535():
    return validate_params(5, 3, 5)


@pytest.fixture(scope="session")
def h524(params524):
    return bch_matrix(params524)


@pytest.fixture(scope="session")
def ha524(params524):
    return augmented_matrix(params524)


@pytest.fixture(scope="session")
def h535(params535):
    return bch_matrix(params535)


@pytest.fixture(scope="session")
def ha535(params535):
    return augmented_matrix(params535)
