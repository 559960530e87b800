import os

import pytest


@pytest.fixture(scope="session")
def data_dir():
    import dinv.data
    return os.path.dirname(os.path.abspath(dinv.data.__file__))
