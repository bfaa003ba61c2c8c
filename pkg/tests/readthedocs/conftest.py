import pathlib

import pytest


@pytest.fixture
def docs_dir():
    return pathlib.Path(__file__).resolve().parents[2] / 'readthedocs'
