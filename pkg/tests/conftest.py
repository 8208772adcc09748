import pytest

from core.parser import parse_array
from modules.oracle.graphs import build


@pytest.fixture(scope="module")
def halved7():
    return build("halved-cube", [7])


@pytest.fixture(scope="module")
def folded_j12():
    return build("folded-johnson", [12])


@pytest.fixture(scope="module")
def petersen():
    return build("petersen")


@pytest.fixture
def halved7_array():
    return parse_array("21,10,3;1,6,15")


@pytest.fixture
def fh14_array():
    return parse_array("91,66,45;1,6,15")
