from __future__ import annotations

import pytest

from lefschetzlib.graph.geodesic_graph import load_graph
from lefschetzlib.group.root_datum import RootDatum
from lefschetzlib.padic.valuation import PadicContext


BUNDLED = ["k4", "k33", "petersen", "cube", "circulant9"]


@pytest.fixture
def q2() -> PadicContext:
    return PadicContext(2)


@pytest.fixture
def q3() -> PadicContext:
    return PadicContext(3)


@pytest.fixture
def gl2() -> RootDatum:
    return RootDatum.gl(2)


@pytest.fixture
def gl3() -> RootDatum:
    return RootDatum.gl(3)


@pytest.fixture(scope="session")
def k4():
    return load_graph("k4")


@pytest.fixture(scope="session")
def petersen():
    return load_graph("petersen")


@pytest.fixture(scope="session")
def k33():
    return load_graph("k33")


@pytest.fixture(scope="session", params=BUNDLED)
def bundled_graph(request):
    return load_graph(request.param)
