"""Shared fixtures: fields, named graphs and small representations."""
import pytest

from haemers.constants.graphs import GraphKind
from haemers.core.config import settings
from haemers.models.field import FieldSpec
from haemers.services.graphs import named_graph
from haemers.services.lift import lift
from haemers.services.representation import standard_complete_rep


@pytest.fixture
def gf2():
    return FieldSpec.prime(2)


@pytest.fixture
def gf3():
    return FieldSpec.prime(3)


@pytest.fixture
def rationals():
    return FieldSpec.rational()


@pytest.fixture
def k2():
    return named_graph(GraphKind.COMPLETE, 2)


@pytest.fixture
def c5():
    return named_graph(GraphKind.CYCLE, 5)


@pytest.fixture
def k2_rep(gf2):
    return standard_complete_rep(2, gf2)


@pytest.fixture
def c5_rep(k2_rep):
    """(5, 2)-representation of C5 = M_2(K_2) over GF(2)."""
    return lift(k2_rep, 2)


@pytest.fixture
def restore_settings():
    """Put back every setting a test changes."""
    saved = settings.model_dump()
    yield settings
    for key, value in saved.items():
        setattr(settings, key, value)
