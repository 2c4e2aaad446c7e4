import pytest

from polyenum import ExplicitFamilyOracle, GraphConnectivityOracle, Instance

P3_SIGMA = [[1], [1, 2], [2]]


@pytest.fixture
def p3():
    """Path 1-2-3 with sigma(1)={1}, sigma(2)={1,2}, sigma(3)={2}."""
    oracle = GraphConnectivityOracle(3, [(1, 2), (2, 3)])
    return Instance(3, 2, P3_SIGMA, oracle)


@pytest.fixture
def p3_explicit():
    """Same attributes as p3 but over the listed family {2},{1,2},{2,3},{1,2,3}."""
    oracle = ExplicitFamilyOracle(3, [[2], [1, 2], [2, 3], [1, 2, 3]])
    return Instance(3, 2, P3_SIGMA, oracle)


def elems(inst, *ids):
    return inst.element_set(ids)


def items(inst, *ids):
    return inst.item_set(ids)
