import pytest

from tparadox.coding import CodingTable, build_universe
from tparadox.jump import TP, TP_PLUS, lfp
from tparadox.zoo import ZooSpec, build_zoo


@pytest.fixture(scope="session")
def zoo_env():
    return build_zoo()


@pytest.fixture(scope="session")
def zoo_universe(zoo_env):
    return build_universe(CodingTable(zoo_env))


@pytest.fixture(scope="session")
def zoo_tp(zoo_universe):
    return lfp(zoo_universe, TP)


@pytest.fixture(scope="session")
def zoo_tp_plus(zoo_universe):
    return lfp(zoo_universe, TP_PLUS)


@pytest.fixture(scope="session")
def small_zoo():
    """The zoo at a small domain: quick enough for per-test universes."""
    env = build_zoo(ZooSpec(domain=24))
    u = build_universe(CodingTable(env))
    return env, u, lfp(u, TP)
