import pytest

from zeta_relations.series import build_aux, build_laurent_table, build_trig_table


@pytest.fixture(scope="session")
def laurent64():
    return build_laurent_table(64)


@pytest.fixture(scope="session")
def aux64(laurent64):
    return build_aux(laurent64)


@pytest.fixture(scope="session")
def trig64():
    return build_trig_table(64)


@pytest.fixture(scope="session")
def small_table():
    return build_laurent_table(4)


@pytest.fixture(scope="session")
def small_aux(small_table):
    return build_aux(small_table)
