import json
from pathlib import Path

import pytest

from mtrace.corpus import Session
from mtrace.hopfalg import group_z, sweedler, taft

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(scope="session")
def derived():
    return json.loads((FIXTURES / "derived.json").read_text())


@pytest.fixture(scope="session")
def H4():
    return sweedler()


@pytest.fixture(scope="session")
def T3():
    return taft(3)


@pytest.fixture(scope="session")
def Z2():
    return group_z(2)


@pytest.fixture(scope="session")
def h4_session(H4):
    S = Session(H4, seed=7)
    S.auto_tuple()
    return S


@pytest.fixture(scope="session")
def t3_session(T3):
    S = Session(T3, seed=7)
    S.auto_tuple()
    return S


@pytest.fixture(scope="session")
def z2_session(Z2):
    S = Session(Z2, seed=7)
    S.auto_tuple()
    return S


@pytest.fixture(scope="session")
def h4_mods(h4_session):
    """triv, sign, P(eps), P(sigma), regular over Sweedler's algebra."""
    S = h4_session
    S.projectives()
    return {k: S.module(k) for k in ("triv", "sign", "P0", "P1", "reg")}
