import pytest

from linkcomplexity.corpus import load_corpus
from linkcomplexity.diagram import BraidWord, braid_closure, parse_pd

HOPF = "X[4,1,3,2] X[2,3,1,4]"
TREFOIL = "X[1,2,3,4] X[2,5,6,3] X[5,1,4,6]"


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def hopf():
    return parse_pd(HOPF)


def t2(q):
    return braid_closure(BraidWord(2, (1,) * q))


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    setattr(item, f"rep_{rep.when}", rep)
    return rep
