import os

import pytest

from src.diagram.library import TREFOIL_WORD, graph_corpus, plat_diagram
from src.diagram.slices import Cap, Cup, SlicedDiagram
from src.invariant import EmbeddedGraphDiagram
from src.utils.logger import set_debug

CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")

THETA_TEXT = """\
kind graph
vertex 0 in=0 out=3 id=u
vertex 0 in=3 out=0 id=v
"""


@pytest.fixture(autouse=True)
def quiet_environment(monkeypatch):
    """Keep developer settings out of unit tests."""
    for name in ("SPINNET_DEBUG", "SPINNET_ORACLE_BUDGET", "SPINNET_THREADS"):
        monkeypatch.delenv(name, raising=False)
    yield
    set_debug(False)


@pytest.fixture
def corpus_path():
    def resolve(name: str) -> str:
        return os.path.join(CORPUS_DIR, name)
    return resolve


@pytest.fixture
def unknot_link():
    return SlicedDiagram(kind="link", slices=(Cup(at=0), Cap(at=0)))


@pytest.fixture
def trefoil_link():
    return plat_diagram(TREFOIL_WORD)


@pytest.fixture(scope="session")
def graphs():
    return {name: EmbeddedGraphDiagram(d) for name, d in graph_corpus()}


@pytest.fixture
def write_file(tmp_path):
    def write(name: str, content: str) -> str:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return str(path)
    return write
