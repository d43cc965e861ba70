import os

import numpy as np
import pytest

from csc.config import set_config
from csc.intlin import IntMatrix, matrix_rank
from csc.io_report import load_graph_library, named_graph, named_graph_parts, named_matrix


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Configuração ativa limpa e sem variáveis CSC_ herdadas do ambiente."""
    for key in list(os.environ):
        if key.startswith("CSC_"):
            monkeypatch.delenv(key)
    set_config(None)
    yield
    set_config(None)


@pytest.fixture(scope="session")
def graph():
    return named_graph


@pytest.fixture(scope="session")
def parts():
    return named_graph_parts


@pytest.fixture(scope="session")
def matrix():
    return named_matrix


@pytest.fixture(scope="session")
def chordal_star_fixtures():
    """Grafos da biblioteca com bipartição rotulada que satisfazem a condição estrela."""
    names = [
        "single_edge", "k22", "k23", "k24", "k33", "k33_minus_edge", "star_k13",
        "path5", "caterpillar", "domino", "k22_pendant", "ladder",
    ]
    lib = load_graph_library()
    assert all(n in lib for n in names)
    return names


def _random_corpus(count, seed, max_d=4, max_n=7, bound=3):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        d = int(rng.integers(1, max_d + 1))
        n = int(rng.integers(d, max_n + 1))
        rows = rng.integers(-bound, bound + 1, size=(d, n)).tolist()
        a = IntMatrix.from_rows(rows)
        if any(not any(c) for c in a.columns()):
            continue
        if matrix_rank(a) == d:
            out.append(a)
    return out


@pytest.fixture(scope="session")
def random_corpus():
    """200 matrizes d <= 4, n <= 7, entradas em [-3, 3], posto d."""
    return _random_corpus(200, seed=20240517)


@pytest.fixture(scope="session")
def small_corpus():
    return _random_corpus(25, seed=7, max_d=3, max_n=5, bound=2)
