import numpy as np
import pytest

from ngspec.graph import Graph


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_adjacency((upper | upper.T).astype(int))


def random_bipartite(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    side = rng.integers(0, 2, size=n)
    a = np.zeros((n, n), dtype=int)
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] != side[v] and rng.random() < p:
                a[u, v] = a[v, u] = 1
    return Graph.from_adjacency(a)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# ---- acceptance result lines ------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str = "") -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
