import math

import numpy as np
import pytest

from ngspec.families import SplitJoin, construct
from ngspec.graph6 import parse_graph6
from ngspec.search import LIMIT, exhaustive_max, q_product, ratio_point, ratio_table, search
from ngspec.spectra import MatrixKind, spectrum


def test_limit_constant():
    assert LIMIT == pytest.approx(5 / 18 * (4 + math.sqrt(14)))


def test_ratio_small():
    p = ratio_point(9)
    assert p.best_k == 2
    assert p.product == pytest.approx(6 * (11 + math.sqrt(105)))
    assert p.ratio == pytest.approx(p.product / 81)


def test_ratio_converges():
    assert abs(ratio_point(600).ratio - LIMIT) < 0.05
    p = ratio_point(6000)
    assert abs(p.ratio - LIMIT) < 0.005
    assert abs(p.best_k / p.n - 1 / 6) < 0.01


def test_ratio_matches_eigensolver():
    for p in ratio_table(range(6, 61)):
        g = construct(SplitJoin(p.n, p.best_k))
        q = spectrum(g, MatrixKind.SIGNLESS_LAPLACIAN).largest
        co = spectrum(g.complement(), MatrixKind.SIGNLESS_LAPLACIAN).largest
        assert q * co == pytest.approx(p.product, abs=1e-6)


def test_search_reaches_family_at_12():
    r = search(12, 20000, seed=0)
    assert r.product >= 246.7
    g = parse_graph6(r.as_dict()["graph6"])
    assert q_product(g.adjacency().astype(float)) == pytest.approx(r.product)


def test_search_matches_exhaustive_at_4():
    best, _ = exhaustive_max(4)
    r = search(4, 2000, seed=3)
    assert r.product == pytest.approx(best, abs=1e-9)


def test_search_seed_determinism():
    a = search(7, 800, seed=42)
    b = search(7, 800, seed=42)
    assert a.trajectory == b.trajectory
    assert a.as_dict() == b.as_dict()
    c = search(7, 800, seed=43)
    assert c.trajectory != a.trajectory


def test_search_rejects_small_n():
    with pytest.raises(ValueError):
        search(3, 10)
