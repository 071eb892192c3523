"""Smoke tests for the thickgraph Python module."""

import os
from fractions import Fraction

import pytest

import thickgraph as tg

CORPUS = os.path.join(os.path.dirname(__file__), "..", "..", "corpus")


def path(n):
    return tg.Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return tg.Graph(n, [(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)])


def test_graph_basics():
    g = path(3)
    assert (g.n, g.m) == (3, 2)
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)
    with pytest.raises(ValueError):
        tg.Graph(2, [(0, 0)])


def test_figures():
    g, labels = tg.read_graph(os.path.join(CORPUS, "figures", "hiddenV1.graph"))
    assert labels[0] == "a"
    r = tg.recognize(g)
    assert r["accepted"] and r["model"]["thin_n"] <= 6
    unthick, _ = tg.read_graph(os.path.join(CORPUS, "figures", "unthick.graph"))
    assert not tg.recognize(unthick)["accepted"]
    assert tg.recognize(cycle(4), "cobipartite")["accepted"]
    with pytest.raises(ValueError):
        tg.recognize(cycle(4), "nonsense")


def test_counts():
    assert tg.count_colourings(path(3), 3) == 12
    assert tg.count_colourings(path(3), 3, threads=2) == 12
    assert tg.weighted_independent_sum(cycle(4)) == 7
    assert tg.weighted_independent_sum(path(3), [2, 3, 5]) == 21
    assert tg.independence_polynomial(tg.Graph(1), [Fraction(1, 2)]) == [1, Fraction(1, 2)]
    with pytest.raises(tg.ClassError):
        tg.count_colourings(cycle(5), 3)


def test_fpt_and_treewidth():
    assert tg.recognize_fpt(cycle(5), 4)["accepted"]
    assert not tg.recognize_fpt(cycle(5), 3)["accepted"]
    model = {"thin_n": 2, "thin_edges": [[0, 1]], "phi": [0, 0, 1, 1]}
    c4 = tg.Graph(4, [(0, 1), (0, 3), (1, 2), (2, 3)])
    assert tg.count_ind_treewidth(c4, model, "s td 1 2 2\nb 1 1 2\n") == 7


def test_generator_and_decomposition():
    g, model = tg.random_thick_forest(3, 5, 3)
    assert len(model["phi"]) == g.n
    assert tg.recognize(g)["accepted"]
    d = tg.decompose(path(3))
    assert d["nodes"][d["root"]]["sep"] == [1]
