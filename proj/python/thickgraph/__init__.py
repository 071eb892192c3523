"""Recognition of thick forests and exact counting on quasi thick forests."""

import json
from fractions import Fraction

from ._thick import (
    ClassError,
    ContractError,
    Graph,
    InputError,
    ResourceError,
    read_graph,
)
from . import _thick

__all__ = [
    "ClassError",
    "ContractError",
    "Graph",
    "InputError",
    "ResourceError",
    "count_colourings",
    "count_ind_treewidth",
    "decompose",
    "independence_polynomial",
    "random_thick_forest",
    "read_graph",
    "recognize",
    "recognize_fpt",
    "weighted_independent_sum",
]


def _weights(weights):
    return [str(Fraction(w)) for w in weights or []]


def recognize(graph, cls="thick-forest"):
    """Verdict dict with keys accepted, model and witness."""
    return json.loads(_thick._recognize(graph, cls))


def recognize_fpt(graph, nu):
    return json.loads(_thick._recognize_fpt(graph, nu))


def decompose(graph):
    return json.loads(_thick._decompose(graph))


def count_colourings(graph, q, threads=1):
    return int(_thick._count_colourings(graph, q, threads))


def weighted_independent_sum(graph, weights=None):
    return Fraction(_thick._weighted_independent_sum(graph, _weights(weights)))


def independence_polynomial(graph, weights=None):
    return [Fraction(c) for c in _thick._independence_polynomial(graph, _weights(weights))]


def count_ind_treewidth(graph, model, td_text):
    """model is a dict in the model JSON layout; td_text is a PACE .td document."""
    return int(_thick._count_ind_treewidth(graph, json.dumps(model), td_text))


def random_thick_forest(seed, nh, max_clique, density=0.5):
    graph, model = _thick._random_thick_forest(seed, nh, max_clique, density)
    return graph, json.loads(model)
