"""Graph reconstruction workbench for P4-disconnected graphs.

Small graphs (up to 32 vertices) with bit-mask adjacency, canonical labelling,
P4-structure, class recognisers, decks, and exhaustive verification over all
graphs of a given order.
"""

from .canonical import (
    CanonicalCode,
    canonical_form,
    from_graph6,
    is_isomorphic,
    to_graph6,
    triad_canonical_form,
)
from .graph_core import Graph, P4, Triad, complement, delete_vertex, induced_subgraph

__all__ = [
    "CanonicalCode",
    "Graph",
    "P4",
    "Triad",
    "canonical_form",
    "complement",
    "delete_vertex",
    "from_graph6",
    "induced_subgraph",
    "is_isomorphic",
    "to_graph6",
    "triad_canonical_form",
]

__version__ = "0.1.0"
