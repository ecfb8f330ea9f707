"""Exact coloring of mixed hypergraphs and bi-hypergraphs."""

__version__ = "0.1.0"

from .core import BiHypergraph, Coloring, MixedHypergraph, is_proper  # noqa: E402
from .solver import decide_colorable, enumerate_proper_colorings, upper_chromatic_number  # noqa: E402

__all__ = [
    "BiHypergraph",
    "Coloring",
    "MixedHypergraph",
    "decide_colorable",
    "enumerate_proper_colorings",
    "is_proper",
    "upper_chromatic_number",
]
