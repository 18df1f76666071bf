"""Order relations, digraphs and their text formats."""
from .core import (
    Arc,
    CycleDetected,
    Digraph,
    MalformedGraph,
    MalformedOrder,
    NotAPartialOrder,
    PartialLinearExtension,
    Poset,
    arc_digraph,
    critical_pairs,
    extension_of_closed,
    incomparability_graph,
    order_positions,
    transitive_closure,
)
from .formats import (
    FormatError,
    parse_digraph,
    parse_poset,
    read_digraph,
    read_poset,
    serialize_digraph,
    serialize_poset,
    write_digraph,
    write_poset,
)

__all__ = [
    "Arc",
    "CycleDetected",
    "Digraph",
    "FormatError",
    "MalformedGraph",
    "MalformedOrder",
    "NotAPartialOrder",
    "PartialLinearExtension",
    "Poset",
    "arc_digraph",
    "critical_pairs",
    "extension_of_closed",
    "incomparability_graph",
    "order_positions",
    "parse_digraph",
    "parse_poset",
    "read_digraph",
    "read_poset",
    "serialize_digraph",
    "serialize_poset",
    "transitive_closure",
    "write_digraph",
    "write_poset",
]
