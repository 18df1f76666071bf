"""Poset families with their explicit certificates, plus seeded fixtures."""
from .families import (
    BadParameter,
    IncidencePoset,
    StandardExample,
    antichain,
    chain,
    incidence_edge_ids,
    incidence_poset,
    standard_example,
)
from .fixtures import (
    naturally_labeled_posets,
    poset_from_orders,
    random_acyclic_digraph,
    random_dimensional_poset,
    random_linear_extension,
    random_local_realizer,
    random_partial_local_realizer,
    random_poset,
)
from .gadget_poset import GadgetPoset, Magnitude, SizeCapExceeded, SizePrediction, build_gadget_poset, predict_gadget_poset_sizes

__all__ = [
    "BadParameter",
    "GadgetPoset",
    "IncidencePoset",
    "Magnitude",
    "SizeCapExceeded",
    "SizePrediction",
    "StandardExample",
    "antichain",
    "build_gadget_poset",
    "chain",
    "incidence_edge_ids",
    "incidence_poset",
    "naturally_labeled_posets",
    "poset_from_orders",
    "predict_gadget_poset_sizes",
    "random_acyclic_digraph",
    "random_dimensional_poset",
    "random_linear_extension",
    "random_local_realizer",
    "random_partial_local_realizer",
    "random_poset",
    "standard_example",
]
