"""Conversions between certificate kinds and refuters for candidate certificates."""
from .boolean_to_realizer import (
    ArityTooLarge,
    NotTransitiveOrientation,
    UnmatchedCase,
    boolean_to_realizer,
    orientation_to_two_realizer,
)
from .local_to_boolean import OccurrenceIndex, PartitionScheme, build_partition_scheme, conflict_graph, local3_to_boolean
from .local_to_realizer import NotALocalRealizer, WidthTooLarge, local2_to_realizer, require_local_realizer
from .refuters import (
    MalformedCandidate,
    PreconditionUnmet,
    RamseyWitness,
    Refutation,
    ramsey_cycle_witness,
    refute_boolean_realizer,
    triple_colors,
)

__all__ = [
    "ArityTooLarge",
    "MalformedCandidate",
    "NotALocalRealizer",
    "NotTransitiveOrientation",
    "OccurrenceIndex",
    "PartitionScheme",
    "PreconditionUnmet",
    "RamseyWitness",
    "Refutation",
    "UnmatchedCase",
    "WidthTooLarge",
    "boolean_to_realizer",
    "build_partition_scheme",
    "conflict_graph",
    "local2_to_realizer",
    "local3_to_boolean",
    "orientation_to_two_realizer",
    "ramsey_cycle_witness",
    "refute_boolean_realizer",
    "require_local_realizer",
    "triple_colors",
]
