"""Certificate types and their verifiers."""
from .certificates import Alpha, BooleanRealizer, ClauseFormula, Formula, LocalRealizer, Order, Realizer, TruthTable
from .formats import Certificate, parse_certificate, read_certificate, serialize_certificate, write_certificate
from .verify import (
    ArityMismatch,
    MalformedOrder,
    NotARealizer,
    NotAnExtension,
    comparison_bits,
    eval_boolean_relation,
    induced_relation,
    local_width,
    normalize_truth_table,
    realized_indices,
    reversal_matrix,
    verify_boolean_realizer,
    verify_local_realizer,
    verify_realizer,
)

__all__ = [
    "Alpha",
    "Certificate",
    "ArityMismatch",
    "BooleanRealizer",
    "ClauseFormula",
    "Formula",
    "LocalRealizer",
    "MalformedOrder",
    "NotARealizer",
    "NotAnExtension",
    "Order",
    "Realizer",
    "TruthTable",
    "comparison_bits",
    "eval_boolean_relation",
    "induced_relation",
    "local_width",
    "normalize_truth_table",
    "parse_certificate",
    "read_certificate",
    "realized_indices",
    "reversal_matrix",
    "serialize_certificate",
    "verify_boolean_realizer",
    "verify_local_realizer",
    "verify_realizer",
    "write_certificate",
]
