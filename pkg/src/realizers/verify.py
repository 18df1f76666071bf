"""Verifiers for realizers, boolean realizers and local realizers.

Every verifier checks all ``n**2`` ordered pairs; inputs are desk-scale.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Sequence

import numpy as np

from src.poset.core import MalformedOrder, Poset, order_positions
from src.realizers.certificates import BooleanRealizer, LocalRealizer, Realizer, TruthTable

logger = logging.getLogger(__name__)


class ArityMismatch(ValueError):
    """Raised when a formula's arity differs from the number of orders."""


class NotAnExtension(ValueError):
    """Raised when a partial linear extension contradicts the order on its support."""


class NotARealizer(ValueError):
    """Raised when an operation requires a verified certificate and gets something else."""


def comparison_bits(orders: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """``bits[i, x, y]`` is ``x <=_i y``; shape ``(d, n, n)``."""

    bits = np.empty((len(orders), n, n), dtype=bool)
    for i, order in enumerate(orders):
        pos = order_positions(order, n)
        bits[i] = pos[:, None] <= pos[None, :]
    return bits


def verify_realizer(p: Poset, r: Realizer) -> bool:
    """True iff the orders are linear extensions whose intersection is the order of ``p``."""

    bits = comparison_bits(r.orders, p.n)
    meet = bits.all(axis=0) if r.size else np.ones((p.n, p.n), dtype=bool)
    return bool(np.array_equal(meet, p.rel))


def induced_relation(br: BooleanRealizer, n: int) -> np.ndarray:
    """Matrix of phi applied to the comparison bits of every ordered pair."""

    if br.phi.arity != br.size:
        raise ArityMismatch(f"Formula has arity {br.phi.arity} but there are {br.size} orders")
    return br.phi.evaluate(comparison_bits(br.orders, n))


def eval_boolean_relation(br: BooleanRealizer, x: int, y: int) -> bool:
    """phi((x <=_1 y), ..., (x <=_d y)); no partial-order promise is made."""

    alpha = []
    for order in br.orders:
        pos = {e: i for i, e in enumerate(order)}
        alpha.append(int(pos[x] <= pos[y]))
    return bool(br.phi(tuple(alpha)))


def verify_boolean_realizer(p: Poset, br: BooleanRealizer) -> bool:
    """True iff phi reproduces the order on every ordered pair, including ``x = y``."""

    return bool(np.array_equal(induced_relation(br, p.n), p.rel))


def reversal_matrix(p: Poset, lr: LocalRealizer) -> np.ndarray:
    """``rev[x, y]`` is true when some partial linear extension places ``y`` strictly below ``x``."""

    rev = np.zeros((p.n, p.n), dtype=bool)
    for ple in lr.ples:
        if not ple.extends(p):
            raise NotAnExtension(f"Partial linear extension {ple.seq} contradicts the order")
        idx = np.asarray(ple.seq, dtype=int)
        if idx.size < 2:
            continue
        above = np.triu(np.ones((idx.size, idx.size), dtype=bool), k=1)
        # above[i, j] with i < j: seq[j] sits above seq[i], so (seq[j], seq[i]) is reversed
        rev[np.ix_(idx, idx)] |= above.T
    return rev


def verify_local_realizer(p: Poset, lr: LocalRealizer) -> bool:
    """True iff ``x <= y`` holds exactly when no member orders ``y`` strictly below ``x``."""

    rev = reversal_matrix(p, lr)
    return bool(np.array_equal(~rev, p.rel))


def local_width(lr: LocalRealizer) -> int:
    """Maximum number of members any element occurs in."""

    counts = Counter(x for ple in lr.ples for x in ple.seq)
    return max(counts.values(), default=0)


def realized_indices(br: BooleanRealizer, n: int) -> np.ndarray:
    """Table index of the comparison tuple of every ordered pair, shape ``(n, n)``."""

    idx = np.zeros((n, n), dtype=np.int64)
    for row in comparison_bits(br.orders, n):
        idx = (idx << 1) | row.astype(np.int64)
    return idx


def normalize_truth_table(p: Poset, br: BooleanRealizer) -> TruthTable:
    """Keep phi on tuples realized by some ordered pair and set it to 0 everywhere else."""

    if not isinstance(br.phi, TruthTable):
        raise NotARealizer("Normalization needs an extensional truth table")
    if not verify_boolean_realizer(p, br):
        raise NotARealizer("Boolean realizer does not reproduce the order")
    used = np.zeros(2 ** br.size, dtype=bool)
    used[np.unique(realized_indices(br, p.n))] = True
    bits = np.asarray(br.phi.bits, dtype=bool) & used
    table = TruthTable(br.size, tuple(bits.tolist()))
    full = 2 ** br.size - 1
    # antisymmetry leaves phi at 0 on one tuple of every complementary pair
    clash = [i for i in range(2 ** br.size) if i != full - i and bits[i] and bits[full - i]]
    if clash:
        raise NotARealizer(f"phi holds on tuple {TruthTable.tuple_of(clash[0], br.size)} and on its complement")
    logger.debug("Normalized table keeps %d of %d ones", int(bits.sum()), sum(br.phi.bits))
    return table


__all__ = [
    "ArityMismatch",
    "MalformedOrder",
    "NotARealizer",
    "NotAnExtension",
    "comparison_bits",
    "eval_boolean_relation",
    "induced_relation",
    "local_width",
    "normalize_truth_table",
    "realized_indices",
    "reversal_matrix",
    "verify_boolean_realizer",
    "verify_local_realizer",
    "verify_realizer",
]
