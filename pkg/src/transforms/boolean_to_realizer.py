"""Turn boolean realizers of arity at most 3 into realizers of no larger size."""
from __future__ import annotations

import logging
from itertools import permutations, product
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from src.poset.core import Arc, CycleDetected, Digraph, Poset, transitive_closure
from src.realizers.certificates import Alpha, BooleanRealizer, ClauseFormula, Order, Realizer, TruthTable
from src.realizers.verify import (
    NotARealizer,
    comparison_bits,
    realized_indices,
    verify_boolean_realizer,
    verify_realizer,
)

logger = logging.getLogger(__name__)


class ArityTooLarge(ValueError):
    """Raised when a boolean realizer has more orders than the conversion handles."""


class NotTransitiveOrientation(ValueError):
    """Raised when an orientation is not a transitive orientation of the incomparability graph."""


class UnmatchedCase(ValueError):
    """Raised when no coordinate symmetry brings a truth table into a known case."""


def orientation_to_two_realizer(p: Poset, orient: Iterable[Arc]) -> Realizer:
    """Two linear extensions, of ``< + orient`` and of ``< + reversed orient``."""

    m = np.zeros((p.n, p.n), dtype=bool)
    for x, y in orient:
        m[x, y] = True
    if not np.array_equal(m | m.T, p.incomparable) or (m & m.T).any():
        raise NotTransitiveOrientation("orientation must pick exactly one direction of every incomparable pair")
    mi = m.astype(np.int64)
    if ((mi @ mi > 0) & ~m).any():
        raise NotTransitiveOrientation("orientation is not transitive")
    orders = []
    for side in (m, m.T):
        xs, ys = np.nonzero(p.strict | side)
        try:
            closed = transitive_closure(Digraph(p.n, frozenset(zip(xs.tolist(), ys.tolist()))))
        except CycleDetected as exc:
            raise NotTransitiveOrientation(str(exc)) from exc
        orders.append(closed.linear_extension().seq)
    realizer = Realizer(tuple(orders))
    if not verify_realizer(p, realizer):
        raise NotTransitiveOrientation("orientation does not yield a realizer")
    return realizer


def _signed_permutations(d: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[bool, ...]]]:
    for perm in permutations(range(d)):
        for flips in product((False, True), repeat=d):
            yield perm, flips


def _transform(orders: Tuple[Order, ...], perm: Tuple[int, ...], flips: Tuple[bool, ...]) -> Tuple[Order, ...]:
    return tuple(tuple(reversed(orders[i])) if flip else orders[i] for i, flip in zip(perm, flips))


def _ones(p: Poset, orders: Tuple[Order, ...]) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Tuple indices used by comparable and by non-comparable pairs, or None if they overlap."""

    idx = realized_indices(BooleanRealizer(orders, TruthTable.conjunction(len(orders))), p.n)
    true_set = frozenset(np.unique(idx[p.rel]).tolist())
    false_set = frozenset(np.unique(idx[~p.rel]).tolist())
    if true_set & false_set:
        return None
    return true_set, true_set | false_set


def _strict_orientation(p: Poset, orders: Tuple[Order, ...], pattern: Alpha) -> List[Arc]:
    bits = comparison_bits(orders, p.n)
    match = np.ones((p.n, p.n), dtype=bool)
    for i, bit in enumerate(pattern):
        match &= bits[i] if bit else ~bits[i]
    match &= ~np.eye(p.n, dtype=bool)
    xs, ys = np.nonzero(match)
    return list(zip(xs.tolist(), ys.tolist()))


def boolean_to_realizer(p: Poset, br: BooleanRealizer) -> Realizer:
    """Realizer of size at most ``br.size`` for a verified boolean realizer with ``br.size <= 3``.

    Cases are tried in a fixed order, each over all signed coordinate
    permutations (reversing an order complements its bit on distinct pairs):
    the formula is a conjunction of a prefix on every realized tuple; there
    is at most one complementary pair of unused tuples; or the ones are
    exactly ``(0,0,1)`` and ``(1,1,1)``.
    """

    d = br.size
    if d > 3:
        raise ArityTooLarge(f"conversion handles at most 3 orders, got {d}")
    if isinstance(br.phi, ClauseFormula):
        br = BooleanRealizer(br.orders, br.phi.to_truth_table())
    if not verify_boolean_realizer(p, br):
        raise NotARealizer("boolean realizer does not reproduce the order")
    if d == 0:
        return Realizer(())

    full = 2 ** d - 1
    candidates = []
    for perm, flips in _signed_permutations(d):
        orders = _transform(br.orders, perm, flips)
        sets = _ones(p, orders)
        if sets is not None:
            candidates.append((perm, flips, orders, sets))

    for j in range(1, d + 1):
        prefix = ((1 << j) - 1) << (d - j)
        for perm, flips, orders, (ones, used) in candidates:
            if all((t in ones) == (t & prefix == prefix) for t in used):
                logger.info("conjunction of %d orders (permutation %s, reversed %s)", j, perm, flips)
                return _checked(p, Realizer(orders[:j]))

    for perm, flips, orders, (ones, used) in candidates:
        holes = [t for t in range(2 ** d) if t < full - t and t not in ones and full - t not in ones]
        if len(holes) <= 1:
            pattern = TruthTable.tuple_of(holes[0], d) if holes else None
            orient = _strict_orientation(p, orders, pattern) if pattern is not None else []
            logger.info("single unused complementary pair %s (permutation %s)", pattern, perm)
            return orientation_to_two_realizer(p, orient)

    target = frozenset({TruthTable.index((0, 0, 1)), full})
    for perm, flips, orders, (ones, used) in candidates:
        if d == 3 and ones == target:
            logger.info("ones at (0,0,1) and (1,1,1) after permutation %s, reversed %s", perm, flips)
            return orientation_to_two_realizer(p, _strict_orientation(p, orders[:2], (1, 0)))

    raise UnmatchedCase("truth table matches no case under any signed coordinate permutation")


def _checked(p: Poset, realizer: Realizer) -> Realizer:
    if not verify_realizer(p, realizer):
        raise RuntimeError("conversion produced a family that does not realize the order")
    return realizer


__all__ = [
    "ArityTooLarge",
    "NotTransitiveOrientation",
    "UnmatchedCase",
    "boolean_to_realizer",
    "orientation_to_two_realizer",
]
