"""Standard examples, incidence posets of complete graphs, chains and antichains.

Every generator returns certificates that already passed their verifier.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from src.poset.core import Digraph, Poset, transitive_closure
from src.realizers.certificates import BooleanRealizer, LocalRealizer, Realizer, TruthTable
from src.realizers.verify import verify_boolean_realizer, verify_local_realizer, verify_realizer

logger = logging.getLogger(__name__)


class BadParameter(ValueError):
    """Raised when a size parameter is outside the range a construction accepts."""


class StandardExample(NamedTuple):
    poset: Poset
    realizer: Realizer
    local: Optional[LocalRealizer]
    boolean: Optional[BooleanRealizer]


class IncidencePoset(NamedTuple):
    poset: Poset
    boolean: BooleanRealizer


def chain(n: int) -> Poset:
    """Total order ``0 < 1 < ... < n-1``."""

    if n < 0:
        raise BadParameter(f"chain needs n >= 0, got {n}")
    return Poset(np.triu(np.ones((n, n), dtype=bool)))


def antichain(n: int) -> Poset:
    if n < 0:
        raise BadParameter(f"antichain needs n >= 0, got {n}")
    return Poset(np.eye(n, dtype=bool))


def _checked(ok: bool, what: str) -> None:
    if not ok:
        logger.error("Generated %s failed verification", what)
        raise RuntimeError(f"Generated {what} failed verification")


def standard_example(k: int) -> StandardExample:
    """S_k with ids ``a_i = i-1`` and ``b_i = k+i-1`` for ``i = 1..k``.

    The width-3 local realizer is attached for ``k >= 3`` and the four-order
    boolean realizer for ``k >= 4``; smaller ``k`` get ``None`` there.
    """

    if k < 2:
        raise BadParameter(f"standard example needs k >= 2, got {k}")
    a = list(range(k))
    b = list(range(k, 2 * k))
    labels = {x: f"a{x + 1}" for x in a}
    labels.update({y: f"b{y - k + 1}" for y in b})
    covers = Digraph(2 * k, frozenset((a[i], b[j]) for i in range(k) for j in range(k) if i != j))
    poset = transitive_closure(covers, labels=labels)

    orders = []
    for i in range(k):
        orders.append(tuple(a[:i] + a[i + 1:] + [b[i], a[i]] + b[:i] + b[i + 1:]))
    realizer = Realizer(tuple(orders))
    _checked(verify_realizer(poset, realizer), f"realizer of S_{k}")

    ascending = tuple(a + b)
    descending = tuple(a[::-1] + b[::-1])

    local = None
    if k >= 3:
        local = LocalRealizer.from_sequences([ascending, descending] + [(b[i], a[i]) for i in range(k)])
        _checked(verify_local_realizer(poset, local), f"local realizer of S_{k}")

    boolean = None
    if k >= 4:
        interleaved = tuple(x for i in range(k) for x in (b[i], a[i]))
        interleaved_rev = tuple(x for i in reversed(range(k)) for x in (b[i], a[i]))
        phi = TruthTable.from_function(4, lambda t: t[0] and t[1] and (t[2] or t[3]))
        boolean = BooleanRealizer((ascending, descending, interleaved, interleaved_rev), phi)
        _checked(verify_boolean_realizer(poset, boolean), f"boolean realizer of S_{k}")

    logger.debug("Built S_%d with %d orders", k, realizer.size)
    return StandardExample(poset, realizer, local, boolean)


def incidence_edge_ids(n: int) -> Dict[Tuple[int, int], int]:
    """Ids of the edges ``v_i v_j`` (0-based ``i < j``): ``n`` plus the lexicographic rank."""

    return {pair: n + idx for idx, pair in enumerate(combinations(range(n), 2))}


def incidence_poset(n: int) -> IncidencePoset:
    """Vertices and edges of K_n ordered by incidence, with a four-order boolean realizer.

    The orders are built from blocks, each a vertex followed by some of its
    edges:

    * ``A``: ``v_i, v_i v_{i+1} .. v_i v_n`` for ``i = 1..n``
    * ``B``: ``v_i, v_i v_n .. v_i v_{i+1}`` for ``i = n..1``
    * ``C``: ``v_i, v_1 v_i .. v_{i-1} v_i`` for ``i = 1..n``
    * ``D``: ``v_i, v_{i-1} v_i .. v_1 v_i`` for ``i = n..1``
    """

    if n < 2:
        raise BadParameter(f"incidence poset needs n >= 2, got {n}")
    edge = incidence_edge_ids(n)
    labels = {v: f"v{v + 1}" for v in range(n)}
    labels.update({e: f"v{i + 1}v{j + 1}" for (i, j), e in edge.items()})
    covers = Digraph(n + len(edge), frozenset(arc for (i, j), e in edge.items() for arc in ((i, e), (j, e))))
    poset = transitive_closure(covers, labels=labels)

    def block(v: int, partners: List[int]) -> List[int]:
        return [v] + [edge[min(v, u), max(v, u)] for u in partners]

    order_a: List[int] = []
    for i in range(n):
        order_a += block(i, list(range(i + 1, n)))
    order_b: List[int] = []
    for i in reversed(range(n)):
        order_b += block(i, list(reversed(range(i + 1, n))))
    order_c: List[int] = []
    for i in range(n):
        order_c += block(i, list(range(i)))
    order_d: List[int] = []
    for i in reversed(range(n)):
        order_d += block(i, list(reversed(range(i))))

    phi = TruthTable.from_function(4, lambda t: (t[0] and t[1]) or (t[2] and t[3]))
    boolean = BooleanRealizer((tuple(order_a), tuple(order_b), tuple(order_c), tuple(order_d)), phi)
    _checked(verify_boolean_realizer(poset, boolean), f"boolean realizer of P_{n}")
    logger.debug("Built P_%d on %d elements", n, poset.n)
    return IncidencePoset(poset, boolean)


__all__ = [
    "BadParameter",
    "IncidencePoset",
    "StandardExample",
    "antichain",
    "chain",
    "incidence_edge_ids",
    "incidence_poset",
    "standard_example",
]
