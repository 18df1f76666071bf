"""Seeded random posets, digraphs and certificates used by tests and sweeps."""
from __future__ import annotations

import logging
from collections import Counter
from itertools import combinations
from typing import Iterator, List, Tuple

import numpy as np

from src.generators.families import BadParameter
from src.poset.core import Digraph, PartialLinearExtension, Poset, transitive_closure
from src.realizers.certificates import LocalRealizer, Realizer

logger = logging.getLogger(__name__)


def poset_from_orders(orders: List[Tuple[int, ...]], n: int) -> Poset:
    """Intersection of full linear orders."""

    rel = np.ones((n, n), dtype=bool)
    for order in orders:
        pos = np.empty(n, dtype=int)
        pos[np.asarray(order, dtype=int)] = np.arange(n)
        rel &= pos[:, None] <= pos[None, :]
    return Poset(rel)


def random_poset(n: int, rng: np.random.Generator, density: float = 0.3) -> Poset:
    """Closure of uniformly random covers along a random topological order."""

    order = rng.permutation(n)
    arcs = {
        (int(order[i]), int(order[j]))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    }
    return transitive_closure(Digraph(n, frozenset(arcs)))


def random_dimensional_poset(n: int, d: int, rng: np.random.Generator) -> Tuple[Poset, Realizer]:
    """Poset of dimension at most ``d``: the intersection of ``d`` random permutations."""

    orders = [tuple(int(x) for x in rng.permutation(n)) for _ in range(d)]
    return poset_from_orders(orders, n), Realizer(tuple(orders))


def random_acyclic_digraph(nv: int, rng: np.random.Generator, density: float = 0.4) -> Digraph:
    order = rng.permutation(nv)
    arcs = {
        (int(order[i]), int(order[j]))
        for i in range(nv)
        for j in range(i + 1, nv)
        if rng.random() < density
    }
    return Digraph(nv, frozenset(arcs))


def random_linear_extension(p: Poset, rng: np.random.Generator) -> PartialLinearExtension:
    """Linear extension built by repeatedly taking a uniformly random minimal element."""

    remaining = np.ones(p.n, dtype=bool)
    seq: List[int] = []
    for _ in range(p.n):
        blocked = (p.strict & remaining[:, None]).any(axis=0)
        minimal = np.nonzero(remaining & ~blocked)[0]
        pick = int(rng.choice(minimal))
        seq.append(pick)
        remaining[pick] = False
    return PartialLinearExtension(tuple(seq))


def random_local_realizer(
    n: int,
    rng: np.random.Generator,
    width: int = 3,
    extra: int = 4,
) -> Tuple[Poset, LocalRealizer]:
    """Valid local realizer mixing full and partial linear extensions.

    Starts from a two-dimensional poset and its realizer, then inserts
    partial linear extensions of the same poset at random positions. Extra
    members only reverse incomparable pairs, so the family stays valid.
    """

    p, realizer = random_dimensional_poset(n, 2, rng)
    ples = [PartialLinearExtension(order) for order in realizer.orders]
    counts = Counter({x: 2 for x in range(n)})
    for _ in range(extra):
        free = [x for x in range(n) if counts[x] < width]
        if len(free) < 2:
            break
        size = int(rng.integers(2, len(free) + 1))
        chosen = set(int(x) for x in rng.choice(free, size=size, replace=False))
        ple = random_linear_extension(p, rng).restrict(chosen)
        ples.insert(int(rng.integers(0, len(ples) + 1)), ple)
        counts.update(chosen)
    logger.debug("Random local realizer on %d elements with %d members", n, len(ples))
    return p, LocalRealizer(tuple(ples))


def random_partial_local_realizer(
    n: int,
    rng: np.random.Generator,
    attempts: int = 1000,
) -> Tuple[Poset, LocalRealizer]:
    """Width-3 local realizer in which no member covers the whole ground set.

    From a two-dimensional realizer ``L1, L2`` drop the first element ``z`` of
    ``L1`` and the last element ``w`` of ``L2``. ``z`` is minimal and ``w`` is
    maximal, so the bridge ``z, (elements incomparable to z or w in L1 order), w``
    is a partial linear extension restoring the two lost directions. Draws are
    repeated until ``z != w`` and the bridge misses some element.
    """

    if n < 3:
        raise BadParameter(f"A partial-only local realizer needs at least 3 elements, got {n}")
    for _ in range(attempts):
        p, realizer = random_dimensional_poset(n, 2, rng)
        first, second = realizer.orders
        z, w = first[0], second[-1]
        if z == w:
            continue
        loose = p.incomparable[z] | p.incomparable[w]
        middle = [x for x in first if loose[x] and x not in (z, w)]
        bridge = (z, *middle, w)
        if len(bridge) == n:
            continue
        ples = [
            PartialLinearExtension(first[1:]),
            PartialLinearExtension(second[:-1]),
            PartialLinearExtension(bridge),
        ]
        ples = [ples[int(i)] for i in rng.permutation(3)]
        logger.debug("Partial-only local realizer on %d elements, bridge of %d", n, len(bridge))
        return p, LocalRealizer(tuple(ples))
    raise BadParameter(f"No partial-only local realizer on {n} elements after {attempts} draws")


def naturally_labeled_posets(n: int) -> Iterator[Poset]:
    """Every poset on ``0..n-1`` whose order is contained in the integer order.

    Each isomorphism type occurs at least once.
    """

    pairs = list(combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        rel = np.eye(n, dtype=bool)
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                rel[i, j] = True
        if not ((rel @ rel) & ~rel).any():
            yield Poset(rel, check=False)


__all__ = [
    "naturally_labeled_posets",
    "poset_from_orders",
    "random_acyclic_digraph",
    "random_dimensional_poset",
    "random_linear_extension",
    "random_local_realizer",
    "random_partial_local_realizer",
    "random_poset",
]
