"""Certificates that a candidate family cannot be what it claims.

``ramsey_cycle_witness`` inspects a proposed local realizer of the incidence
poset of K_n; ``refute_boolean_realizer`` checks a proposed boolean realizer
of a gadget poset against paths of length two and three in its digraph.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from src.config import Settings
from src.generators.families import incidence_edge_ids
from src.generators.gadget_poset import GadgetPoset
from src.poset.core import Arc, MalformedOrder, arc_digraph
from src.realizers.certificates import Alpha, BooleanRealizer, LocalRealizer
from src.realizers.verify import comparison_bits
from src.solvers.coloring import exact_chromatic_number

logger = logging.getLogger(__name__)


class PreconditionUnmet(ValueError):
    """Raised when a family lacks the reversals a refuter relies on."""


class MalformedCandidate(ValueError):
    """Raised when a candidate boolean realizer does not fit the instance."""


@dataclass(frozen=True)
class RamseyWitness:
    """Four vertices whose four triples share ``color``, closing a cycle inside member ``ple_index``.

    Vertex ids and occurrence numbers are 0-based. ``cycle`` lists element ids
    ``v_j, v_j v_l, v_k, v_i v_k``; ``violated`` is a pair ``x < y`` of the
    poset that the member lists the other way round.
    """

    quadruple: Tuple[int, int, int, int]
    color: Tuple[int, int]
    ple_index: int
    cycle: Tuple[int, int, int, int]
    violated: Arc


def triple_colors(n: int, family: LocalRealizer) -> Dict[Tuple[int, int, int], Tuple[int, int]]:
    """Least ``(p, q)`` per triple ``i<j<k``: a member holding the ``p``-th occurrence of ``v_j`` above the ``q``-th of ``v_i v_k``."""

    edge = incidence_edge_ids(n)
    size = n + len(edge)
    seen: Dict[int, int] = {}
    rank: List[Dict[int, int]] = []
    for ple in family.ples:
        if any(not 0 <= x < size for x in ple.seq):
            raise MalformedOrder(f"member {ple.seq} leaves the ground set 0..{size - 1}")
        here = {}
        for x in ple.seq:
            here[x] = seen.get(x, 0)
            seen[x] = here[x] + 1
        rank.append(here)

    colors: Dict[Tuple[int, int, int], Tuple[int, int]] = {}
    for i, j, k in combinations(range(n), 3):
        e = edge[i, k]
        best: Optional[Tuple[int, int]] = None
        for idx, ple in enumerate(family.ples):
            pos = ple.positions
            if e in pos and j in pos and pos[e] < pos[j]:
                color = (rank[idx][j], rank[idx][e])
                if best is None or color < best:
                    best = color
        if best is None:
            raise PreconditionUnmet(f"no member puts v{i + 1}v{k + 1} below v{j + 1}")
        colors[i, j, k] = best
    return colors


def ramsey_cycle_witness(n: int, family: LocalRealizer) -> Optional[RamseyWitness]:
    """First quadruple ``i<j<k<l`` (lexicographically) whose four triples share a colour, or None."""

    colors = triple_colors(n, family)
    edge = incidence_edge_ids(n)
    for i, j, k, l in combinations(range(n), 4):
        color = colors[i, j, k]
        if not (colors[i, j, l] == colors[i, k, l] == colors[j, k, l] == color):
            continue
        p, _ = color
        holder = _occurrence_member(family, j, p)
        ple = family.ples[holder]
        pos = ple.positions
        cycle = (j, edge[j, l], k, edge[i, k])
        if pos[edge[j, l]] < pos[j]:
            violated = (j, edge[j, l])
        else:
            violated = (k, edge[i, k])
        logger.info("monochromatic quadruple %s with colour %s in member %d", (i, j, k, l), color, holder)
        return RamseyWitness((i, j, k, l), color, holder, cycle, violated)
    return None


def _occurrence_member(family: LocalRealizer, x: int, p: int) -> int:
    count = 0
    for idx, ple in enumerate(family.ples):
        if x in ple.positions:
            if count == p:
                return idx
            count += 1
    raise PreconditionUnmet(f"element {x} has no occurrence {p}")


@dataclass(frozen=True)
class Refutation:
    """Outcome of checking a candidate; ``kind`` is ``triple``, ``quadruple``, ``coloring`` or ``consistent``.

    ``walk`` is a vertex walk of the digraph and ``pair`` the two edge ids it
    compares; for ``coloring`` they are empty and ``chromatic_number`` exceeds
    ``2 ** d``. ``chromatic_number`` is filled in whenever the last check ran.
    """

    kind: str
    walk: Tuple[int, ...] = ()
    pair: Optional[Arc] = None
    alpha: Optional[Alpha] = None
    chromatic_number: Optional[int] = None

    @property
    def refuted(self) -> bool:
        return self.kind != "consistent"

    def __bool__(self) -> bool:
        return self.refuted


def refute_boolean_realizer(inst: GadgetPoset, br: BooleanRealizer, settings: Settings | None = None) -> Refutation:
    """Look for a contradiction in ``br`` as a boolean realizer of ``inst.p``.

    Each path ``u v w`` gets ``alpha(uvw)``, the comparison tuple of ``(uv, vw)``.
    Checked in turn: some ``phi(alpha(uvw)) = 1`` although the gadget of ``v``
    rules out ``uv <= vw``; some path ``u v w x`` with equal tuples on both
    halves, ``phi = 0`` there and ``uv < wx``; and last, whether ``2 ** d``
    tuples are too few to colour the path-of-length-two digraph properly, so
    that some arc must repeat a tuple even where no direct witness showed up.
    """

    m = len(inst.edges)
    d = br.size
    if br.phi.arity != d:
        raise MalformedCandidate(f"formula arity {br.phi.arity} differs from {d} orders")
    try:
        bits = comparison_bits(br.orders, m)
    except MalformedOrder as exc:
        raise MalformedCandidate(str(exc)) from exc

    edge_id = {arc: e for e, arc in enumerate(inst.edges)}
    paths2 = arc_digraph(arc_digraph(inst.g))

    def alpha_of(walk: Tuple[int, ...]) -> Tuple[Alpha, int, int]:
        first, second = edge_id[walk[0], walk[1]], edge_id[walk[1], walk[2]]
        return tuple(int(b) for b in bits[:, first, second]), first, second

    alphas: List[Alpha] = []
    for v in range(paths2.nv):
        walk = paths2.walk(v)
        alpha, first, second = alpha_of(walk)
        alphas.append(alpha)
        if br.phi(alpha) and not inst.p.leq(first, second):
            logger.info("candidate relates %d <= %d along path %s", first, second, walk)
            return Refutation("triple", walk, (first, second), alpha)

    for a, b in paths2.sorted_arcs:
        if alphas[a] != alphas[b]:
            continue
        walk = paths2.walk(a) + paths2.walk(b)[-1:]
        first, last = edge_id[walk[0], walk[1]], edge_id[walk[2], walk[3]]
        if not br.phi(alphas[a]) and inst.p.lt(first, last):
            logger.info("candidate misses %d < %d along path %s", first, last, walk)
            return Refutation("quadruple", walk, (first, last), alphas[a])

    chi = exact_chromatic_number(paths2, settings=settings)
    if 2 ** d < chi:
        logger.info("%d tuples cannot properly colour %d paths with chi = %d", 2 ** d, paths2.nv, chi)
        return Refutation("coloring", chromatic_number=chi)
    return Refutation("consistent", chromatic_number=chi)


__all__ = [
    "MalformedCandidate",
    "PreconditionUnmet",
    "RamseyWitness",
    "Refutation",
    "ramsey_cycle_witness",
    "refute_boolean_realizer",
    "triple_colors",
]
