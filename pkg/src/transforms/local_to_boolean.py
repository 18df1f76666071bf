"""Width-3 local realizers to boolean realizers built from block partitions.

The output orders are a linear extension ``L*`` followed, for every partition
of the ground set into gadget-ordered blocks, by the blocks listed upwards and
the blocks listed downwards. The formula is ``a* and (a1 or a1') and ...``,
so ``x < y`` exactly when ``x`` precedes ``y`` in ``L*`` and in every block
holding both.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple

from src.poset.core import Digraph, PartialLinearExtension, Poset
from src.realizers.certificates import BooleanRealizer, ClauseFormula, LocalRealizer, Order
from src.realizers.verify import verify_boolean_realizer
from src.solvers.coloring import color_count, degeneracy_coloring
from src.transforms.local_to_realizer import require_local_realizer

logger = logging.getLogger(__name__)

OCCURRENCES = 3

Block = Tuple[int, ...]
Partition = Tuple[Block, ...]


@dataclass(frozen=True)
class OccurrenceIndex:
    """Gadgets padded so that every element occurs exactly three times.

    ``slots[x]`` lists the gadgets holding ``x`` in gadget order; the ``p``-th
    entry is the ``p``-th occurrence (0-based).
    """

    gadgets: Tuple[PartialLinearExtension, ...]
    slots: Tuple[Tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int, lr: LocalRealizer) -> "OccurrenceIndex":
        gadgets = list(lr.ples)
        counts = [0] * n
        for ple in gadgets:
            for x in ple.seq:
                counts[x] += 1
        for x in range(n):
            gadgets.extend(PartialLinearExtension((x,)) for _ in range(OCCURRENCES - counts[x]))
        slots: List[List[int]] = [[] for _ in range(n)]
        for g, ple in enumerate(gadgets):
            for x in ple.seq:
                slots[x].append(g)
        return cls(tuple(gadgets), tuple(tuple(s) for s in slots))

    def level(self, x: int, gadget: int) -> int:
        return self.slots[x].index(gadget)

    def restrict(self, chosen: Sequence[Sequence[int]]) -> Partition:
        """Blocks cut from each gadget by ``chosen[g]``, then singletons for uncovered elements."""

        blocks: List[Block] = []
        covered = set()
        for g, members in enumerate(chosen):
            if members:
                block = self.gadgets[g].restrict(members).seq
                blocks.append(block)
                covered.update(block)
        blocks.extend((x,) for x in range(len(self.slots)) if x not in covered)
        return tuple(blocks)


@dataclass(frozen=True)
class PartitionScheme:
    base_order: Order
    occurrences: OccurrenceIndex
    colors: Dict[int, int]
    color_count: int
    partitions: Tuple[Partition, ...]

    def orders(self) -> Tuple[Order, ...]:
        out = [self.base_order]
        for partition in self.partitions:
            out.append(tuple(x for block in partition for x in block))
            out.append(tuple(x for block in reversed(partition) for x in block))
        return tuple(out)

    def formula(self) -> ClauseFormula:
        t = len(self.partitions)
        clauses = [(0,)] + [(1 + 2 * i, 2 + 2 * i) for i in range(t)]
        return ClauseFormula(1 + 2 * t, tuple(clauses))

    def to_boolean_realizer(self) -> BooleanRealizer:
        return BooleanRealizer(self.orders(), self.formula())


def conflict_graph(p: Poset, occ: OccurrenceIndex, base_order: Order) -> Digraph:
    """Edges ``xy`` with ``x`` before ``y`` in the base order but above it in a gadget, at different occurrence levels."""

    rank = {x: i for i, x in enumerate(base_order)}
    edges = set()
    for g, gadget in enumerate(occ.gadgets):
        for low, high in combinations(gadget.seq, 2):
            if rank[high] < rank[low] and occ.level(high, g) != occ.level(low, g):
                edges.add((min(low, high), max(low, high)))
    return Digraph(p.n, frozenset(edges))


def build_partition_scheme(p: Poset, lr: LocalRealizer) -> PartitionScheme:
    require_local_realizer(p, lr, OCCURRENCES)
    occ = OccurrenceIndex.build(p.n, lr)
    base = p.linear_extension().seq
    conflicts = conflict_graph(p, occ, base)
    colors = degeneracy_coloring(conflicts)
    c = color_count(colors)
    logger.debug("conflict graph: %d edges, %d colours", len(conflicts.arcs), c)

    partitions: List[Partition] = []
    for level in range(OCCURRENCES):
        chosen = [[x for x in gadget.seq if occ.slots[x][level] == g] for g, gadget in enumerate(occ.gadgets)]
        partitions.append(occ.restrict(chosen))
    for lo, hi in combinations(range(OCCURRENCES), 2):
        for a, b in permutations(range(c), 2):
            chosen = [
                [
                    x
                    for x in gadget.seq
                    if (colors[x] == a and occ.slots[x][lo] == g) or (colors[x] == b and occ.slots[x][hi] == g)
                ]
                for g, gadget in enumerate(occ.gadgets)
            ]
            partitions.append(occ.restrict(chosen))
    return PartitionScheme(base, occ, dict(colors), c, tuple(partitions))


def local3_to_boolean(p: Poset, lr: LocalRealizer) -> BooleanRealizer:
    """Boolean realizer of size ``1 + 2 * (3 + 3c(c-1))`` where ``c`` is the number of colours used."""

    scheme = build_partition_scheme(p, lr)
    br = scheme.to_boolean_realizer()
    if not verify_boolean_realizer(p, br):
        raise RuntimeError("partition scheme does not reproduce the order")
    logger.info("%d partitions from %d colours give %d orders", len(scheme.partitions), scheme.color_count, br.size)
    return br


__all__ = [
    "OccurrenceIndex",
    "PartitionScheme",
    "build_partition_scheme",
    "conflict_graph",
    "local3_to_boolean",
]
