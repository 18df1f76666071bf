"""Width-2 local realizers to realizers of size at most 2."""
from __future__ import annotations

import logging
from typing import List, Tuple

import networkx as nx

from src.poset.core import Poset, incomparability_graph
from src.realizers.certificates import LocalRealizer, Realizer
from src.realizers.verify import NotAnExtension, local_width, verify_local_realizer, verify_realizer

logger = logging.getLogger(__name__)


class WidthTooLarge(ValueError):
    """Raised when a local realizer is wider than a conversion accepts."""


class NotALocalRealizer(ValueError):
    """Raised when a conversion receives a family that does not verify as a local realizer."""


def require_local_realizer(p: Poset, lr: LocalRealizer, max_width: int) -> None:
    width = local_width(lr)
    if width > max_width:
        raise WidthTooLarge(f"local realizer has width {width}, at most {max_width} accepted")
    try:
        ok = verify_local_realizer(p, lr)
    except NotAnExtension as exc:
        raise NotALocalRealizer(str(exc)) from exc
    if not ok:
        raise NotALocalRealizer("family does not reproduce the order")


def local2_to_realizer(p: Poset, lr: LocalRealizer) -> Realizer:
    """Per incomparability component, the two members through it restricted to it; components stacked along the order."""

    require_local_realizer(p, lr, 2)
    components = [sorted(c) for c in nx.connected_components(incomparability_graph(p).to_undirected())]
    rank = p.linear_extension().positions
    components.sort(key=lambda c: min(rank[x] for x in c))

    low: List[int] = []
    high: List[int] = []
    nontrivial = False
    for comp in components:
        if len(comp) == 1:
            low.extend(comp)
            high.extend(comp)
            continue
        nontrivial = True
        first = comp[0]
        members = [ple for ple in lr.ples if first in ple.positions]
        pieces: List[Tuple[int, ...]] = [ple.restrict(comp).seq for ple in members]
        if len(pieces) != 2 or any(len(piece) != len(comp) for piece in pieces):
            raise NotALocalRealizer(f"component {comp} is not covered by exactly two members")
        low.extend(pieces[0])
        high.extend(pieces[1])

    realizer = Realizer((tuple(low), tuple(high)) if nontrivial else (tuple(low),))
    if not verify_realizer(p, realizer):
        raise RuntimeError("stacked component orders do not realize the order")
    logger.info("%d incomparability components stacked into %d orders", len(components), realizer.size)
    return realizer


__all__ = [
    "NotALocalRealizer",
    "WidthTooLarge",
    "local2_to_realizer",
    "require_local_realizer",
]
