"""Greedy and exact vertex colouring of digraphs, read as undirected graphs."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence

import networkx as nx

from src.config import Settings, get_settings
from src.poset.core import Digraph, order_positions
from src.solvers.dimension import Deadline

logger = logging.getLogger(__name__)

Coloring = Dict[int, int]


def greedy_coloring(g: Digraph, vertex_order: Sequence[int]) -> Coloring:
    """First-fit colouring along ``vertex_order``; colours are numbered from 0 by first use."""

    order_positions(vertex_order, g.nv)
    order = [int(v) for v in vertex_order]
    return nx.greedy_color(g.to_undirected(), strategy=lambda graph, colors: iter(order))


def degeneracy_coloring(g: Digraph) -> Coloring:
    """First-fit colouring in smallest-last (degeneracy) order."""

    return nx.greedy_color(g.to_undirected(), strategy="smallest_last")


def color_count(coloring: Coloring) -> int:
    return len(set(coloring.values()))


def is_proper(g: Digraph, coloring: Coloring) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.arcs)


def _clique_bound(graph: nx.Graph) -> int:
    return max((len(c) for c in nx.find_cliques(graph)), default=0)


def find_k_coloring(g: Digraph, k: int, deadline: Optional[Deadline] = None) -> Optional[Coloring]:
    """Proper colouring with at most ``k`` colours, or None when none exists.

    DSATUR branching: at every node the next vertex is the uncoloured one
    seeing the most distinct colours among its neighbours, ties broken by
    degree and then by the smaller id.
    """

    if g.nv == 0:
        return {}
    if k <= 0:
        return None
    graph = g.to_undirected()
    neighbors: List[List[int]] = [list(graph.neighbors(v)) for v in range(g.nv)]
    coloring = [-1] * g.nv
    nodes = 0

    def saturation(v: int) -> int:
        return len({coloring[w] for w in neighbors[v] if coloring[w] >= 0})

    def next_vertex() -> int:
        return max(
            (u for u in range(g.nv) if coloring[u] < 0),
            key=lambda u: (saturation(u), len(neighbors[u]), -u),
        )

    def extend(depth: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes % 512 == 0:
            deadline.check(f"{nodes} colouring nodes at depth {depth}")
        if depth == g.nv:
            return True
        v = next_vertex()
        forbidden = {coloring[w] for w in neighbors[v]}
        # colours are opened in order, so at most one unused colour is tried
        for color in range(min(used + 1, k)):
            if color in forbidden:
                continue
            coloring[v] = color
            if extend(depth + 1, max(used, color + 1)):
                return True
        coloring[v] = -1
        return False

    if not extend(0, 0):
        return None
    return {v: c for v, c in enumerate(coloring)}


def exact_chromatic_number(g: Digraph, settings: Settings | None = None) -> int:
    """Chromatic number of the underlying undirected graph.

    A clique gives the lower bound and DSATUR the upper bound; the gap is
    closed by exhaustive k-colouring from the bottom up.
    """

    settings = settings or get_settings()
    if g.nv == 0:
        return 0
    graph = g.to_undirected()
    lower = max(1, _clique_bound(graph))
    upper = color_count(nx.greedy_color(graph, strategy="DSATUR"))
    deadline = Deadline(settings.timeout_s)
    for k in range(lower, upper):
        if find_k_coloring(g, k, deadline) is not None:
            logger.debug("chi = %d (bounds %d..%d)", k, lower, upper)
            return k
    logger.debug("chi = %d (greedy bound was tight, clique bound %d)", upper, lower)
    return upper


__all__ = [
    "Coloring",
    "color_count",
    "degeneracy_coloring",
    "exact_chromatic_number",
    "find_k_coloring",
    "greedy_coloring",
    "is_proper",
]
