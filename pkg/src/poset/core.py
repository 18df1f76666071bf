"""Ground sets, order relations and digraphs shared by every other package.

Elements are dense integer ids ``0..n-1``. A relation is an ``n x n`` read-only
boolean numpy matrix with ``rel[x, y]`` meaning ``x <= y``. Labels are
metadata only and never affect comparisons.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


class CycleDetected(ValueError):
    """Raised when a cover relation contains a directed cycle."""


class NotAPartialOrder(ValueError):
    """Raised when a relation is not reflexive, antisymmetric and transitive."""


class MalformedGraph(ValueError):
    """Raised when a digraph has self-loops or out-of-range vertices."""


class MalformedOrder(ValueError):
    """Raised when a sequence of element ids repeats or leaves the ground set."""


@dataclass(frozen=True)
class Digraph:
    """Finite directed graph on vertices ``0..nv-1``.

    ``walks`` optionally names every vertex by a directed walk of an
    underlying graph; arc digraphs carry them so that iterating the
    construction twice names the vertices ``uvw`` of paths of length two.
    """

    nv: int
    arcs: FrozenSet[Arc] = field(default_factory=frozenset)
    walks: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self) -> None:
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.nv < 0:
            raise MalformedGraph(f"Negative vertex count {self.nv}")
        for u, v in arcs:
            if u == v:
                raise MalformedGraph(f"Self-loop at vertex {u}")
            if not (0 <= u < self.nv and 0 <= v < self.nv):
                raise MalformedGraph(f"Arc {u}->{v} leaves the vertex range 0..{self.nv - 1}")
        if self.walks is not None and len(self.walks) != self.nv:
            raise MalformedGraph("One walk name per vertex is required")

    @property
    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def walk(self, v: int) -> Tuple[int, ...]:
        return self.walks[v] if self.walks is not None else (v,)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.nv))
        graph.add_edges_from(self.sorted_arcs)
        return graph

    def to_undirected(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.nv))
        graph.add_edges_from(self.sorted_arcs)
        return graph

    def undirected_edges(self) -> FrozenSet[Arc]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.arcs)

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def arcs_into(self, v: int, sources: Optional[Iterable[int]] = None) -> List[Arc]:
        """E(X, v): arcs ``xv`` with ``x`` in ``sources`` (all vertices when omitted)."""

        allowed = None if sources is None else set(sources)
        return sorted((x, y) for x, y in self.arcs if y == v and (allowed is None or x in allowed))

    def arcs_out_of(self, v: int, targets: Optional[Iterable[int]] = None) -> List[Arc]:
        """E(v, Y): arcs ``vy`` with ``y`` in ``targets`` (all vertices when omitted)."""

        allowed = None if targets is None else set(targets)
        return sorted((x, y) for x, y in self.arcs if x == v and (allowed is None or y in allowed))

    def arcs_between(self, sources: Iterable[int], targets: Iterable[int]) -> List[Arc]:
        """E(X, Y): arcs ``xy`` with ``x`` in ``sources`` and ``y`` in ``targets``."""

        xs, ys = set(sources), set(targets)
        return sorted((x, y) for x, y in self.arcs if x in xs and y in ys)


@dataclass(frozen=True)
class PartialLinearExtension:
    """A linearly ordered subset of the ground set, listed from low to high."""

    seq: Tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(int(x) for x in self.seq)
        object.__setattr__(self, "seq", seq)
        if len(set(seq)) != len(seq):
            raise MalformedOrder(f"Repeated element in order {seq}")

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(self.seq)

    @cached_property
    def positions(self) -> Dict[int, int]:
        return {x: i for i, x in enumerate(self.seq)}

    def is_full(self, n: int) -> bool:
        return len(self.seq) == n and all(0 <= x < n for x in self.seq)

    def extends(self, poset: "Poset") -> bool:
        """True when no later element lies strictly below an earlier one in ``poset``."""

        if any(not 0 <= x < poset.n for x in self.seq):
            raise MalformedOrder(f"Order {self.seq} leaves the ground set 0..{poset.n - 1}")
        idx = np.asarray(self.seq, dtype=int)
        sub = poset.strict[np.ix_(idx, idx)]
        # sub[i, j] with i > j means seq[i] < seq[j]: a violation
        return not np.tril(sub, k=-1).any()

    def restrict(self, elements: Iterable[int]) -> "PartialLinearExtension":
        keep = set(elements)
        return PartialLinearExtension(tuple(x for x in self.seq if x in keep))

    def reversed(self) -> "PartialLinearExtension":
        return PartialLinearExtension(tuple(reversed(self.seq)))


def order_positions(seq: Sequence[int], n: int) -> np.ndarray:
    """Position array of a full linear order; raises MalformedOrder unless ``seq`` is a permutation."""

    if len(seq) != n or sorted(seq) != list(range(n)):
        raise MalformedOrder(f"Order of length {len(seq)} is not a permutation of 0..{n - 1}")
    pos = np.empty(n, dtype=int)
    pos[np.asarray(seq, dtype=int)] = np.arange(n)
    return pos


def extension_of_closed(rel: np.ndarray) -> Tuple[int, ...]:
    """Linear extension of a transitively closed relation: fewest predecessors first, ties by id."""

    n = rel.shape[0]
    if n == 0:
        return ()
    below = rel.sum(axis=0) - np.diagonal(rel)
    return tuple(int(x) for x in np.lexsort((np.arange(n), below)))


class Poset:
    """Immutable finite partial order on ``0..n-1`` backed by a boolean matrix."""

    def __init__(self, rel: np.ndarray, labels: Optional[Mapping[int, str]] = None, check: bool = True) -> None:
        rel = np.array(rel, dtype=bool, copy=True)
        if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
            raise NotAPartialOrder(f"Relation must be a square matrix, got shape {rel.shape}")
        if check and not self.is_partial_order(rel):
            raise NotAPartialOrder("Relation is not reflexive, antisymmetric and transitive")
        rel.flags.writeable = False
        self.rel = rel
        self.labels: Dict[int, str] = dict(labels or {})

    @staticmethod
    def is_partial_order(rel: np.ndarray) -> bool:
        """Check reflexivity, antisymmetry and transitivity of ``rel``."""

        n = rel.shape[0]
        if not rel[np.diag_indices(n)].all():
            return False
        if (rel & rel.T).sum() > n:
            return False
        return not ((rel @ rel) & ~rel).any()

    @property
    def n(self) -> int:
        return int(self.rel.shape[0])

    @cached_property
    def strict(self) -> np.ndarray:
        lt = self.rel & ~np.eye(self.n, dtype=bool)
        lt.flags.writeable = False
        return lt

    @cached_property
    def incomparable(self) -> np.ndarray:
        inc = ~(self.rel | self.rel.T)
        inc.flags.writeable = False
        return inc

    def leq(self, x: int, y: int) -> bool:
        return bool(self.rel[x, y])

    def lt(self, x: int, y: int) -> bool:
        return bool(self.strict[x, y])

    def comparable(self, x: int, y: int) -> bool:
        return bool(self.rel[x, y] or self.rel[y, x])

    def label(self, x: int) -> str:
        return self.labels.get(x, str(x))

    def strict_pair_count(self) -> int:
        return int(self.strict.sum())

    def covers(self) -> Digraph:
        """Transitive reduction of the strict order."""

        lt = self.strict
        between = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
        xs, ys = np.nonzero(lt & ~between)
        return Digraph(self.n, frozenset(zip(xs.tolist(), ys.tolist())))

    def linear_extension(self) -> PartialLinearExtension:
        return PartialLinearExtension(extension_of_closed(self.rel))

    def is_linear_extension(self, seq: Sequence[int]) -> bool:
        return len(seq) == self.n and PartialLinearExtension(tuple(seq)).extends(self)

    def restrict(self, elements: Sequence[int]) -> "Poset":
        idx = np.asarray(list(elements), dtype=int)
        labels = {i: self.labels[x] for i, x in enumerate(idx.tolist()) if x in self.labels}
        return Poset(self.rel[np.ix_(idx, idx)], labels=labels, check=False)

    def dual(self) -> "Poset":
        return Poset(self.rel.T, labels=self.labels, check=False)

    def width(self) -> int:
        """Largest antichain, via Dilworth's theorem and a maximum bipartite matching."""

        if self.n == 0:
            return 0
        graph = nx.Graph()
        left = [("L", x) for x in range(self.n)]
        graph.add_nodes_from(left)
        graph.add_nodes_from(("R", y) for y in range(self.n))
        xs, ys = np.nonzero(self.strict)
        graph.add_edges_from((("L", int(x)), ("R", int(y))) for x, y in zip(xs, ys))
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
        return self.n - len(matching) // 2

    def height(self) -> int:
        if self.n == 0:
            return 0
        return int(nx.dag_longest_path_length(self.covers().to_networkx())) + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.rel.shape == other.rel.shape and bool(np.array_equal(self.rel, other.rel))

    def __hash__(self) -> int:
        return hash((self.n, self.rel.tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, strict_pairs={self.strict_pair_count()})"


def transitive_closure(covers: Digraph, labels: Optional[Mapping[int, str]] = None) -> Poset:
    """Reflexive-transitive closure of an acyclic cover digraph."""

    graph = covers.to_networkx()
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CycleDetected(f"Cover relation has a directed cycle: {cycle}")
    n = covers.nv
    rel = np.eye(n, dtype=bool)
    for u, v in covers.arcs:
        rel[u, v] = True
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    logger.debug("Closed %d covers over %d elements", len(covers.arcs), n)
    return Poset(rel, labels=labels)


def incomparability_graph(p: Poset) -> Digraph:
    """Symmetric digraph with both arcs ``xy`` and ``yx`` for every incomparable pair."""

    xs, ys = np.nonzero(p.incomparable)
    return Digraph(p.n, frozenset(zip(xs.tolist(), ys.tolist())))


def critical_pairs(p: Poset) -> List[Arc]:
    """Incomparable ``(x, y)`` with Down(x) within Down(y) and Up(y) within Up(x), sorted."""

    lt = p.strict.astype(np.int64)
    not_lt = (~p.strict).astype(np.int64)
    # down_escape[x, y] counts z < x with z not < y
    down_escape = lt.T @ not_lt
    # up_escape[y, x] counts z > y with z not > x
    up_escape = lt @ not_lt.T
    ok = p.incomparable & (down_escape == 0) & (up_escape.T == 0)
    xs, ys = np.nonzero(ok)
    return sorted(zip(xs.tolist(), ys.tolist()))


def arc_digraph(g: Digraph) -> Digraph:
    """Digraph on the arcs of ``g`` with an arc ``(uv) -> (vw)`` for every pair of consecutive arcs."""

    line = nx.line_graph(g.to_networkx())
    nodes = sorted(line.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    walks = tuple(g.walk(u) + g.walk(v)[-1:] for u, v in nodes)
    arcs = frozenset((index[a], index[b]) for a, b in line.edges)
    return Digraph(len(nodes), arcs, walks=walks)


__all__ = [
    "Arc",
    "CycleDetected",
    "Digraph",
    "MalformedGraph",
    "MalformedOrder",
    "NotAPartialOrder",
    "PartialLinearExtension",
    "Poset",
    "arc_digraph",
    "critical_pairs",
    "extension_of_closed",
    "incomparability_graph",
    "order_positions",
    "transitive_closure",
]
