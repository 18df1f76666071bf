"""Recursive digraph and edge poset with a width-4 local realizer but large chromatic number.

Level 1 is a single arc. Level ``k`` takes ``C(s, r)`` disjoint copies of
level ``k-1`` (``r`` vertices each, ``s = k(r-1)+1``) plus ``s`` fresh
vertices ``X``; every ``r``-subset of ``X`` is matched to one copy. The edge
poset is whatever the local realizer ``{A, B} + gadgets`` induces.

Ids: copy ``i`` owns vertices ``i*r .. i*r+r-1`` and edges ``i*m .. i*m+m-1``;
the ``X`` vertices follow the copies, and the ``X`` edges follow the copy
edges, grouped by copy.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config import Settings, get_settings
from src.generators.families import BadParameter
from src.poset.core import Arc, Digraph, PartialLinearExtension, Poset
from src.realizers.certificates import LocalRealizer
from src.realizers.verify import local_width, verify_local_realizer

logger = logging.getLogger(__name__)


class SizeCapExceeded(ValueError):
    """Raised when a construction would exceed the configured size cap."""


@dataclass(frozen=True)
class GadgetPoset:
    """Acyclic digraph ``g``, the poset ``p`` on its edges, and the local realizer that defines ``p``.

    ``edges[e]`` is the arc of ``g`` with edge id ``e``. ``gadgets[v]`` orders
    the out-edges of ``v`` below its in-edges. ``xsets`` lists, per copy, the
    fresh vertices matched to that copy; ``nsets[j]`` is the out-neighbourhood
    of the ``j``-th fresh vertex.
    """

    k: int
    g: Digraph
    edges: Tuple[Arc, ...]
    p: Poset
    order_a: PartialLinearExtension
    order_b: PartialLinearExtension
    gadgets: Tuple[PartialLinearExtension, ...]
    xsets: Tuple[Tuple[int, ...], ...] = ()
    nsets: Tuple[Tuple[int, ...], ...] = ()
    sub: Optional["GadgetPoset"] = None

    @property
    def copies(self) -> int:
        return len(self.xsets)

    def copy_edges(self, i: int) -> range:
        m = len(self.sub.edges) if self.sub is not None else 0
        return range(i * m, (i + 1) * m)

    def local_realizer(self) -> LocalRealizer:
        return LocalRealizer((self.order_a, self.order_b) + self.gadgets)

    def out_edges(self, v: int) -> List[int]:
        return [e for e, (x, _) in enumerate(self.edges) if x == v]

    def in_edges(self, v: int) -> List[int]:
        return [e for e, (_, y) in enumerate(self.edges) if y == v]

    def violations(self) -> List[str]:
        """Broken construction properties, empty when the instance is sound."""

        problems: List[str] = []
        m = len(self.edges)
        for name, order in (("A", self.order_a), ("B", self.order_b)):
            if not self.p.is_linear_extension(order.seq):
                problems.append(f"order {name} is not a linear extension")
        pos_a, pos_b = self.order_a.positions, self.order_b.positions
        for v in range(self.g.nv):
            outs, ins = self.out_edges(v), self.in_edges(v)
            for pos, name in ((pos_a, "A"), (pos_b, "B")):
                if ins and outs and max(pos[e] for e in ins) > min(pos[e] for e in outs):
                    problems.append(f"vertex {v}: in-edges not below out-edges in {name}")
            if outs:
                spots = sorted(pos_b[e] for e in outs)
                if spots[-1] - spots[0] != len(spots) - 1:
                    problems.append(f"vertex {v}: out-edges not contiguous in B")
            gadget = self.gadgets[v].seq
            if sorted(gadget) != sorted(outs + ins):
                problems.append(f"vertex {v}: gadget support is not its incident edges")
            elif gadget[:len(outs)] != tuple(e for e in gadget if e in set(outs)):
                problems.append(f"vertex {v}: gadget does not put out-edges below in-edges")
        lr = self.local_realizer()
        if m and not verify_local_realizer(self.p, lr):
            problems.append("orders do not form a local realizer")
        if local_width(lr) > 4:
            problems.append(f"local realizer has width {local_width(lr)}")
        if self.sub is not None:
            for i in range(self.copies):
                idx = list(self.copy_edges(i))
                if self.p.restrict(idx) != self.sub.p:
                    problems.append(f"copy {i}: restricted order differs from the level below")
        return problems


# a magnitude stays a plain float below 10 ** FLOAT_CAP
FLOAT_CAP = 300
# exact ints are kept for r and s below this bound, and C(s, r) is expanded only up to COMB_CAP
EXACT_CAP = 10 ** 18
COMB_CAP = 10_000


@dataclass(frozen=True, order=True)
class Magnitude:
    """Positive size written as ``value`` under ``levels`` powers of ten.

    ``Magnitude(0, x)`` is ``x``, ``Magnitude(1, x)`` is ``10 ** x``,
    ``Magnitude(2, x)`` is ``10 ** 10 ** x``. A value above level 0 is at
    least ``FLOAT_CAP``, so the ordering of ``(levels, value)`` is the
    ordering of the sizes.
    """

    levels: int
    value: float

    @classmethod
    def make(cls, levels: int, value: float) -> "Magnitude":
        while levels > 0 and value < FLOAT_CAP:
            levels, value = levels - 1, 10.0 ** value
        if levels == 0 and value >= 10.0 ** FLOAT_CAP:
            levels, value = 1, math.log10(value)
        return cls(levels, float(value))

    @classmethod
    def of(cls, x: int | float) -> "Magnitude":
        if x < 10 ** FLOAT_CAP:
            return cls(0, float(x))
        return cls.make(1, math.log10(x))

    def log10(self) -> "Magnitude":
        if self.levels == 0:
            return Magnitude(0, math.log10(self.value))
        return Magnitude.make(self.levels - 1, self.value)

    def exp10(self) -> "Magnitude":
        return Magnitude.make(self.levels + 1, self.value)

    def plus(self, other: "Magnitude") -> "Magnitude":
        if self.levels == other.levels == 0:
            return Magnitude.make(0, self.value + other.value)
        # the smaller term is below float resolution of the larger one
        return max(self, other)

    def times(self, other: "Magnitude") -> "Magnitude":
        return self.log10().plus(other.log10()).exp10()

    def __float__(self) -> float:
        return self.value if self.levels == 0 else math.inf

    def __str__(self) -> str:
        return "10^" * self.levels + f"{self.value:.4g}"


@dataclass(frozen=True)
class SizePrediction:
    """Sizes of level ``k``.

    ``r``, ``s``, ``copies``, ``vertices`` and ``edges`` are exact where they
    fit and None otherwise; the ``*_size`` magnitudes are always filled
    (``r``, ``s`` and ``copies`` only from level 2 on).
    """

    k: int
    r: Optional[int]
    s: Optional[int]
    copies: Optional[int]
    vertices: Optional[int]
    edges: Optional[int]
    r_size: Optional[Magnitude]
    s_size: Optional[Magnitude]
    copies_size: Optional[Magnitude]
    vertices_size: Magnitude
    edges_size: Magnitude

    @property
    def log10_copies(self) -> Optional[float]:
        """Base-10 logarithm of the copy count; ``inf`` once that no longer fits a float."""

        return None if self.copies_size is None else float(self.copies_size.log10())

    def shown(self, name: str) -> Optional[str]:
        exact = getattr(self, name)
        if exact is not None:
            return str(exact)
        size = getattr(self, f"{name}_size")
        return None if size is None else str(size)


def _binomial_size(s: Magnitude, r: Magnitude, level: int) -> Magnitude:
    """Magnitude of ``C(s, r)`` for ``s = level(r-1)+1``."""

    if s.levels == 0:
        sf, rf = s.value, r.value
        ln = math.lgamma(sf + 1) - math.lgamma(rf + 1) - math.lgamma(sf - rf + 1)
        return Magnitude(0, ln / math.log(10)).exp10()
    # log10 C(kr, r) ~ r * (k log10 k - (k-1) log10 (k-1)) for large r
    rate = level * math.log10(level) - (level - 1) * math.log10(level - 1)
    return r.times(Magnitude.of(rate)).exp10()


def _relation_from_family(ples: Sequence[PartialLinearExtension], m: int) -> np.ndarray:
    """``x <= y`` exactly when no member lists ``y`` strictly before ``x``."""

    rev = np.zeros((m, m), dtype=bool)
    for ple in ples:
        idx = np.asarray(ple.seq, dtype=int)
        if idx.size > 1:
            later = np.tril(np.ones((idx.size, idx.size), dtype=bool), k=-1)
            rev[np.ix_(idx, idx)] |= later
    return ~rev


def _base_level() -> GadgetPoset:
    edges = ((0, 1),)
    order = PartialLinearExtension((0,))
    return GadgetPoset(
        k=1,
        g=Digraph(2, frozenset(edges)),
        edges=edges,
        p=Poset(np.ones((1, 1), dtype=bool), labels={0: "0-1"}),
        order_a=order,
        order_b=order,
        gadgets=(order, order),
    )


def _block_order(level: GadgetPoset) -> List[int]:
    """Vertices sorted by the position of their out-edge block in B; sinks go right after their last in-edge."""

    pos_b = level.order_b.positions
    keys = []
    for v in range(level.g.nv):
        outs = level.out_edges(v)
        if outs:
            key = float(min(pos_b[e] for e in outs))
        else:
            ins = level.in_edges(v)
            key = max(pos_b[e] for e in ins) + 0.5 if ins else -1.0
        keys.append((key, v))
    return [v for _, v in sorted(keys)]


def _next_level(sub: GadgetPoset) -> GadgetPoset:
    k = sub.k + 1
    r, m = sub.g.nv, len(sub.edges)
    s = k * (r - 1) + 1
    xsets_local = list(combinations(range(s), r))
    n = len(xsets_local)
    x_base = n * r
    logger.info("Level %d: %d copies of %d vertices, %d fresh vertices", k, n, r, s)

    block_order = _block_order(sub)
    edges: List[Arc] = []
    for i in range(n):
        edges.extend((u + i * r, v + i * r) for u, v in sub.edges)
    # x-edge ids: x_edge[i][t] joins the t-th fresh vertex of copy i to its t-th block vertex
    x_edge: List[List[int]] = []
    for i, xs in enumerate(xsets_local):
        row = []
        for t, j in enumerate(xs):
            row.append(len(edges))
            edges.append((x_base + j, i * r + block_order[t]))
        x_edge.append(row)

    order_a: List[int] = []
    for i in range(n):
        order_a.extend(x_edge[i])
        order_a.extend(e + i * m for e in sub.order_a.seq)

    sub_pos_b = sub.order_b.positions
    sub_outs = [sorted(sub.out_edges(v), key=sub_pos_b.__getitem__) for v in range(r)]
    order_b: List[int] = []
    nsets: List[Tuple[int, ...]] = []
    for j in range(s):
        matched = [(i, xs.index(j)) for i, xs in enumerate(xsets_local) if j in xs]
        order_b.extend(x_edge[i][t] for i, t in matched)
        for i, t in matched:
            order_b.extend(e + i * m for e in sub_outs[block_order[t]])
        nsets.append(tuple(i * r + block_order[t] for i, t in matched))

    gadgets: List[PartialLinearExtension] = []
    for i in range(n):
        for v in range(r):
            t = block_order.index(v)
            seq = tuple(e + i * m for e in sub.gadgets[v].seq) + (x_edge[i][t],)
            gadgets.append(PartialLinearExtension(seq))
    for j in range(s):
        outs = [x_edge[i][xs.index(j)] for i, xs in enumerate(xsets_local) if j in xs]
        gadgets.append(PartialLinearExtension(tuple(outs)))

    ples = [PartialLinearExtension(tuple(order_a)), PartialLinearExtension(tuple(order_b))] + gadgets
    rel = _relation_from_family(ples, len(edges))
    labels: Dict[int, str] = {e: f"{u}-{v}" for e, (u, v) in enumerate(edges)}
    return GadgetPoset(
        k=k,
        g=Digraph(x_base + s, frozenset(edges)),
        edges=tuple(edges),
        p=Poset(rel, labels=labels),
        order_a=ples[0],
        order_b=ples[1],
        gadgets=tuple(gadgets),
        xsets=tuple(tuple(x_base + j for j in xs) for xs in xsets_local),
        nsets=tuple(nsets),
        sub=sub,
    )


def build_gadget_poset(k: int, settings: Settings | None = None) -> GadgetPoset:
    """Materialize level ``k``; refuses levels above ``settings.gadget_max_k``."""

    settings = settings or get_settings()
    if k < 1:
        raise BadParameter(f"construction needs k >= 1, got {k}")
    if k > settings.gadget_max_k:
        prediction = predict_gadget_poset_sizes(k)
        raise SizeCapExceeded(
            f"level {k} exceeds the cap {settings.gadget_max_k} "
            f"(predicted edges: {prediction.edges if prediction.edges is not None else 'astronomical'})"
        )
    level = _base_level()
    while level.k < k:
        level = _next_level(level)
    problems = level.violations()
    if problems:
        logger.error("Level %d construction is broken: %s", k, problems)
        raise RuntimeError(f"construction of level {k} failed: {problems[0]}")
    logger.info("Built level %d: |V|=%d, |E|=%d", k, level.g.nv, len(level.edges))
    return level


def predict_gadget_poset_sizes(k: int) -> SizePrediction:
    """Sizes of level ``k`` without building it.

    Follows ``r = |V(k-1)|``, ``s = k(r-1)+1``, ``copies = C(s, r)``,
    ``|V| = copies * r + s`` and ``|E| = copies * (|E(k-1)| + r)``; exact
    through level 3, magnitudes from there on.
    """

    if k < 1:
        raise BadParameter(f"construction needs k >= 1, got {k}")
    vertices: Optional[int] = 2
    edges: Optional[int] = 1
    v_size, e_size = Magnitude.of(2), Magnitude.of(1)
    r = s = copies = None
    r_size = s_size = c_size = None
    for level in range(2, k + 1):
        r_size = v_size
        r = vertices if vertices is not None and vertices < EXACT_CAP else None
        if r is not None:
            s = level * (r - 1) + 1
            s_size = Magnitude.of(s)
        else:
            s = None
            s_size = r_size.times(Magnitude.of(level))
        if s is not None and s <= COMB_CAP:
            copies = math.comb(s, r)
            c_size = Magnitude.of(copies)
        else:
            copies = None
            c_size = _binomial_size(s_size, r_size, level)
        if copies is not None and edges is not None:
            vertices, edges = copies * r + s, copies * (edges + r)
            v_size, e_size = Magnitude.of(vertices), Magnitude.of(edges)
        else:
            vertices = edges = None
            v_size = c_size.times(r_size).plus(s_size)
            e_size = c_size.times(e_size.plus(r_size))
    logger.debug("Level %d predicted with %s vertices", k, v_size)
    return SizePrediction(k, r, s, copies, vertices, edges, r_size, s_size, c_size, v_size, e_size)


__all__ = [
    "GadgetPoset",
    "Magnitude",
    "SizeCapExceeded",
    "SizePrediction",
    "build_gadget_poset",
    "predict_gadget_poset_sizes",
]
