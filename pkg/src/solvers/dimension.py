"""Exact dimension decision by distributing critical pairs over linear extensions.

Each bucket keeps the reflexive-transitive closure of the order plus the
pairs reversed so far. Reversing ``(x, y)`` in a bucket adds ``y <= x`` and
is possible exactly when the bucket does not already force ``x <= y``.
A family of linear extensions is a realizer iff every critical pair is
reversed in some member, so the buckets' extensions form the witness.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import networkx as nx
import numpy as np

from src.config import Settings, get_settings
from src.generators.families import BadParameter
from src.poset.core import Arc, Poset, critical_pairs, extension_of_closed
from src.realizers.certificates import Realizer
from src.realizers.verify import verify_realizer

logger = logging.getLogger(__name__)


class SolverTimeout(TimeoutError):
    """Raised when an exact solver runs past its wall-clock budget."""


@dataclass(frozen=True)
class DimensionResult:
    feasible: bool
    witness: Optional[Realizer] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.feasible


class Deadline:
    """Wall-clock budget shared by one decision."""

    def __init__(self, seconds: float) -> None:
        self.seconds = seconds
        self.expires = time.monotonic() + seconds

    def check(self, progress: str = "") -> None:
        if time.monotonic() > self.expires:
            raise SolverTimeout(f"budget of {self.seconds:g}s exhausted{': ' + progress if progress else ''}")


def is_reversible(p: Poset, pairs: Iterable[Arc]) -> bool:
    """True when one linear extension can put ``y`` below ``x`` for every ``(x, y)`` in ``pairs``."""

    graph = p.covers().to_networkx()
    graph.add_edges_from((y, x) for x, y in pairs)
    return nx.is_directed_acyclic_graph(graph)


class _BucketSearch:
    def __init__(self, p: Poset, d: int, pairs: Sequence[Arc], deadline: Deadline) -> None:
        self.p = p
        self.d = d
        self.pairs = list(pairs)
        self.deadline = deadline
        self.nodes = 0
        self.buckets: List[np.ndarray] = []
        self.assigned = [False] * len(self.pairs)

    def _options(self, idx: int) -> List[int]:
        x, y = self.pairs[idx]
        opts = [b for b, closure in enumerate(self.buckets) if not closure[x, y]]
        if len(self.buckets) < self.d:
            opts.append(len(self.buckets))
        return opts

    def _pick(self) -> Optional[int]:
        best, best_count = None, None
        for idx, done in enumerate(self.assigned):
            if done:
                continue
            count = len(self._options(idx))
            if best_count is None or count < best_count:
                best, best_count = idx, count
                if count == 0:
                    break
        return best

    def run(self) -> bool:
        self.nodes += 1
        if self.nodes % 256 == 0:
            self.deadline.check(f"{self.nodes} search nodes, {sum(self.assigned)}/{len(self.pairs)} pairs placed")
        idx = self._pick()
        if idx is None:
            return True
        x, y = self.pairs[idx]
        self.assigned[idx] = True
        for b in self._options(idx):
            fresh = b == len(self.buckets)
            if fresh:
                self.buckets.append(self.p.rel.copy())
            saved = self.buckets[b]
            closure = saved | np.outer(saved[:, y], saved[x, :])
            self.buckets[b] = closure
            if self.run():
                return True
            if fresh:
                self.buckets.pop()
            else:
                self.buckets[b] = saved
        self.assigned[idx] = False
        return False


def decide_dimension(p: Poset, d: int, settings: Settings | None = None) -> DimensionResult:
    """Decide ``dim(p) <= d``; a feasible answer carries a verified realizer of size at most ``d``."""

    settings = settings or get_settings()
    if d < 0:
        raise BadParameter(f"dimension bound must be non-negative, got {d}")
    if p.n <= 1:
        witness = Realizer(tuple(tuple(range(p.n)) for _ in range(min(d, 1))))
        return DimensionResult(True, witness)
    pairs = critical_pairs(p)
    if not pairs:
        if d == 0:
            return DimensionResult(False)
        return DimensionResult(True, Realizer((p.linear_extension().seq,)))
    if d < 2:
        return DimensionResult(False)

    started = time.monotonic()
    search = _BucketSearch(p, d, pairs, Deadline(settings.timeout_s))
    found = search.run()
    logger.info(
        "dim <= %d: %s after %d nodes over %d critical pairs (%.3fs)",
        d, found, search.nodes, len(pairs), time.monotonic() - started,
    )
    if not found:
        return DimensionResult(False, nodes=search.nodes)
    witness = Realizer(tuple(extension_of_closed(closure) for closure in search.buckets))
    if not verify_realizer(p, witness):
        raise RuntimeError("bucket search produced a family that does not realize the order")
    return DimensionResult(True, witness, search.nodes)


def dimension(p: Poset, max_d: Optional[int] = None, settings: Settings | None = None) -> DimensionResult:
    """Smallest ``d`` (up to ``max_d``) with ``dim(p) <= d``, scanning upwards."""

    upper = max_d if max_d is not None else max(1, (p.n + 1) // 2, p.width())
    result = DimensionResult(False)
    for d in range(upper + 1):
        result = decide_dimension(p, d, settings=settings)
        if result:
            return result
    return result


__all__ = [
    "Deadline",
    "DimensionResult",
    "SolverTimeout",
    "decide_dimension",
    "dimension",
    "is_reversible",
]
