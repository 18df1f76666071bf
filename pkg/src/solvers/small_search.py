"""Exhaustive boolean-dimension search on tiny posets and the low local-dimension decision."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from typing import Optional

import numpy as np

from src.config import Settings, get_settings
from src.generators.families import BadParameter
from src.poset.core import Poset
from src.realizers.certificates import BooleanRealizer, LocalRealizer, TruthTable
from src.realizers.verify import realized_indices, verify_boolean_realizer
from src.solvers.dimension import Deadline, decide_dimension

logger = logging.getLogger(__name__)


class ScaleExceeded(ValueError):
    """Raised when an exhaustive search is asked for inputs beyond its hard limits."""


@dataclass(frozen=True)
class BooleanSearchResult:
    feasible: bool
    witness: Optional[BooleanRealizer] = None
    tried: int = 0

    def __bool__(self) -> bool:
        return self.feasible


@dataclass(frozen=True)
class LocalDecision:
    feasible: bool
    witness: Optional[LocalRealizer] = None

    def __bool__(self) -> bool:
        return self.feasible


def decide_boolean_dimension_small(p: Poset, d: int, settings: Settings | None = None) -> BooleanSearchResult:
    """Decide ``bdim(p) <= d`` by trying every multiset of ``d`` linear orders.

    A formula exists for a choice of orders iff no comparison tuple is produced
    both by a pair with ``x <= y`` and by a pair without; the witness formula
    is 1 exactly on the tuples of comparable pairs.
    """

    settings = settings or get_settings()
    if p.n > settings.bdim_max_n or d > settings.bdim_max_d:
        raise ScaleExceeded(
            f"search is limited to n <= {settings.bdim_max_n} and d <= {settings.bdim_max_d}, got n={p.n}, d={d}"
        )
    if d < 0:
        raise BadParameter(f"boolean dimension bound must be non-negative, got {d}")
    if d == 0:
        ok = bool(p.rel.all())
        witness = BooleanRealizer((), TruthTable(0, (True,))) if ok else None
        return BooleanSearchResult(ok, witness, 1)

    deadline = Deadline(settings.timeout_s)
    flat_rel = p.rel.ravel()
    tried = 0
    for orders in combinations_with_replacement(permutations(range(p.n)), d):
        tried += 1
        if tried % 1024 == 0:
            deadline.check(f"{tried} order tuples tried")
        candidate = BooleanRealizer(orders, TruthTable.conjunction(d))
        idx = realized_indices(candidate, p.n).ravel()
        true_hits = np.bincount(idx[flat_rel], minlength=2 ** d)
        false_hits = np.bincount(idx[~flat_rel], minlength=2 ** d)
        if (true_hits.astype(bool) & false_hits.astype(bool)).any():
            continue
        table = TruthTable(d, tuple(true_hits.astype(bool).tolist()))
        witness = BooleanRealizer(orders, table)
        if not verify_boolean_realizer(p, witness):
            raise RuntimeError("consistent order tuple failed verification")
        logger.info("bdim <= %d witnessed after %d order tuples", d, tried)
        return BooleanSearchResult(True, witness, tried)
    logger.info("bdim > %d after %d order tuples", d, tried)
    return BooleanSearchResult(False, None, tried)


def decide_local_dimension_low(p: Poset, d: int, settings: Settings | None = None) -> LocalDecision:
    """Decide ``ldim(p) <= d`` for ``d`` in {1, 2}, where it coincides with ``dim(p) <= d``."""

    if d not in (1, 2):
        raise BadParameter(f"local dimension is only decided for d in {{1, 2}}, got {d}")
    result = decide_dimension(p, d, settings=settings)
    if not result:
        return LocalDecision(False)
    return LocalDecision(True, LocalRealizer.from_realizer(result.witness))


__all__ = [
    "BooleanSearchResult",
    "LocalDecision",
    "ScaleExceeded",
    "decide_boolean_dimension_small",
    "decide_local_dimension_low",
]
