"""Certificate types for dimension, boolean dimension and local dimension."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, List, Sequence, Tuple, Union

import numpy as np

from src.poset.core import PartialLinearExtension

Order = Tuple[int, ...]
Alpha = Tuple[int, ...]


def _as_orders(orders: Iterable[Sequence[int]]) -> Tuple[Order, ...]:
    return tuple(tuple(int(x) for x in order) for order in orders)


@dataclass(frozen=True)
class Realizer:
    """A family of full linear extensions whose intersection should be the order."""

    orders: Tuple[Order, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", _as_orders(self.orders))

    @property
    def size(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class TruthTable:
    """Extensional d-ary boolean function.

    ``bits`` lists the value of every tuple in lexicographic order, so the
    tuple ``(a1, ..., ad)`` sits at index ``a1 * 2**(d-1) + ... + ad``.
    """

    d: int
    bits: Tuple[bool, ...]

    def __post_init__(self) -> None:
        bits = tuple(bool(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) != 2 ** self.d:
            raise ValueError(f"A {self.d}-ary table needs {2 ** self.d} entries, got {len(bits)}")

    @property
    def arity(self) -> int:
        return self.d

    @staticmethod
    def index(alpha: Sequence[int]) -> int:
        idx = 0
        for a in alpha:
            idx = (idx << 1) | int(bool(a))
        return idx

    @staticmethod
    def tuple_of(index: int, d: int) -> Alpha:
        return tuple((index >> (d - 1 - i)) & 1 for i in range(d))

    @classmethod
    def from_function(cls, d: int, fn: Callable[[Alpha], bool]) -> "TruthTable":
        return cls(d, tuple(bool(fn(alpha)) for alpha in product((0, 1), repeat=d)))

    @classmethod
    def from_ones(cls, d: int, ones: Iterable[Sequence[int]]) -> "TruthTable":
        bits = [False] * (2 ** d)
        for alpha in ones:
            bits[cls.index(alpha)] = True
        return cls(d, tuple(bits))

    @classmethod
    def conjunction(cls, d: int) -> "TruthTable":
        return cls.from_ones(d, [(1,) * d])

    def __call__(self, alpha: Sequence[int]) -> bool:
        return self.bits[self.index(alpha)]

    def ones(self) -> List[Alpha]:
        return [self.tuple_of(i, self.d) for i, b in enumerate(self.bits) if b]

    def evaluate(self, bits: np.ndarray) -> np.ndarray:
        """Vectorised evaluation; ``bits`` has shape ``(d, ...)``."""

        idx = np.zeros(bits.shape[1:], dtype=np.int64)
        for row in bits:
            idx = (idx << 1) | row.astype(np.int64)
        return np.asarray(self.bits, dtype=bool)[idx]

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class ClauseFormula:
    """Conjunction of clauses, each an OR of positive coordinates.

    Used where the arity is far too large for an extensional table.
    """

    d: int
    clauses: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        clauses = tuple(tuple(int(i) for i in clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for clause in clauses:
            if not clause or any(not 0 <= i < self.d for i in clause):
                raise ValueError(f"Clause {clause} is empty or leaves coordinates 0..{self.d - 1}")

    @property
    def arity(self) -> int:
        return self.d

    def __call__(self, alpha: Sequence[int]) -> bool:
        return all(any(alpha[i] for i in clause) for clause in self.clauses)

    def evaluate(self, bits: np.ndarray) -> np.ndarray:
        out = np.ones(bits.shape[1:], dtype=bool)
        for clause in self.clauses:
            out &= bits[list(clause)].any(axis=0)
        return out

    def to_truth_table(self) -> TruthTable:
        if self.d > 20:
            raise ValueError(f"Refusing to tabulate a formula of arity {self.d}")
        return TruthTable.from_function(self.d, self)


Formula = Union[TruthTable, ClauseFormula]


@dataclass(frozen=True)
class BooleanRealizer:
    """``d`` linear orders on the ground set plus a d-ary formula."""

    orders: Tuple[Order, ...]
    phi: Formula

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", _as_orders(self.orders))

    @property
    def size(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class LocalRealizer:
    """Multiset of partial linear extensions; order of ``ples`` is kept as given."""

    ples: Tuple[PartialLinearExtension, ...]

    def __post_init__(self) -> None:
        ples = tuple(p if isinstance(p, PartialLinearExtension) else PartialLinearExtension(tuple(p)) for p in self.ples)
        object.__setattr__(self, "ples", ples)

    @classmethod
    def from_sequences(cls, seqs: Iterable[Sequence[int]]) -> "LocalRealizer":
        return cls(tuple(PartialLinearExtension(tuple(s)) for s in seqs))

    @classmethod
    def from_realizer(cls, realizer: Realizer) -> "LocalRealizer":
        return cls.from_sequences(realizer.orders)

    def canonical(self) -> "LocalRealizer":
        return LocalRealizer(tuple(sorted(self.ples, key=lambda p: (len(p), p.seq))))

    @property
    def size(self) -> int:
        return len(self.ples)


__all__ = [
    "Alpha",
    "BooleanRealizer",
    "ClauseFormula",
    "Formula",
    "LocalRealizer",
    "Order",
    "Realizer",
    "TruthTable",
]
