"""Text formats for the three certificate kinds.

Realizer::

    r <d>
    <n ids>            (d lines)

Boolean realizer, extensional table::

    b <d>
    <n ids>            (d lines)
    <2**d bits>        (lexicographic tuple order, e.g. 0001)

Boolean realizer, clause formula (large arity)::

    b <d> cnf <m>
    <n ids>            (d lines)
    c <i1> ... <ij>    (m lines, 0-based coordinates; phi is the AND of the ORs)

Local realizer::

    l <t>
    <k> <id1> ... <idk>   (t lines)

An empty order line is written as ``.``.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Tuple, Union

from src.poset.core import MalformedOrder, PartialLinearExtension
from src.poset.formats import FormatError, content_lines, parse_int
from src.realizers.certificates import BooleanRealizer, ClauseFormula, LocalRealizer, Realizer, TruthTable

logger = logging.getLogger(__name__)

Certificate = Union[Realizer, BooleanRealizer, LocalRealizer]


def _order_line(order: Tuple[int, ...]) -> str:
    return " ".join(str(x) for x in order) if order else "."


def _parse_order(tokens: List[str], lineno: int) -> Tuple[int, ...]:
    if tokens == ["."]:
        return ()
    return tuple(parse_int(t, lineno) for t in tokens)


def _take_orders(lines, start: int, d: int) -> List[Tuple[int, ...]]:
    if len(lines) < start + d:
        raise FormatError(f"expected {d} order lines, found {max(0, len(lines) - start)}")
    return [_parse_order(tokens, lineno) for lineno, tokens in lines[start:start + d]]


def parse_certificate(text: str) -> Certificate:
    """Parse any certificate file, dispatching on its header tag."""

    lines = list(content_lines(text))
    if not lines:
        raise FormatError("empty certificate file")
    lineno, header = lines[0]
    tag = header[0]
    if tag == "r":
        if len(header) != 2:
            raise FormatError(f"line {lineno}: expected 'r <d>'")
        d = parse_int(header[1], lineno)
        orders = _take_orders(lines, 1, d)
        if len(lines) != 1 + d:
            raise FormatError("trailing lines after realizer orders")
        return Realizer(tuple(orders))
    if tag == "b":
        d = parse_int(header[1], lineno) if len(header) >= 2 else -1
        if d < 0:
            raise FormatError(f"line {lineno}: expected 'b <d>'")
        orders = _take_orders(lines, 1, d)
        rest = lines[1 + d:]
        if len(header) == 4 and header[2] == "cnf":
            m = parse_int(header[3], lineno)
            if len(rest) != m:
                raise FormatError(f"header announces {m} clauses, found {len(rest)}")
            clauses = []
            for cl_lineno, tokens in rest:
                if tokens[0] != "c":
                    raise FormatError(f"line {cl_lineno}: expected 'c <coordinates>'")
                clauses.append(tuple(parse_int(t, cl_lineno) for t in tokens[1:]))
            try:
                phi = ClauseFormula(d, tuple(clauses))
            except ValueError as exc:
                raise FormatError(str(exc)) from exc
            return BooleanRealizer(tuple(orders), phi)
        if len(header) != 2:
            raise FormatError(f"line {lineno}: expected 'b <d>' or 'b <d> cnf <m>'")
        if len(rest) != 1:
            raise FormatError("expected exactly one truth-table line")
        bit_lineno, tokens = rest[0]
        bits = "".join(tokens)
        if len(bits) != 2 ** d or set(bits) - {"0", "1"}:
            raise FormatError(f"line {bit_lineno}: expected {2 ** d} bits of 0/1")
        return BooleanRealizer(tuple(orders), TruthTable(d, tuple(b == "1" for b in bits)))
    if tag == "l":
        if len(header) != 2:
            raise FormatError(f"line {lineno}: expected 'l <t>'")
        t = parse_int(header[1], lineno)
        body = lines[1:]
        if len(body) != t:
            raise FormatError(f"header announces {t} partial orders, found {len(body)}")
        ples = []
        for ple_lineno, tokens in body:
            k = parse_int(tokens[0], ple_lineno)
            ids = tuple(parse_int(x, ple_lineno) for x in tokens[1:])
            if len(ids) != k:
                raise FormatError(f"line {ple_lineno}: announces {k} ids, found {len(ids)}")
            try:
                ples.append(PartialLinearExtension(ids))
            except MalformedOrder as exc:
                raise FormatError(f"line {ple_lineno}: {exc}") from exc
        return LocalRealizer(tuple(ples))
    raise FormatError(f"line {lineno}: unknown certificate tag {tag!r}")


def serialize_certificate(cert: Certificate) -> str:
    if isinstance(cert, Realizer):
        lines = [f"r {cert.size}"]
        lines.extend(_order_line(order) for order in cert.orders)
    elif isinstance(cert, BooleanRealizer):
        if isinstance(cert.phi, ClauseFormula):
            lines = [f"b {cert.size} cnf {len(cert.phi.clauses)}"]
            lines.extend(_order_line(order) for order in cert.orders)
            lines.extend("c " + " ".join(str(i) for i in clause) for clause in cert.phi.clauses)
        else:
            lines = [f"b {cert.size}"]
            lines.extend(_order_line(order) for order in cert.orders)
            lines.append(cert.phi.to_string())
    elif isinstance(cert, LocalRealizer):
        canonical = cert.canonical()
        lines = [f"l {canonical.size}"]
        lines.extend(" ".join([str(len(ple))] + [str(x) for x in ple.seq]) for ple in canonical.ples)
    else:
        raise TypeError(f"Not a certificate: {type(cert).__name__}")
    return "\n".join(lines) + "\n"


def read_certificate(path: str | Path) -> Certificate:
    return parse_certificate(Path(path).read_text(encoding="utf-8"))


def write_certificate(cert: Certificate, path: str | Path) -> None:
    Path(path).write_text(serialize_certificate(cert), encoding="utf-8")
    logger.debug("Wrote %s to %s", type(cert).__name__, path)


__all__ = [
    "Certificate",
    "parse_certificate",
    "read_certificate",
    "serialize_certificate",
    "write_certificate",
]
