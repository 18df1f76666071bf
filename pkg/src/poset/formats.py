"""Text formats for posets and digraphs.

Poset files::

    # comment
    p <n> <m>
    e <u> <v>        (m lines, cover u < v, 0-based ids)
    l <id> <label>   (optional)

Digraph files use ``g <nv> <m>`` followed by ``a <u> <v>`` lines.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Iterator, List, Tuple

from src.poset.core import Digraph, MalformedGraph, Poset, transitive_closure

logger = logging.getLogger(__name__)


class FormatError(ValueError):
    """Raised when a text file does not follow its format."""


def content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield ``(line number, tokens)`` for non-blank lines with ``#`` comments removed."""

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise FormatError(f"line {lineno}: expected an integer, got {token!r}") from exc


def _parse_header(tokens: List[str], lineno: int, tag: str) -> Tuple[int, int]:
    if len(tokens) != 3 or tokens[0] != tag:
        raise FormatError(f"line {lineno}: expected header '{tag} <count> <arcs>'")
    count, m = parse_int(tokens[1], lineno), parse_int(tokens[2], lineno)
    if count < 0 or m < 0:
        raise FormatError(f"line {lineno}: counts must be non-negative")
    return count, m


def parse_poset(text: str) -> Poset:
    """Parse a poset file; the order is the reflexive-transitive closure of its covers."""

    lines = list(content_lines(text))
    if not lines:
        raise FormatError("empty poset file")
    n, m = _parse_header(lines[0][1], lines[0][0], "p")
    arcs: List[Tuple[int, int]] = []
    labels: Dict[int, str] = {}
    raw_lines = text.splitlines()
    for lineno, tokens in lines[1:]:
        tag = tokens[0]
        if tag == "e":
            if len(tokens) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = parse_int(tokens[1], lineno), parse_int(tokens[2], lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"line {lineno}: element id out of range 0..{n - 1}")
            arcs.append((u, v))
        elif tag == "l":
            if len(tokens) < 3:
                raise FormatError(f"line {lineno}: expected 'l <id> <label>'")
            x = parse_int(tokens[1], lineno)
            if not 0 <= x < n:
                raise FormatError(f"line {lineno}: element id out of range 0..{n - 1}")
            body = raw_lines[lineno - 1].split("#", 1)[0].strip()
            labels[x] = body.split(None, 2)[2]
        else:
            raise FormatError(f"line {lineno}: unknown record {tag!r}")
    if len(arcs) != m:
        raise FormatError(f"header announces {m} covers, found {len(arcs)}")
    try:
        covers = Digraph(n, frozenset(arcs))
    except MalformedGraph as exc:
        raise FormatError(str(exc)) from exc
    poset = transitive_closure(covers, labels=labels)
    logger.debug("Parsed poset with %d elements and %d covers", n, m)
    return poset


def serialize_poset(p: Poset) -> str:
    """Canonical text: header, covers in lexicographic order, then labels by id."""

    covers = p.covers().sorted_arcs
    lines = [f"p {p.n} {len(covers)}"]
    lines.extend(f"e {u} {v}" for u, v in covers)
    lines.extend(f"l {x} {p.labels[x]}" for x in sorted(p.labels))
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    lines = list(content_lines(text))
    if not lines:
        raise FormatError("empty digraph file")
    nv, m = _parse_header(lines[0][1], lines[0][0], "g")
    arcs: List[Tuple[int, int]] = []
    for lineno, tokens in lines[1:]:
        if len(tokens) != 3 or tokens[0] != "a":
            raise FormatError(f"line {lineno}: expected 'a <u> <v>'")
        arcs.append((parse_int(tokens[1], lineno), parse_int(tokens[2], lineno)))
    if len(arcs) != m:
        raise FormatError(f"header announces {m} arcs, found {len(arcs)}")
    try:
        return Digraph(nv, frozenset(arcs))
    except MalformedGraph as exc:
        raise FormatError(str(exc)) from exc


def serialize_digraph(g: Digraph) -> str:
    arcs = g.sorted_arcs
    lines = [f"g {g.nv} {len(arcs)}"]
    lines.extend(f"a {u} {v}" for u, v in arcs)
    return "\n".join(lines) + "\n"


def read_poset(path: str | Path) -> Poset:
    return parse_poset(Path(path).read_text(encoding="utf-8"))


def write_poset(p: Poset, path: str | Path) -> None:
    Path(path).write_text(serialize_poset(p), encoding="utf-8")


def read_digraph(path: str | Path) -> Digraph:
    return parse_digraph(Path(path).read_text(encoding="utf-8"))


def write_digraph(g: Digraph, path: str | Path) -> None:
    Path(path).write_text(serialize_digraph(g), encoding="utf-8")


__all__ = [
    "FormatError",
    "content_lines",
    "parse_digraph",
    "parse_int",
    "parse_poset",
    "read_digraph",
    "read_poset",
    "serialize_digraph",
    "serialize_poset",
    "write_digraph",
    "write_poset",
]
