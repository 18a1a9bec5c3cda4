#! /usr/bin/env python3
"""
Module for reading and writing graphs.

Two text formats are supported:
- graph6: the standard printable encoding (one byte N(n) or "~" plus three
  bytes for n > 62, then the upper triangle column by column in 6-bit
  chunks, each offset by 63).
- edge list: "n m" on the first line, then one "u v" pair per line.
"""

import logging
from pathlib import Path

from .exceptions import GraphFormatError, InvalidEdgeError
from .file_information import FileInfo, create_file_info
from .graph_core import MAX_VERTICES, Graph, from_edge_list

logger = logging.getLogger(__name__)

GRAPH6_HEADER: str = ">>graph6<<"
_OFFSET: int = 63


def _upper_triangle_pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def serialize_graph6(g: Graph) -> str:
    """Encodes g as graph6 without header or trailing newline."""
    if g.n <= 62:
        out = [chr(g.n + _OFFSET)]
    else:
        out = ["~"] + [chr(((g.n >> shift) & 0x3F) + _OFFSET) for shift in (12, 6, 0)]
    chunk = 0
    width = 0
    for i, j in _upper_triangle_pairs(g.n):
        chunk = chunk << 1 | (g.adj[i] >> j & 1)
        width += 1
        if width == 6:
            out.append(chr(chunk + _OFFSET))
            chunk = 0
            width = 0
    if width:
        out.append(chr((chunk << (6 - width)) + _OFFSET))
    return "".join(out)


def _decode_byte(text: str, offset: int) -> int:
    value = ord(text[offset]) - _OFFSET
    if not 0 <= value <= 63:
        raise GraphFormatError(f"Byte {text[offset]!r} outside graph6 range", offset)
    return value


def _parse_order(text: str) -> tuple[int, int]:
    """Returns (n, index of the first triangle byte)."""
    if not text:
        raise GraphFormatError("Empty graph6 string", 0)
    if text[0] != "~":
        return _decode_byte(text, 0), 1
    if len(text) > 1 and text[1] == "~":
        raise GraphFormatError(f"Order above {MAX_VERTICES} is not supported", 1)
    if len(text) < 4:
        raise GraphFormatError("Truncated long-form order", len(text))
    n = 0
    for offset in (1, 2, 3):
        n = n << 6 | _decode_byte(text, offset)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"Order {n} exceeds limit {MAX_VERTICES}", 1)
    if n <= 62:
        raise GraphFormatError(f"Long form used for small order {n}", 1)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decodes a single graph6 string; a leading >>graph6<< header is accepted."""
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    n, start = _parse_order(text)
    bits = n * (n - 1) // 2
    expected = start + (bits + 5) // 6
    if len(text) != expected:
        raise GraphFormatError(
            f"Expected {expected} bytes for n={n}, got {len(text)}", min(len(text), expected)
        )
    rows = [0] * n
    pairs = _upper_triangle_pairs(n)
    for offset in range(start, expected):
        value = _decode_byte(text, offset)
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            pair = next(pairs, None)
            if pair is None:
                if bit:
                    raise GraphFormatError("Non-zero padding bits", offset)
                continue
            if bit:
                i, j = pair
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Parses the "n m\\nu v\\n..." format; blank lines and # comments are skipped."""
    lines = [
        (number, line.split("#", 1)[0].split())
        for number, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, fields) for number, fields in lines if fields]
    if not lines:
        raise GraphFormatError("Empty edge list")
    number, header = lines[0]
    try:
        n, m = (int(value) for value in header)
    except ValueError:
        raise GraphFormatError(f"Line {number}: header must be 'n m'") from None
    if not 0 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"Line {number}: order {n} outside 0..{MAX_VERTICES}")
    pairs: list[tuple[int, int]] = []
    for number, fields in lines[1:]:
        try:
            u, v = (int(value) for value in fields)
        except ValueError:
            raise GraphFormatError(f"Line {number}: edge must be 'u v'") from None
        pairs.append((u, v))
    if len(pairs) != m:
        raise GraphFormatError(f"Header announces {m} edges, found {len(pairs)}")
    try:
        return from_edge_list(n, pairs)
    except InvalidEdgeError as error:
        raise GraphFormatError(str(error)) from error


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _sniff_format(text: str) -> str:
    first = next((line.strip() for line in text.splitlines() if line.strip()), "")
    if first.startswith(GRAPH6_HEADER):
        return "graph6"
    return "edge-list" if len(first.split()) == 2 else "graph6"


def read_graph_file(path: Path | str) -> Graph:
    """Reads the first graph of a graph6 file or an edge-list file."""
    file_info: FileInfo = create_file_info(path)
    text = file_info.file_path.read_text(encoding="ascii")
    graph_format = file_info.graph_format or _sniff_format(text)
    logger.debug(f"Reading {file_info.file_name} as {graph_format}")
    if graph_format == "edge-list":
        return parse_edge_list(text)
    first = next((line for line in text.splitlines() if line.strip()), "")
    return parse_graph6(first)
